#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace isa::detail {

/// In-place radix-2 DIT transform, unscaled: forward kernel e^{-j2*pi*km/n},
/// inverse kernel e^{+j2*pi*km/n} (no 1/n). n must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

/// Runs fn(i) for i in [begin, end) split into contiguous chunks across up to
/// `threads` worker threads. fn must write only to i-indexed slots, so the
/// result is identical for any thread count. threads <= 1 runs inline.
void parallel_for(int begin, int end, int threads, const std::function<void(int)>& fn);

} // namespace isa::detail
