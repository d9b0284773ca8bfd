#include "isa/fft.hpp"

#include "isa/errors.hpp"

#include <cmath>
#include <numbers>
#include <thread>

namespace isa::detail {

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw ContractError("fft: length must be a power of two, got " + std::to_string(n));
    if (n == 1) return;

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    // Twiddles e^{-+j*2*pi*k/n} for k < n/2, each from one polar call so the
    // table error stays at the ulp level instead of accumulating.
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<std::complex<double>> tw(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
        tw[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                                    static_cast<double>(n));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * tw[k * stride];
                a[i + k]           = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

void parallel_for(int begin, int end, int threads, const std::function<void(int)>& fn) {
    const int total = end - begin;
    if (total <= 0) return;
    if (threads <= 1 || total == 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    const int workers = std::min(threads, total);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const int lo = begin + static_cast<int>(static_cast<long long>(total) * w / workers);
        const int hi = begin + static_cast<int>(static_cast<long long>(total) * (w + 1) / workers);
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace isa::detail
