#pragma once

#include "isa/atom_field.hpp"
#include "isa/transforms.hpp"

namespace isa {

/// One of the seven analyses. alpha is the Gaussian window parameter of the
/// filterbank methods; gamma the fractional angle.
struct AnalysisMethod {
    enum class Kind { FD, FRFT, SSTFT, SSTFRFT, TD, MC, AS };
    Kind   kind  = Kind::FD;
    double alpha = 0.0;
    double gamma = 0.0;
};

const char* method_name(AnalysisMethod::Kind k);

/// Parameter-range validation per the transform contracts.
void validate_method(const AnalysisMethod& m);

/// Frequency-domain IS: one Delta ray per bin per column with weight
/// Z(w_k) e^{j w_k t_m} dw / sqrt(2*pi) (a Fourier component sample value).
SparseIS fd_is(const ComplexSignal& z, const FreqGrid& f, int threads = 1);

/// Dense evaluation of the Namias closed form
/// S(t,w) = Z_gamma(u_hat) conj(C_gamma) e^{j theta_gamma(t; u_hat)} / |cx|,
/// u_hat = (w + r t)/cx, with Z_gamma interpolated linearly in u. Shared by the
/// fast analysis (frft) and the quadrature oracle (brute_frft).
DenseIS namias_field(const FracSpectrum& F, const TimeGrid& g, const FreqGrid& f,
                     int threads = 1);

/// Fractional-Fourier IS via the fast transform.
DenseIS frft_is(const ComplexSignal& z, double gamma, const FreqGrid& f, int threads = 1);

/// Synchrosqueezed STFT IS: valid entries put a Delta ray at the estimated
/// instantaneous frequency, invalid entries keep their channel frequency, so
/// superprojection remains the exact filterbank summation.
SparseIS sstft_is(const ComplexSignal& z, double alpha, const FreqGrid& f, int threads = 1);

/// Synchrosqueezed STFrFT IS; invalid entries stay on the channel's Namias
/// line cx*u - r*t.
SparseIS sstfrft_is(const ComplexSignal& z, double alpha, double gamma, const FreqGrid& f,
                    int threads = 1);

/// Time-domain IS: one UniformBand ray per column weighted by z(t_m).
SparseIS td_is(const ComplexSignal& z, const FreqGrid& f);

/// Monocomponent IS: one Delta ray per column at the demodulated IF.
SparseIS mc_is(const ComplexSignal& z, const FreqGrid& f);

/// Monocomponent IS of the analytic extension of a real signal.
SparseIS as_is(const std::vector<double>& x, const TimeGrid& g, const FreqGrid& f);

/// Runs a method end to end and rasterizes sparse results. For AS the input
/// must be real up to 1e-9 of its peak magnitude.
DenseIS analyze_dense(const ComplexSignal& z, const AnalysisMethod& m, const FreqGrid& f,
                      int threads = 1);

} // namespace isa
