#pragma once

#include "isa/signal.hpp"

#include <cstdint>
#include <vector>

namespace isa {

/// Frequency-domain values on a FreqGrid.
struct Spectrum {
    FreqGrid          fgrid;
    std::vector<cplx> values;
};

/// Fractional spectrum Z_gamma(u) on a uniform, increasing u axis. The axis is
/// matched to the signal grid so that cx*u_k lands on the centered frequency
/// bins; du = dw/|cx|.
struct FracSpectrum {
    double            gamma = 0.0;
    double            r     = 0.0; // cot(gamma)
    double            cx    = 0.0; // csc(gamma)
    int               n     = 0;
    double            u0    = 0.0;
    double            du    = 0.0;
    std::vector<cplx> values;

    double u(int k) const { return u0 + k * du; }
};

/// Filterbank output: values and estimated instantaneous frequency per
/// (time sample, channel). Channels are nu (rad/s) for the STFT and u for the
/// STFrFT; entries with |value| <= kMagThresholdRatio * max|value| are marked
/// invalid and their if_est slot is meaningless.
struct ChannelMatrix {
    TimeGrid             tgrid;
    std::vector<double>  channels;
    std::vector<cplx>    values; // time-major: values[m * n_ch + j]
    std::vector<double>  if_est; // rad/s, total instantaneous frequency
    std::vector<uint8_t> valid;
    double               window_alpha = 0.0;
    double               w0           = 1.0; // window value at t = 0

    int n_ch() const { return static_cast<int>(channels.size()); }
    std::size_t idx(int m, int j) const {
        return static_cast<std::size_t>(m) * channels.size() + static_cast<std::size_t>(j);
    }
};

/// Filterbank entries below this fraction of the matrix maximum carry no
/// usable phase-derivative information.
inline constexpr double kMagThresholdRatio = 1e-4;

/// Angles with |sin(gamma)| below this are rejected by the fractional paths.
inline constexpr double kMinAbsSinGamma = 1e-3;

/// Unitary Fourier transform Z(w_k) = (dt/sqrt(2*pi)) * sum_m z(t_m) e^{-j w_k t_m}
/// on the canonical centered FreqGrid, via FFT with explicit t0/w0 phase
/// corrections. Requires a power-of-two grid.
Spectrum unitary_ft(const ComplexSignal& z);

/// Inverse of unitary_ft: z(t_m) = (dw/sqrt(2*pi)) * sum_k Z(w_k) e^{+j w_k t_m}.
ComplexSignal unitary_ift(const Spectrum& Z, const TimeGrid& g);

/// O(n^2) quadrature oracle for unitary_ft. Under the periodic boundary model
/// the full-period trapezoid rule is the plain scaled sum, so this evaluates
/// (dt/sqrt(2*pi)) * sum_m z(t_m) e^{-j w_k t_m} directly for any grids.
Spectrum brute_ft(const ComplexSignal& z, const FreqGrid& fgrid);

/// Periodic convolution on a common grid, scaled by dt:
/// h(t_m) = dt * sum_l f(t_l) g(t_m - t_l) with g extended (n*dt)-periodically.
ComplexSignal circ_convolve(const ComplexSignal& f, const ComplexSignal& g);

/// Fractional Fourier transform at angle gamma of the kernel
/// C_gamma e^{-j theta_gamma(t;u)}, theta = -(r/2)t^2 + cx*u*t - (r/2)u^2,
/// r = cot(gamma), cx = csc(gamma). Fast chirp-multiply / FFT / chirp-multiply
/// factorization on the matched u grid.
FracSpectrum frft(const ComplexSignal& z, double gamma);

/// Direct O(n^2) quadrature of the same kernel on the same u grid; the test
/// seam for frft.
FracSpectrum brute_frft(const ComplexSignal& z, double gamma);

/// View of a fractional spectrum as a signal on its u axis (for composing
/// transforms, e.g. the inversion identity frft(frft(z, gamma), -gamma)).
ComplexSignal frac_as_signal(const FracSpectrum& F);

/// Analytic extension of a real signal: doubles strictly positive bins, keeps
/// the DC and most-negative (Nyquist) bins at unit weight, zeroes the rest.
ComplexSignal analytic_signal(const std::vector<double>& x, const TimeGrid& g);

/// Gaussian-window filterbank STFT, w(t) = exp(-alpha^2 t^2), channels on the
/// centered frequency bins. if_est(t,nu) = nu + Im{Z_w'(t;nu) / Z_w(t;nu)} with
/// the derivative window w'(t) = -2 alpha^2 t w(t).
ChannelMatrix stft_gaussian(const ComplexSignal& z, double alpha, int threads = 1);

/// Fractional convolution f *_gamma h = e^{-j r t^2/2} [(f e^{j r t^2/2}) * h]
/// with the periodic dt-scaled convolution.
ComplexSignal frac_convolve(const ComplexSignal& f, const ComplexSignal& h, double gamma);

/// Gaussian-window STFrFT: values V(t,u) = z *_gamma (w e^{j cx u t}) on
/// channels u_j with cx*u_j on the frequency bins. if_est holds the total
/// instantaneous frequency Im{dV/dt / V} with
/// dV/dt = (-j r t + j cx u) V + e^{-j r t^2/2} [(z e^{j r t^2/2}) * (w' e^{j cx u t})].
ChannelMatrix stfrft(const ComplexSignal& z, double alpha, double gamma, int threads = 1);

} // namespace isa
