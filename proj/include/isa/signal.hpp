#pragma once

#include "isa/grid.hpp"

#include <complex>
#include <variant>
#include <vector>

namespace isa {

using cplx = std::complex<double>;

/// Instantaneous-amplitude descriptor of one AM-FM component.
struct ConstantIA {
    double value = 0.0; // >= 0
};
struct GaussianPulseIA {
    double peak   = 0.0; // >= 0
    double alpha  = 0.0; // 1/s, > 0
    double center = 0.0; // s
};
struct SampledIA {
    std::vector<double> values; // one per grid sample, all >= 0
};
using IADescriptor = std::variant<ConstantIA, GaussianPulseIA, SampledIA>;

/// Instantaneous-frequency descriptor (rad/s).
struct ConstantIF {
    double omega0 = 0.0;
};
struct LinearIF {
    double omega0 = 0.0; // value at t = 0
    double slope  = 0.0; // rad/s^2, w(t) = omega0 + slope*t
};
struct SampledIF {
    std::vector<double> values; // one per grid sample
};
using IFDescriptor = std::variant<ConstantIF, LinearIF, SampledIF>;

/// Canonical triplet (IA, IF, phase reference). The phase is anchored so that
/// the component's argument at the sample nearest t = 0 equals phi.
struct CanonicalTriplet {
    IADescriptor ia;
    IFDescriptor iff;
    double       phi = 0.0;
};

/// Ordered set of canonical triplets describing one signal.
struct ParamSet {
    std::vector<CanonicalTriplet> triplets;
};

/// Complex samples on a uniform time grid.
struct ComplexSignal {
    TimeGrid          grid;
    std::vector<cplx> samples;
};

/// Near-zero samples whose phase is numerically meaningless: demodulation
/// rejects any interior sample with |z| <= kMagFloorRatio * max|z|.
inline constexpr double kMagFloorRatio = 1e-8;

/// IA samples of a descriptor on a grid. Rejects negative values and length
/// mismatches.
std::vector<double> ia_samples(const IADescriptor& ia, const TimeGrid& g);

/// IF samples of a descriptor on a grid.
std::vector<double> if_samples(const IFDescriptor& iff, const TimeGrid& g);

/// psi(t_m) = a(t_m) * exp(j*(Theta(t_m) + phi)) where Theta is the IF
/// antiderivative with Theta(0) = 0 (analytic for Constant/Linear IF,
/// cumulative trapezoid re-anchored at the t~0 sample for Sampled IF).
ComplexSignal synthesize_component(const CanonicalTriplet& c, const TimeGrid& g);

/// Pointwise sum of synthesize_component over a nonempty set.
ComplexSignal synthesize_signal(const ParamSet& s, const TimeGrid& g);

/// Unwraps successive jumps of magnitude > pi by +-2*pi multiples.
std::vector<double> unwrap_phase(const std::vector<double>& phase);

/// AM-FM demodulation: a_hat = |z|, phase unwrapped then differentiated by
/// central differences (one-sided at the endpoints), phi_hat = arg z at the
/// sample nearest t = 0. Returns a (Sampled, Sampled, phi) triplet.
CanonicalTriplet demodulate(const ComplexSignal& z);

/// psi(t) = exp(-alpha^2 t^2) * exp(-j r t^2 / 2), evaluated per sample.
ComplexSignal quadratic_chirplet(double alpha, double r, const TimeGrid& g);

/// Trapezoid quadrature of the unit-impulse limit component
/// (beta/sqrt(2*pi)) exp(-beta^2 t^2 / 2) exp(j*theta), theta' = -beta*t + omega_bar,
/// theta(0) = 0. Requires exp(-beta^2 t^2 / 2) < 1e-12 at both grid endpoints.
cplx chirplet_limit_integral(double beta, double omega_bar, const TimeGrid& g);

} // namespace isa
