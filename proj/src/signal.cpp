#include "isa/signal.hpp"

#include "isa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace isa {

namespace {

constexpr double kPi = std::numbers::pi;

void check_length(std::size_t got, int want, const char* what) {
    if (got != static_cast<std::size_t>(want))
        throw ContractError(std::string(what) + " descriptor length " + std::to_string(got) +
                            " does not match grid n = " + std::to_string(want));
}

} // namespace

std::vector<double> ia_samples(const IADescriptor& ia, const TimeGrid& g) {
    std::vector<double> a(g.n);
    if (const auto* c = std::get_if<ConstantIA>(&ia)) {
        if (c->value < 0.0)
            throw ContractError("IA must be nonnegative, got constant " + std::to_string(c->value));
        std::fill(a.begin(), a.end(), c->value);
    } else if (const auto* p = std::get_if<GaussianPulseIA>(&ia)) {
        if (p->peak < 0.0)
            throw ContractError("IA pulse peak must be nonnegative, got " + std::to_string(p->peak));
        if (!(p->alpha > 0.0))
            throw ContractError("IA pulse alpha must be > 0, got " + std::to_string(p->alpha));
        for (int m = 0; m < g.n; ++m) {
            const double d = g.t(m) - p->center;
            a[m] = p->peak * std::exp(-p->alpha * p->alpha * d * d);
        }
    } else {
        const auto& s = std::get<SampledIA>(ia);
        check_length(s.values.size(), g.n, "IA");
        for (int m = 0; m < g.n; ++m) {
            if (s.values[m] < 0.0)
                throw ContractError("IA sample " + std::to_string(m) + " is negative: " +
                                    std::to_string(s.values[m]));
        }
        a = s.values;
    }
    return a;
}

std::vector<double> if_samples(const IFDescriptor& iff, const TimeGrid& g) {
    std::vector<double> w(g.n);
    if (const auto* c = std::get_if<ConstantIF>(&iff)) {
        std::fill(w.begin(), w.end(), c->omega0);
    } else if (const auto* l = std::get_if<LinearIF>(&iff)) {
        if (!std::isfinite(l->slope))
            throw ContractError("IF slope must be finite");
        for (int m = 0; m < g.n; ++m) w[m] = l->omega0 + l->slope * g.t(m);
    } else {
        const auto& s = std::get<SampledIF>(iff);
        check_length(s.values.size(), g.n, "IF");
        w = s.values;
    }
    return w;
}

ComplexSignal synthesize_component(const CanonicalTriplet& c, const TimeGrid& g) {
    const std::vector<double> a = ia_samples(c.ia, g);

    // Phase Theta(t) = antiderivative of the IF, anchored to Theta(0) = 0 so
    // that phi keeps its meaning as the argument at the t~0 sample.
    std::vector<double> theta(g.n);
    if (const auto* cf = std::get_if<ConstantIF>(&c.iff)) {
        for (int m = 0; m < g.n; ++m) theta[m] = cf->omega0 * g.t(m);
    } else if (const auto* lf = std::get_if<LinearIF>(&c.iff)) {
        for (int m = 0; m < g.n; ++m) {
            const double t = g.t(m);
            theta[m] = lf->omega0 * t + 0.5 * lf->slope * t * t;
        }
    } else {
        const std::vector<double> w = if_samples(c.iff, g);
        theta[0] = 0.0;
        for (int m = 1; m < g.n; ++m)
            theta[m] = theta[m - 1] + 0.5 * g.dt * (w[m - 1] + w[m]);
        const double ref = theta[g.zero_index()];
        for (double& th : theta) th -= ref;
    }

    ComplexSignal z{g, std::vector<cplx>(g.n)};
    for (int m = 0; m < g.n; ++m) z.samples[m] = std::polar(a[m], theta[m] + c.phi);
    return z;
}

ComplexSignal synthesize_signal(const ParamSet& s, const TimeGrid& g) {
    if (s.triplets.empty())
        throw ContractError("synthesize_signal: parameter set is empty");
    ComplexSignal z{g, std::vector<cplx>(g.n, cplx{0.0, 0.0})};
    for (const auto& c : s.triplets) {
        const ComplexSignal part = synthesize_component(c, g);
        for (int m = 0; m < g.n; ++m) z.samples[m] += part.samples[m];
    }
    return z;
}

std::vector<double> unwrap_phase(const std::vector<double>& phase) {
    std::vector<double> out(phase.size());
    if (phase.empty()) return out;
    out[0] = phase[0];
    double offset = 0.0;
    for (std::size_t m = 1; m < phase.size(); ++m) {
        const double jump = phase[m] - phase[m - 1];
        if (jump > kPi)
            offset -= 2.0 * kPi * std::floor((jump + kPi) / (2.0 * kPi));
        else if (jump < -kPi)
            offset += 2.0 * kPi * std::floor((-jump + kPi) / (2.0 * kPi));
        out[m] = phase[m] + offset;
    }
    return out;
}

CanonicalTriplet demodulate(const ComplexSignal& z) {
    const int n = z.grid.n;
    if (static_cast<int>(z.samples.size()) != n)
        throw ContractError("demodulate: sample count does not match grid");

    std::vector<double> mag(n);
    double max_mag = 0.0;
    for (int m = 0; m < n; ++m) {
        mag[m] = std::abs(z.samples[m]);
        max_mag = std::max(max_mag, mag[m]);
    }
    const double floor = kMagFloorRatio * max_mag;
    for (int m = 1; m < n - 1; ++m) {
        if (mag[m] <= floor)
            throw NumericError("demodulate: sample " + std::to_string(m) +
                               " magnitude " + std::to_string(mag[m]) +
                               " is at or below the magnitude floor; phase is undefined");
    }

    std::vector<double> phase(n);
    for (int m = 0; m < n; ++m) phase[m] = std::arg(z.samples[m]);
    phase = unwrap_phase(phase);

    std::vector<double> omega(n);
    const double dt = z.grid.dt;
    omega[0] = (phase[1] - phase[0]) / dt;
    for (int m = 1; m < n - 1; ++m) omega[m] = (phase[m + 1] - phase[m - 1]) / (2.0 * dt);
    omega[n - 1] = (phase[n - 1] - phase[n - 2]) / dt;

    const double phi = std::arg(z.samples[z.grid.zero_index()]);
    return CanonicalTriplet{SampledIA{std::move(mag)}, SampledIF{std::move(omega)}, phi};
}

ComplexSignal quadratic_chirplet(double alpha, double r, const TimeGrid& g) {
    if (alpha < 0.0)
        throw ContractError("quadratic_chirplet: alpha must be >= 0, got " + std::to_string(alpha));
    ComplexSignal z{g, std::vector<cplx>(g.n)};
    for (int m = 0; m < g.n; ++m) {
        const double t = g.t(m);
        z.samples[m] = std::polar(std::exp(-alpha * alpha * t * t), -0.5 * r * t * t);
    }
    return z;
}

cplx chirplet_limit_integral(double beta, double omega_bar, const TimeGrid& g) {
    if (!(beta > 0.0))
        throw ContractError("chirplet_limit_integral: beta must be > 0");
    const double t_first = g.t(0);
    const double t_last  = g.t(g.n - 1);
    const double tail = std::max(std::exp(-0.5 * beta * beta * t_first * t_first),
                                 std::exp(-0.5 * beta * beta * t_last * t_last));
    if (!(tail < 1e-12))
        throw NumericError("chirplet_limit_integral: grid does not support beta = " +
                           std::to_string(beta) + " (envelope " + std::to_string(tail) +
                           " at an endpoint, need < 1e-12)");

    const double scale = beta / std::sqrt(2.0 * kPi);
    cplx sum{0.0, 0.0};
    cplx ends{0.0, 0.0};
    for (int m = 0; m < g.n; ++m) {
        const double t = g.t(m);
        const cplx v = std::polar(scale * std::exp(-0.5 * beta * beta * t * t),
                                  -0.5 * beta * t * t + omega_bar * t);
        sum += v;
        if (m == 0 || m == g.n - 1) ends += v;
    }
    return g.dt * (sum - 0.5 * ends);
}

} // namespace isa
