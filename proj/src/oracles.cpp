#include "isa/oracles.hpp"

#include "isa/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace isa {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);

void check_kind(const ExampleKind& k, const TimeGrid& g) {
    const FreqGrid f = freq_grid_of(g);
    const bool needs_omega0 = k.tag != ExampleKind::Tag::Impulse;
    if (needs_omega0 && !(k.omega0 >= f.band_lo() && k.omega0 < f.band_hi()))
        throw ContractError("example: omega0 = " + std::to_string(k.omega0) +
                            " lies outside the band [" + std::to_string(f.band_lo()) + ", " +
                            std::to_string(f.band_hi()) + ")");
    if (k.tag == ExampleKind::Tag::GaussAM && !(k.alpha0 > 0.0))
        throw ContractError("example: alpha0 must be > 0 for the Gaussian AM kind");
    if (!std::isfinite(k.r0) || !std::isfinite(k.alpha0) || !std::isfinite(k.omega0))
        throw ContractError("example: parameters must be finite");
}

ParamSet example_triplets(const ExampleKind& k) {
    switch (k.tag) {
        case ExampleKind::Tag::SHC:
            return ParamSet{{CanonicalTriplet{ConstantIA{1.0}, ConstantIF{k.omega0}, 0.0}}};
        case ExampleKind::Tag::LinearFM:
            return ParamSet{{CanonicalTriplet{ConstantIA{1.0}, LinearIF{k.omega0, -k.r0}, 0.0}}};
        case ExampleKind::Tag::GaussAM:
            return ParamSet{
                {CanonicalTriplet{GaussianPulseIA{1.0, k.alpha0, 0.0}, ConstantIF{k.omega0}, 0.0}}};
        default:
            throw ContractError("the unit impulse cannot be expressed with a component triplet");
    }
}

// Dense matrix filled from a closed-form density density(t_m, w_k).
template <typename Fn>
DenseIS dense_from(const TimeGrid& g, const FreqGrid& f, Fn&& density) {
    DenseIS d;
    d.tgrid = g;
    d.fgrid = f;
    d.density.resize(static_cast<std::size_t>(g.n) * f.n_w);
    for (int m = 0; m < g.n; ++m)
        for (int k = 0; k < f.n_w; ++k) d.density[d.idx(m, k)] = density(g.t(m), f.w(k));
    return d;
}

[[noreturn]] void unsupported(const ExampleKind& k, const AnalysisMethod& m) {
    throw ContractError(std::string("oracle_is: unsupported pair (") + example_name(k.tag) +
                        ", " + method_name(m.kind) + ") - no closed-form table row");
}

} // namespace

const char* example_name(ExampleKind::Tag t) {
    switch (t) {
        case ExampleKind::Tag::SHC: return "shc";
        case ExampleKind::Tag::Impulse: return "impulse";
        case ExampleKind::Tag::LinearFM: return "lfm";
        case ExampleKind::Tag::GaussAM: return "gaussam";
    }
    return "?";
}

Example example_signal(const ExampleKind& k, const TimeGrid& g) {
    check_kind(k, g);
    if (k.tag == ExampleKind::Tag::Impulse) {
        ComplexSignal z{g, std::vector<cplx>(g.n, cplx{0.0, 0.0})};
        z.samples[g.zero_index()] = cplx{1.0 / g.dt, 0.0};
        return Example{std::move(z), std::nullopt};
    }
    ParamSet s = example_triplets(k);
    return Example{synthesize_signal(s, g), std::move(s)};
}

DenseIS synthesis_is(const ExampleKind& k, const TimeGrid& g, const FreqGrid& f) {
    const Example ex = example_signal(k, g);
    if (!ex.triplets) return rasterize(td_is(ex.signal, f));
    return rasterize(is_from_paramset(*ex.triplets, g, f));
}

DenseIS oracle_is(const ExampleKind& k, const AnalysisMethod& m, const TimeGrid& g,
                  const FreqGrid& f) {
    check_kind(k, g);
    validate_method(m);
    using K = AnalysisMethod::Kind;
    using T = ExampleKind::Tag;

    if (m.kind == K::FRFT) {
        // Convention-safe route for every kind: quadrature transform into the
        // Namias closed form.
        const Example ex = example_signal(k, g);
        return namias_field(brute_frft(ex.signal, m.gamma), g, f);
    }

    switch (k.tag) {
        case T::SHC: {
            const Example ex = example_signal(k, g);
            switch (m.kind) {
                case K::FD:
                case K::MC:
                case K::SSTFT: // c_a = sqrt(2*pi): FBS reassigns the tone exactly
                    return synthesis_is(k, g, f);
                case K::TD:
                    return rasterize(td_is(ex.signal, f));
                default: unsupported(k, m);
            }
        }
        case T::Impulse: {
            const Example ex = example_signal(k, g);
            switch (m.kind) {
                case K::FD:
                    // Z(w) = 1/sqrt(2*pi): flat density e^{jwt}/sqrt(2*pi).
                    return dense_from(g, f, [](double t, double w) {
                        return std::polar(1.0 / kSqrt2Pi, w * t);
                    });
                case K::SSTFT: {
                    const double a2 = m.alpha * m.alpha;
                    return dense_from(g, f, [a2](double t, double w) {
                        return std::polar(std::exp(-a2 * t * t) / kSqrt2Pi, w * t);
                    });
                }
                case K::TD:
                    return rasterize(td_is(ex.signal, f));
                case K::MC: {
                    // sqrt(2*pi) delta(t) delta(w) on the discrete carriers.
                    DenseIS d;
                    d.tgrid = g;
                    d.fgrid = f;
                    d.density.assign(static_cast<std::size_t>(g.n) * f.n_w, cplx{0.0, 0.0});
                    const int m0 = g.zero_index();
                    const int k0 = static_cast<int>(std::ceil(-f.w0 / f.dw - 0.5));
                    d.density[d.idx(m0, k0)] = cplx{kSqrt2Pi / (g.dt * f.dw), 0.0};
                    return d;
                }
                default: unsupported(k, m);
            }
        }
        case T::LinearFM: {
            const Example ex = example_signal(k, g);
            switch (m.kind) {
                case K::FD: {
                    // Exact oracle: quadrature FT into S = Z(w) e^{jwt}. The
                    // table's stationary-phase form is an asymptotic target
                    // checked separately in magnitude only.
                    const Spectrum Z = brute_ft(ex.signal, f);
                    DenseIS d;
                    d.tgrid = g;
                    d.fgrid = f;
                    d.density.resize(static_cast<std::size_t>(g.n) * f.n_w);
                    for (int mi = 0; mi < g.n; ++mi)
                        for (int ki = 0; ki < f.n_w; ++ki)
                            d.density[d.idx(mi, ki)] =
                                Z.values[ki] * std::polar(1.0, f.w(ki) * g.t(mi));
                    return d;
                }
                case K::TD:
                    return rasterize(td_is(ex.signal, f));
                case K::MC:
                    return synthesis_is(k, g, f);
                default: unsupported(k, m);
            }
        }
        case T::GaussAM: {
            const Example ex = example_signal(k, g);
            const double a0 = k.alpha0, w0c = k.omega0;
            switch (m.kind) {
                case K::FD:
                    return dense_from(g, f, [a0, w0c](double t, double w) {
                        const double d = w - w0c;
                        return std::polar(
                            std::exp(-d * d / (4.0 * a0 * a0)) / (std::sqrt(2.0) * a0), w * t);
                    });
                case K::SSTFT: {
                    const double kap2 = 2.0 * a0 * a0 * m.alpha * m.alpha /
                                        (a0 * a0 + m.alpha * m.alpha);
                    const double s2 = a0 * a0 * kap2 / (m.alpha * m.alpha);
                    const double c  = kSqrt2Pi / std::sqrt(s2); // forced by superprojection
                    return dense_from(g, f, [=](double t, double w) {
                        const double d = w - w0c;
                        return std::polar(
                            (c / kSqrt2Pi) * std::exp(-0.5 * kap2 * t * t) *
                                std::exp(-d * d / (2.0 * s2)),
                            w * t);
                    });
                }
                case K::TD:
                    return rasterize(td_is(ex.signal, f));
                case K::MC:
                    return synthesis_is(k, g, f);
                default: unsupported(k, m);
            }
        }
    }
    unsupported(k, m);
}

AnalysisReport oracle_recon_check(const ExampleKind& k, const AnalysisMethod& m,
                                  const TimeGrid& g, const FreqGrid& f, int threads) {
    const DenseIS truth = oracle_is(k, m, g, f);
    const Example ex = example_signal(k, g);
    const DenseIS est = analyze_dense(ex.signal, m, f, threads);
    return is_metrics(truth, est, ex.signal);
}

} // namespace isa
