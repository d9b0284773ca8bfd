#include "isa/analyses.hpp"

#include "isa/errors.hpp"
#include "isa/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace isa {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);

void require_canonical_fgrid(const ComplexSignal& z, const FreqGrid& f, const char* who) {
    if (!(f == freq_grid_of(z.grid)))
        throw ContractError(std::string(who) +
                            ": frequency grid must be the canonical band of the signal grid");
}

// Analyses take the fractional order 0 < p < 2, i.e. gamma in (0, pi) with
// csc(gamma) > 0; a negative-sine angle would flip the sign of every
// fractional superprojection. The transform level still accepts +-gamma for
// inversion identities.
void require_analysis_angle(double gamma, const char* who) {
    if (!(std::sin(gamma) >= kMinAbsSinGamma))
        throw ContractError(std::string(who) + ": analysis angle must lie in (0, pi), got " +
                            std::to_string(gamma));
}

// Filterbank channels live on the circular DFT frequency axis, so estimated
// ray frequencies are defined modulo the band; wrapping (instead of dropping)
// keeps the filterbank-summation superprojection exact.
double wrap_to_band(double w, const FreqGrid& f) {
    const double width = f.n_w * f.dw;
    double x = std::fmod(w - f.w0, width);
    if (x < 0.0) x += width;
    if (x >= width) x -= width;
    return f.w0 + x;
}

} // namespace

const char* method_name(AnalysisMethod::Kind k) {
    switch (k) {
        case AnalysisMethod::Kind::FD: return "fd";
        case AnalysisMethod::Kind::FRFT: return "frft";
        case AnalysisMethod::Kind::SSTFT: return "sstft";
        case AnalysisMethod::Kind::SSTFRFT: return "sstfrft";
        case AnalysisMethod::Kind::TD: return "td";
        case AnalysisMethod::Kind::MC: return "mc";
        case AnalysisMethod::Kind::AS: return "as";
    }
    return "?";
}

void validate_method(const AnalysisMethod& m) {
    using K = AnalysisMethod::Kind;
    if ((m.kind == K::SSTFT || m.kind == K::SSTFRFT) && !(m.alpha > 0.0))
        throw ContractError(std::string("method ") + method_name(m.kind) +
                            ": alpha must be > 0, got " + std::to_string(m.alpha));
    if ((m.kind == K::FRFT || m.kind == K::SSTFRFT) && !(std::sin(m.gamma) >= kMinAbsSinGamma))
        throw ContractError(std::string("method ") + method_name(m.kind) +
                            ": unsupported angle gamma = " + std::to_string(m.gamma) +
                            " (need gamma in (0, pi))");
}

SparseIS fd_is(const ComplexSignal& z, const FreqGrid& f, int threads) {
    require_canonical_fgrid(z, f, "fd_is");
    const Spectrum Z = unitary_ft(z);
    SparseIS is = make_sparse_is(z.grid, f);
    const double scale = f.dw / kSqrt2Pi;
    detail::parallel_for(0, z.grid.n, threads, [&](int m) {
        const double t = z.grid.t(m);
        auto& col = is.columns[m];
        col.reserve(f.n_w);
        for (int k = 0; k < f.n_w; ++k) {
            const double w = f.w(k);
            col.push_back(Ray{RayKind::Delta, w, Z.values[k] * std::polar(scale, w * t)});
        }
    });
    return is;
}

DenseIS namias_field(const FracSpectrum& F, const TimeGrid& g, const FreqGrid& f, int threads) {
    DenseIS d;
    d.tgrid = g;
    d.fgrid = f;
    d.density.assign(static_cast<std::size_t>(g.n) * f.n_w, cplx{0.0, 0.0});

    const double r = F.r, cx = F.cx;

    // Z_gamma(u) carries the kernel chirp e^{j r u^2 / 2}, which oscillates by
    // many radians per u sample; interpolating it directly is meaningless.
    // Peel it off (G is the smooth projection of the chirp-demodulated signal)
    // and fold the closed-form phases analytically:
    //   Z(u_hat) conj(C) e^{j theta(t; u_hat)} / |cx| = G(u_hat) e^{j (w t + r t^2/2)}
    // using |C|^2 = 1/|sin| and |sin||cx| = 1, cx*u_hat = w + r t.
    const double sgn = F.gamma > 0.0 ? 1.0 : (F.gamma < 0.0 ? -1.0 : 0.0);
    const cplx inv_C = std::polar(std::sqrt(std::abs(std::sin(F.gamma))),
                                  kPi * sgn / 4.0 - F.gamma / 2.0);
    ComplexSignal gsig{make_time_grid(F.n, F.du, F.u0), std::vector<cplx>(F.n)};
    for (int k = 0; k < F.n; ++k) {
        const double u = F.u(k);
        gsig.samples[k] = F.values[k] * inv_C * std::polar(1.0, -0.5 * r * u * u);
    }

    // G(u_hat_k) with u_hat_k = u_k + r t / cx is the u axis under a uniform
    // shift; evaluate it exactly (band-limited periodic resampling) through
    // the shift theorem, one inverse transform per column. A pointwise
    // interpolation of the spectrum would lose the sharp matched-rate ridges
    // against the e^{j w t} phase and break the column reconstructions.
    const Spectrum H = unitary_ft(gsig);

    // G's conjugate content lies at -cx*t_l; for cx > 0 the t_l = t0 sample
    // sits exactly on the +pi/du edge, which the centered band stores as its
    // -pi/du alias. Shift with the true branch or the wrap column dephases.
    std::vector<double> xi(F.n);
    for (int l = 0; l < F.n; ++l) xi[l] = H.fgrid.w(l);
    if (cx > 0.0) xi[0] = -xi[0];

    detail::parallel_for(0, g.n, threads, [&](int m) {
        const double t = g.t(m);
        const double shift = r * t / cx;
        Spectrum Hs{H.fgrid, std::vector<cplx>(F.n)};
        for (int l = 0; l < F.n; ++l)
            Hs.values[l] = H.values[l] * std::polar(1.0, xi[l] * shift);
        const ComplexSignal shifted = unitary_ift(Hs, gsig.grid);
        const cplx chirp = std::polar(1.0, 0.5 * r * t * t);
        for (int k = 0; k < f.n_w; ++k) {
            const int j = cx > 0.0 ? k : F.n - 1 - k; // u axis stores increasing u
            d.density[d.idx(m, k)] = shifted.samples[j] * chirp * std::polar(1.0, f.w(k) * t);
        }
    });
    return d;
}

DenseIS frft_is(const ComplexSignal& z, double gamma, const FreqGrid& f, int threads) {
    require_canonical_fgrid(z, f, "frft_is");
    require_analysis_angle(gamma, "frft_is");
    return namias_field(frft(z, gamma), z.grid, f, threads);
}

SparseIS sstft_is(const ComplexSignal& z, double alpha, const FreqGrid& f, int threads) {
    require_canonical_fgrid(z, f, "sstft_is");
    const ChannelMatrix M = stft_gaussian(z, alpha, threads);
    SparseIS is = make_sparse_is(z.grid, f);
    const double scale = f.dw / (2.0 * kPi * M.w0);
    for (int m = 0; m < z.grid.n; ++m) {
        is.columns[m].reserve(M.n_ch());
        for (int j = 0; j < M.n_ch(); ++j) {
            const std::size_t i = M.idx(m, j);
            const double w = M.valid[i] ? M.if_est[i] : M.channels[j];
            push_ray(is, m, Ray{RayKind::Delta, wrap_to_band(w, f), scale * M.values[i]});
        }
    }
    return is;
}

SparseIS sstfrft_is(const ComplexSignal& z, double alpha, double gamma, const FreqGrid& f,
                    int threads) {
    require_canonical_fgrid(z, f, "sstfrft_is");
    require_analysis_angle(gamma, "sstfrft_is");
    const ChannelMatrix M = stfrft(z, alpha, gamma, threads);
    const double r  = std::cos(gamma) / std::sin(gamma);
    const double cx = 1.0 / std::sin(gamma);
    const double du = f.dw / std::abs(cx);
    SparseIS is = make_sparse_is(z.grid, f);
    const double scale = cx * du / (2.0 * kPi * M.w0);
    for (int m = 0; m < z.grid.n; ++m) {
        const double t = z.grid.t(m);
        is.columns[m].reserve(M.n_ch());
        for (int j = 0; j < M.n_ch(); ++j) {
            const std::size_t i = M.idx(m, j);
            const double w = M.valid[i] ? M.if_est[i] : cx * M.channels[j] - r * t;
            push_ray(is, m, Ray{RayKind::Delta, wrap_to_band(w, f), scale * M.values[i]});
        }
    }
    return is;
}

SparseIS td_is(const ComplexSignal& z, const FreqGrid& f) {
    SparseIS is = make_sparse_is(z.grid, f);
    for (int m = 0; m < z.grid.n; ++m)
        is.columns[m].push_back(Ray{RayKind::UniformBand, 0.0, z.samples[m]});
    return is;
}

SparseIS mc_is(const ComplexSignal& z, const FreqGrid& f) {
    const CanonicalTriplet d = demodulate(z);
    const auto& omega = std::get<SampledIF>(d.iff).values;
    SparseIS is = make_sparse_is(z.grid, f);
    for (int m = 0; m < z.grid.n; ++m)
        push_ray(is, m, Ray{RayKind::Delta, omega[m], z.samples[m]});
    return is;
}

SparseIS as_is(const std::vector<double>& x, const TimeGrid& g, const FreqGrid& f) {
    return mc_is(analytic_signal(x, g), f);
}

DenseIS analyze_dense(const ComplexSignal& z, const AnalysisMethod& m, const FreqGrid& f,
                      int threads) {
    validate_method(m);
    using K = AnalysisMethod::Kind;
    switch (m.kind) {
        case K::FD:      return rasterize(fd_is(z, f, threads));
        case K::FRFT:    return frft_is(z, m.gamma, f, threads);
        case K::SSTFT:   return rasterize(sstft_is(z, m.alpha, f, threads));
        case K::SSTFRFT: return rasterize(sstfrft_is(z, m.alpha, m.gamma, f, threads));
        case K::TD:      return rasterize(td_is(z, f));
        case K::MC:      return rasterize(mc_is(z, f));
        case K::AS: {
            double peak = 0.0, imag_peak = 0.0;
            for (const cplx& v : z.samples) {
                peak = std::max(peak, std::abs(v));
                imag_peak = std::max(imag_peak, std::abs(v.imag()));
            }
            if (imag_peak > 1e-9 * std::max(peak, 1e-300))
                throw ContractError("as: input signal is not real");
            std::vector<double> x(z.samples.size());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = z.samples[i].real();
            return rasterize(as_is(x, z.grid, f));
        }
    }
    throw ContractError("analyze_dense: unknown method");
}

} // namespace isa
