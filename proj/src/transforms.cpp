#include "isa/transforms.hpp"

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

void require_fast_grid(const TimeGrid& g, const char* who) {
    if (!is_power_of_two(g.n))
        throw ContractError(std::string(who) + ": grid n must be a power of two, got " +
                            std::to_string(g.n));
}

// The filterbank shift identity UFT{w e^{j nu_j t}}(w_k) = W(w_{k-j}) is
// exactly circular only when the grid origin is sample-aligned (t0/dt integer).
void require_aligned_grid(const TimeGrid& g, const char* who) {
    const double ratio = g.t0 / g.dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9)
        throw ContractError(std::string(who) +
                            ": grid origin must be an integer multiple of dt (t0/dt = " +
                            std::to_string(ratio) + ")");
}

void check_angle(double gamma, const char* who) {
    if (!(std::abs(std::sin(gamma)) >= kMinAbsSinGamma))
        throw ContractError(std::string(who) + ": unsupported angle gamma = " +
                            std::to_string(gamma) + " (|sin gamma| < 1e-3)");
}

cplx frft_front_constant(double gamma) {
    const double sgn = gamma > 0.0 ? 1.0 : (gamma < 0.0 ? -1.0 : 0.0);
    return std::polar(1.0 / std::sqrt(std::abs(std::sin(gamma))),
                      -(kPi * sgn / 4.0 - gamma / 2.0));
}

} // namespace

Spectrum unitary_ft(const ComplexSignal& z) {
    require_fast_grid(z.grid, "unitary_ft");
    const int n = z.grid.n;
    if (static_cast<int>(z.samples.size()) != n)
        throw ContractError("unitary_ft: sample count does not match grid");
    const FreqGrid f = freq_grid_of(z.grid);

    // e^{-j w_k t_m} = e^{-j w_k t0} * (-1)^m * e^{-j 2 pi k m / n} on the
    // centered band (w0 = -(n/2) dw).
    std::vector<cplx> a(z.samples);
    for (int m = 1; m < n; m += 2) a[m] = -a[m];
    detail::fft_inplace(a, false);

    Spectrum Z{f, std::vector<cplx>(n)};
    const double scale = z.grid.dt / kSqrt2Pi;
    for (int k = 0; k < n; ++k)
        Z.values[k] = scale * std::polar(1.0, -f.w(k) * z.grid.t0) * a[k];
    return Z;
}

ComplexSignal unitary_ift(const Spectrum& Z, const TimeGrid& g) {
    require_fast_grid(g, "unitary_ift");
    const int n = g.n;
    if (Z.fgrid.n_w != n)
        throw ContractError("unitary_ift: spectrum bin count " + std::to_string(Z.fgrid.n_w) +
                            " does not match grid n = " + std::to_string(n));
    if (static_cast<int>(Z.values.size()) != n)
        throw ContractError("unitary_ift: value count does not match frequency grid");

    std::vector<cplx> a(n);
    for (int k = 0; k < n; ++k)
        a[k] = Z.values[k] * std::polar(1.0, Z.fgrid.w(k) * g.t0);
    detail::fft_inplace(a, true);

    ComplexSignal z{g, std::vector<cplx>(n)};
    const double scale = Z.fgrid.dw / kSqrt2Pi;
    for (int m = 0; m < n; ++m)
        z.samples[m] = scale * ((m & 1) ? -a[m] : a[m]);
    return z;
}

Spectrum brute_ft(const ComplexSignal& z, const FreqGrid& fgrid) {
    const int n = z.grid.n;
    Spectrum Z{fgrid, std::vector<cplx>(fgrid.n_w)};
    const double scale = z.grid.dt / kSqrt2Pi;
    for (int k = 0; k < fgrid.n_w; ++k) {
        const double w = fgrid.w(k);
        cplx acc{0.0, 0.0};
        for (int m = 0; m < n; ++m)
            acc += z.samples[m] * std::polar(1.0, -w * z.grid.t(m));
        Z.values[k] = scale * acc;
    }
    return Z;
}

ComplexSignal circ_convolve(const ComplexSignal& f, const ComplexSignal& g) {
    if (!(f.grid == g.grid))
        throw ContractError("circ_convolve: operands are on different grids");
    const Spectrum F = unitary_ft(f);
    Spectrum H = unitary_ft(g);
    for (int k = 0; k < F.fgrid.n_w; ++k) H.values[k] = kSqrt2Pi * F.values[k] * H.values[k];
    return unitary_ift(H, f.grid);
}

FracSpectrum frft(const ComplexSignal& z, double gamma) {
    check_angle(gamma, "frft");
    require_fast_grid(z.grid, "frft");
    const int n = z.grid.n;
    const double r  = std::cos(gamma) / std::sin(gamma);
    const double cx = 1.0 / std::sin(gamma);

    // Z_gamma(u_k) = C_gamma e^{j (r/2) u_k^2} UFT{z e^{j (r/2) t^2}}(w_k),
    // with cx*u_k = w_k on the centered bins.
    ComplexSignal zeta{z.grid, std::vector<cplx>(n)};
    for (int m = 0; m < n; ++m) {
        const double t = z.grid.t(m);
        zeta.samples[m] = z.samples[m] * std::polar(1.0, 0.5 * r * t * t);
    }
    const Spectrum S = unitary_ft(zeta);
    const cplx C = frft_front_constant(gamma);

    std::vector<cplx> vals(n);
    for (int k = 0; k < n; ++k) {
        const double u = S.fgrid.w(k) / cx;
        vals[k] = C * std::polar(1.0, 0.5 * r * u * u) * S.values[k];
    }

    FracSpectrum F;
    F.gamma = gamma;
    F.r     = r;
    F.cx    = cx;
    F.n     = n;
    if (cx > 0.0) {
        F.u0 = S.fgrid.w(0) / cx;
        F.du = S.fgrid.dw / cx;
        F.values = std::move(vals);
    } else {
        // Keep the stored axis increasing when csc(gamma) < 0.
        F.u0 = S.fgrid.w(n - 1) / cx;
        F.du = -S.fgrid.dw / cx;
        F.values.resize(n);
        for (int k = 0; k < n; ++k) F.values[k] = vals[n - 1 - k];
    }
    return F;
}

FracSpectrum brute_frft(const ComplexSignal& z, double gamma) {
    check_angle(gamma, "brute_frft");
    const int n = z.grid.n;
    const double r  = std::cos(gamma) / std::sin(gamma);
    const double cx = 1.0 / std::sin(gamma);
    const FreqGrid f = freq_grid_of(z.grid);
    const cplx C = frft_front_constant(gamma);
    const double scale = z.grid.dt / kSqrt2Pi;

    FracSpectrum F;
    F.gamma = gamma;
    F.r     = r;
    F.cx    = cx;
    F.n     = n;
    F.u0    = (cx > 0.0 ? f.w(0) : f.w(n - 1)) / cx;
    F.du    = f.dw / std::abs(cx);
    F.values.resize(n);
    for (int k = 0; k < n; ++k) {
        const double u = F.u(k);
        cplx acc{0.0, 0.0};
        for (int m = 0; m < n; ++m) {
            const double t = z.grid.t(m);
            const double theta = -0.5 * r * t * t + cx * u * t - 0.5 * r * u * u;
            acc += z.samples[m] * std::polar(1.0, -theta);
        }
        F.values[k] = scale * C * acc;
    }
    return F;
}

ComplexSignal frac_as_signal(const FracSpectrum& F) {
    return ComplexSignal{make_time_grid(F.n, F.du, F.u0), F.values};
}

ComplexSignal analytic_signal(const std::vector<double>& x, const TimeGrid& g) {
    if (static_cast<int>(x.size()) != g.n)
        throw ContractError("analytic_signal: sample count does not match grid");
    ComplexSignal zr{g, std::vector<cplx>(g.n)};
    for (int m = 0; m < g.n; ++m) zr.samples[m] = cplx{x[m], 0.0};

    Spectrum Z = unitary_ft(zr);
    const int n = g.n;
    const int k_dc = n / 2; // w = 0 on the centered band; k = 0 is the Nyquist bin
    for (int k = 0; k < n; ++k) {
        double weight;
        if (k == k_dc || k == 0)
            weight = 1.0; // 2 * u(0) with u(0) = 1/2; same for the shared +-pi/dt bin
        else if (k > k_dc)
            weight = 2.0;
        else
            weight = 0.0;
        Z.values[k] *= weight;
    }
    return unitary_ift(Z, g);
}

ChannelMatrix stft_gaussian(const ComplexSignal& z, double alpha, int threads) {
    if (!(alpha > 0.0))
        throw ContractError("stft_gaussian: alpha must be > 0, got " + std::to_string(alpha));
    require_fast_grid(z.grid, "stft_gaussian");
    require_aligned_grid(z.grid, "stft_gaussian");

    const int n = z.grid.n;
    const FreqGrid f = freq_grid_of(z.grid);

    ComplexSignal w{z.grid, std::vector<cplx>(n)};
    ComplexSignal wp{z.grid, std::vector<cplx>(n)};
    for (int m = 0; m < n; ++m) {
        const double t = z.grid.t(m);
        const double wm = std::exp(-alpha * alpha * t * t);
        w.samples[m]  = cplx{wm, 0.0};
        wp.samples[m] = cplx{-2.0 * alpha * alpha * t * wm, 0.0};
    }

    const Spectrum A  = unitary_ft(z);
    const Spectrum B  = unitary_ft(w);
    const Spectrum Bp = unitary_ft(wp);

    ChannelMatrix M;
    M.tgrid = z.grid;
    M.channels.resize(n);
    for (int j = 0; j < n; ++j) M.channels[j] = f.w(j);
    M.values.assign(static_cast<std::size_t>(n) * n, cplx{0.0, 0.0});
    M.if_est.assign(static_cast<std::size_t>(n) * n, 0.0);
    M.valid.assign(static_cast<std::size_t>(n) * n, 0);
    M.window_alpha = alpha;
    M.w0 = 1.0;

    std::vector<cplx> deriv(static_cast<std::size_t>(n) * n);
    const int half = n / 2;

    detail::parallel_for(0, n, threads, [&](int j) {
        // Z_w(.; nu_j) = ift(sqrt(2 pi) * A * shift_j(B)); same with B' for the
        // derivative-window channel.
        Spectrum prod{f, std::vector<cplx>(n)};
        for (int k = 0; k < n; ++k)
            prod.values[k] = kSqrt2Pi * A.values[k] * B.values[(k - j + half + n) % n];
        const ComplexSignal col = unitary_ift(prod, z.grid);
        for (int k = 0; k < n; ++k)
            prod.values[k] = kSqrt2Pi * A.values[k] * Bp.values[(k - j + half + n) % n];
        const ComplexSignal dcol = unitary_ift(prod, z.grid);
        for (int m = 0; m < n; ++m) {
            M.values[M.idx(m, j)] = col.samples[m];
            deriv[M.idx(m, j)]    = dcol.samples[m];
        }
    });

    double max_mag = 0.0;
    for (const cplx& v : M.values) max_mag = std::max(max_mag, std::abs(v));
    const double thr = kMagThresholdRatio * max_mag;

    detail::parallel_for(0, n, threads, [&](int j) {
        const double nu = M.channels[j];
        for (int m = 0; m < n; ++m) {
            const std::size_t i = M.idx(m, j);
            if (std::abs(M.values[i]) > thr) {
                M.valid[i]  = 1;
                M.if_est[i] = nu + (deriv[i] / M.values[i]).imag();
            }
        }
    });
    return M;
}

ComplexSignal frac_convolve(const ComplexSignal& f, const ComplexSignal& h, double gamma) {
    check_angle(gamma, "frac_convolve");
    if (!(f.grid == h.grid))
        throw ContractError("frac_convolve: operands are on different grids");
    const double r = std::cos(gamma) / std::sin(gamma);
    const int n = f.grid.n;

    ComplexSignal fm{f.grid, std::vector<cplx>(n)};
    for (int m = 0; m < n; ++m) {
        const double t = f.grid.t(m);
        fm.samples[m] = f.samples[m] * std::polar(1.0, 0.5 * r * t * t);
    }
    ComplexSignal out = circ_convolve(fm, h);
    for (int m = 0; m < n; ++m) {
        const double t = f.grid.t(m);
        out.samples[m] *= std::polar(1.0, -0.5 * r * t * t);
    }
    return out;
}

ChannelMatrix stfrft(const ComplexSignal& z, double alpha, double gamma, int threads) {
    if (!(alpha > 0.0))
        throw ContractError("stfrft: alpha must be > 0, got " + std::to_string(alpha));
    check_angle(gamma, "stfrft");
    require_fast_grid(z.grid, "stfrft");
    require_aligned_grid(z.grid, "stfrft");

    const int n = z.grid.n;
    const FreqGrid f = freq_grid_of(z.grid);
    const double r  = std::cos(gamma) / std::sin(gamma);
    const double cx = 1.0 / std::sin(gamma);

    ComplexSignal w{z.grid, std::vector<cplx>(n)};
    ComplexSignal wp{z.grid, std::vector<cplx>(n)};
    ComplexSignal zeta{z.grid, std::vector<cplx>(n)};
    std::vector<cplx> back(n); // e^{-j r t^2 / 2}
    for (int m = 0; m < n; ++m) {
        const double t = z.grid.t(m);
        const double wm = std::exp(-alpha * alpha * t * t);
        w.samples[m]    = cplx{wm, 0.0};
        wp.samples[m]   = cplx{-2.0 * alpha * alpha * t * wm, 0.0};
        zeta.samples[m] = z.samples[m] * std::polar(1.0, 0.5 * r * t * t);
        back[m]         = std::polar(1.0, -0.5 * r * t * t);
    }

    const Spectrum A  = unitary_ft(zeta);
    const Spectrum B  = unitary_ft(w);
    const Spectrum Bp = unitary_ft(wp);

    ChannelMatrix M;
    M.tgrid = z.grid;
    M.channels.resize(n);
    for (int j = 0; j < n; ++j) M.channels[j] = f.w(j) / cx; // cx * u_j spans the band
    M.values.assign(static_cast<std::size_t>(n) * n, cplx{0.0, 0.0});
    M.if_est.assign(static_cast<std::size_t>(n) * n, 0.0);
    M.valid.assign(static_cast<std::size_t>(n) * n, 0);
    M.window_alpha = alpha;
    M.w0 = 1.0;

    std::vector<cplx> deriv(static_cast<std::size_t>(n) * n);
    const int half = n / 2;

    detail::parallel_for(0, n, threads, [&](int j) {
        Spectrum prod{f, std::vector<cplx>(n)};
        for (int k = 0; k < n; ++k)
            prod.values[k] = kSqrt2Pi * A.values[k] * B.values[(k - j + half + n) % n];
        const ComplexSignal col = unitary_ift(prod, z.grid);
        for (int k = 0; k < n; ++k)
            prod.values[k] = kSqrt2Pi * A.values[k] * Bp.values[(k - j + half + n) % n];
        const ComplexSignal dcol = unitary_ift(prod, z.grid);
        for (int m = 0; m < n; ++m) {
            M.values[M.idx(m, j)] = back[m] * col.samples[m];
            deriv[M.idx(m, j)]    = back[m] * dcol.samples[m];
        }
    });

    double max_mag = 0.0;
    for (const cplx& v : M.values) max_mag = std::max(max_mag, std::abs(v));
    const double thr = kMagThresholdRatio * max_mag;

    detail::parallel_for(0, n, threads, [&](int j) {
        const double wj = cx * M.channels[j];
        for (int m = 0; m < n; ++m) {
            const std::size_t i = M.idx(m, j);
            if (std::abs(M.values[i]) > thr) {
                const double t = z.grid.t(m);
                const cplx dV = cplx{0.0, wj - r * t} * M.values[i] + deriv[i];
                M.valid[i]  = 1;
                M.if_est[i] = (dV / M.values[i]).imag();
            }
        }
    });
    return M;
}

} // namespace isa
