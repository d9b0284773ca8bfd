#pragma once

#include "isa/atom_field.hpp"
#include "isa/signal.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace isa::test {

inline constexpr double kPi = std::numbers::pi;

/// Spec default desk-scale grid: n = 1024, dt = 1/256, t in [-2, 2).
inline TimeGrid default_grid() { return build_time_grid(1024, 1.0 / 256.0, -2.0); }

inline double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a[i] - b[i]);
        den += std::norm(b[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

inline double rel_l2(const ComplexSignal& a, const ComplexSignal& b) {
    return rel_l2(a.samples, b.samples);
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double l2_norm(const DenseIS& d) {
    double sq = 0.0;
    for (const cplx& v : d.density) sq += std::norm(v);
    return std::sqrt(sq * d.tgrid.dt * d.fgrid.dw);
}

inline double linf_norm(const DenseIS& d) {
    double m = 0.0;
    for (const cplx& v : d.density) m = std::max(m, std::abs(v));
    return m;
}

inline ComplexSignal random_signal(const TimeGrid& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexSignal z{g, std::vector<cplx>(g.n)};
    for (auto& s : z.samples) s = cplx{dist(rng), dist(rng)};
    return z;
}

/// Least-squares Gaussian width fit for histogram data: model the bin value as
/// the integral of M * exp(-(w - mu)^2 / (2 s^2)) over the bin, fix mu at the
/// weighted mean, and golden-section the SSE over s with M solved linearly.
/// Returns the width parameter s^2.
inline double fit_gaussian_width(const std::vector<double>& centers,
                                 const std::vector<double>& values, double dw) {
    double wsum = 0.0, msum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        wsum += values[i] * centers[i];
        msum += values[i];
    }
    const double mu = wsum / msum;

    auto sse = [&](double s) {
        const double inv = 1.0 / (s * std::sqrt(2.0));
        double pb = 0.0, pp = 0.0;
        std::vector<double> model(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double lo = centers[i] - 0.5 * dw - mu;
            const double hi = centers[i] + 0.5 * dw - mu;
            model[i] = 0.5 * (std::erf(hi * inv) - std::erf(lo * inv));
            pb += model[i] * values[i];
            pp += model[i] * model[i];
        }
        const double M = pp > 0.0 ? pb / pp : 0.0;
        double e = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double d = values[i] - M * model[i];
            e += d * d;
        }
        return e;
    };

    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.05 * dw, hi = 10.0 * dw;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = sse(x1), f2 = sse(x2);
    for (int it = 0; it < 120; ++it) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = sse(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = sse(x2);
        }
    }
    const double s = 0.5 * (lo + hi);
    return s * s;
}

/// Energy-weighted median of |values| given nonnegative weights.
inline double weighted_median_abs(std::vector<std::pair<double, double>> dev_weight) {
    std::sort(dev_weight.begin(), dev_weight.end());
    double total = 0.0;
    for (const auto& [d, w] : dev_weight) total += w;
    double acc = 0.0;
    for (const auto& [d, w] : dev_weight) {
        acc += w;
        if (acc >= 0.5 * total) return d;
    }
    return dev_weight.empty() ? 0.0 : dev_weight.back().first;
}

} // namespace isa::test
