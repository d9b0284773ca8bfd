#include "isa/atom_field.hpp"

#include "isa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace isa {

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

void require_same_grids(const DenseIS& a, const DenseIS& b, const char* who) {
    if (!(a.tgrid == b.tgrid) || !(a.fgrid == b.fgrid))
        throw ContractError(std::string(who) + ": operands are on different grids");
}

} // namespace

SparseIS make_sparse_is(const TimeGrid& g, const FreqGrid& f) {
    SparseIS is;
    is.tgrid = g;
    is.fgrid = f;
    is.columns.resize(g.n);
    is.dropped_weight.assign(g.n, 0.0);
    return is;
}

void push_ray(SparseIS& is, int m, const Ray& ray) {
    if (ray.kind == RayKind::Delta &&
        !(ray.omega >= is.fgrid.band_lo() && ray.omega < is.fgrid.band_hi())) {
        is.dropped_weight[m] += std::abs(ray.weight);
        return;
    }
    is.columns[m].push_back(ray);
}

SparseIS atoms_from_triplet(const CanonicalTriplet& c, const TimeGrid& g, const FreqGrid& f) {
    const ComplexSignal psi = synthesize_component(c, g);
    const std::vector<double> omega = if_samples(c.iff, g);
    SparseIS is = make_sparse_is(g, f);
    for (int m = 0; m < g.n; ++m)
        push_ray(is, m, Ray{RayKind::Delta, omega[m], psi.samples[m]});
    return is;
}

SparseIS is_from_paramset(const ParamSet& s, const TimeGrid& g, const FreqGrid& f) {
    if (s.triplets.empty())
        throw ContractError("is_from_paramset: parameter set is empty");
    SparseIS is = make_sparse_is(g, f);
    for (const auto& c : s.triplets) {
        const SparseIS part = atoms_from_triplet(c, g, f);
        for (int m = 0; m < g.n; ++m) {
            is.columns[m].insert(is.columns[m].end(), part.columns[m].begin(),
                                 part.columns[m].end());
            is.dropped_weight[m] += part.dropped_weight[m];
        }
    }
    return is;
}

ComplexSignal superproject(const SparseIS& is) {
    ComplexSignal z{is.tgrid, std::vector<cplx>(is.tgrid.n, cplx{0.0, 0.0})};
    for (int m = 0; m < is.tgrid.n; ++m)
        for (const Ray& ray : is.columns[m]) z.samples[m] += ray.weight;
    return z;
}

DenseIS rasterize(const SparseIS& is) {
    DenseIS d;
    d.tgrid = is.tgrid;
    d.fgrid = is.fgrid;
    const int n_w = is.fgrid.n_w;
    d.density.assign(static_cast<std::size_t>(is.tgrid.n) * n_w, cplx{0.0, 0.0});

    const double delta_scale = kSqrt2Pi / is.fgrid.dw;
    const double band_scale  = kSqrt2Pi / (n_w * is.fgrid.dw);
    for (int m = 0; m < is.tgrid.n; ++m) {
        for (const Ray& ray : is.columns[m]) {
            d.retained_abs += std::abs(ray.weight);
            if (ray.kind == RayKind::UniformBand) {
                const cplx add = band_scale * ray.weight;
                for (int k = 0; k < n_w; ++k) d.density[d.idx(m, k)] += add;
            } else {
                // Nearest bin, exact midpoints going to the lower bin. The top
                // half-bin sliver is nearest to the wrap bin: the frequency
                // axis is periodic, so it lands on bin 0.
                const double x = (ray.omega - is.fgrid.w0) / is.fgrid.dw;
                int k = static_cast<int>(std::ceil(x - 0.5));
                if (k >= n_w) k = 0;
                d.density[d.idx(m, k)] += delta_scale * ray.weight;
            }
        }
        d.dropped_abs += is.dropped_weight[m];
    }
    return d;
}

ComplexSignal dense_projection(const DenseIS& d) {
    ComplexSignal z{d.tgrid, std::vector<cplx>(d.tgrid.n, cplx{0.0, 0.0})};
    const double scale = d.fgrid.dw / kSqrt2Pi;
    for (int m = 0; m < d.tgrid.n; ++m) {
        cplx acc{0.0, 0.0};
        for (int k = 0; k < d.fgrid.n_w; ++k) acc += d.density[d.idx(m, k)];
        z.samples[m] = scale * acc;
    }
    return z;
}

DenseIS error_map(const DenseIS& truth, const DenseIS& est) {
    require_same_grids(truth, est, "error_map");
    DenseIS e;
    e.tgrid = truth.tgrid;
    e.fgrid = truth.fgrid;
    e.density.resize(truth.density.size());
    for (std::size_t i = 0; i < truth.density.size(); ++i)
        e.density[i] = truth.density[i] - est.density[i];
    return e;
}

AnalysisReport is_metrics(const DenseIS& truth, const DenseIS& est, const ComplexSignal& z) {
    require_same_grids(truth, est, "is_metrics");
    if (!(truth.tgrid == z.grid))
        throw ContractError("is_metrics: signal grid does not match the IS grids");

    const DenseIS e = error_map(truth, est);
    double sq = 0.0, linf = 0.0;
    for (const cplx& v : e.density) {
        const double a = std::abs(v);
        sq += a * a;
        linf = std::max(linf, a);
    }

    const ComplexSignal recon = dense_projection(est);
    double num = 0.0, den = 0.0;
    for (int m = 0; m < z.grid.n; ++m) {
        num += std::norm(recon.samples[m] - z.samples[m]);
        den += std::norm(z.samples[m]);
    }
    double est_mass = 0.0;
    for (const cplx& v : est.density) est_mass += std::abs(v);
    if (den == 0.0 && est_mass > 0.0)
        throw NumericError("is_metrics: reference signal is identically zero");

    AnalysisReport rep;
    rep.l2_error   = std::sqrt(sq * truth.tgrid.dt * truth.fgrid.dw);
    rep.linf_error = linf;
    rep.recon_rel_error = den > 0.0 ? std::sqrt(num / den) : 0.0;
    const double total = est.retained_abs + est.dropped_abs;
    rep.dropped_fraction = total > 0.0 ? est.dropped_abs / total : 0.0;
    return rep;
}

} // namespace isa
