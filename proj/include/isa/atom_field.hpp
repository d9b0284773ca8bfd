#pragma once

#include "isa/signal.hpp"

#include <vector>

namespace isa {

/// One time-frequency ray at a single time sample. A Delta ray contributes
/// sqrt(2*pi) * weight * delta(w - omega) to the IS column; a UniformBand ray
/// spreads the same total over the whole represented band.
enum class RayKind { Delta, UniformBand };

struct Ray {
    RayKind kind   = RayKind::Delta;
    double  omega  = 0.0; // rad/s; unused for UniformBand
    cplx    weight = {0.0, 0.0};
};

/// Sparse instantaneous spectrum: per-time-sample ray lists plus an account of
/// the |weight| discarded for falling outside the display band.
struct SparseIS {
    TimeGrid                      tgrid;
    FreqGrid                      fgrid;
    std::vector<std::vector<Ray>> columns;        // size n
    std::vector<double>           dropped_weight; // size n, >= 0
};

/// Rasterized IS density over (time, frequency bin), time-major. Column
/// integrals (1/sqrt(2*pi)) * sum_k density * dw approximate z(t). The
/// retained/dropped totals carry the sparse accounting through rasterization
/// (zero when the matrix was built or loaded without ray provenance).
struct DenseIS {
    TimeGrid          tgrid;
    FreqGrid          fgrid;
    std::vector<cplx> density; // n * n_w
    double            retained_abs = 0.0;
    double            dropped_abs  = 0.0;

    std::size_t idx(int m, int k) const {
        return static_cast<std::size_t>(m) * fgrid.n_w + static_cast<std::size_t>(k);
    }
};

/// Scalar comparison of two ISs against a reference signal.
struct AnalysisReport {
    double l2_error        = 0.0; // grid-weighted L2 of the error map
    double linf_error      = 0.0;
    double recon_rel_error = 0.0; // relative L2 of the estimate's column projection vs z
    double dropped_fraction = 0.0;
};

/// Appends a ray to column m, dropping and accounting Delta rays whose
/// frequency falls outside [w0, w0 + n_w*dw).
void push_ray(SparseIS& is, int m, const Ray& ray);

/// Empty IS skeleton on the given grids.
SparseIS make_sparse_is(const TimeGrid& g, const FreqGrid& f);

/// One Delta ray per time sample at the triplet's IF trajectory, weighted by
/// the synthesized component samples.
SparseIS atoms_from_triplet(const CanonicalTriplet& c, const TimeGrid& g, const FreqGrid& f);

/// Concatenated ray columns of all triplets in the set.
SparseIS is_from_paramset(const ParamSet& s, const TimeGrid& g, const FreqGrid& f);

/// Column sums of ray weights; the delta/uniform-band frequency integrals
/// evaluate to the weight by construction, so frequencies do not enter.
ComplexSignal superproject(const SparseIS& is);

/// Nearest-bin binning of Delta rays (ties toward the lower bin) with density
/// sqrt(2*pi)*weight/dw; UniformBand rays add sqrt(2*pi)*weight/(n_w*dw) to
/// every bin.
DenseIS rasterize(const SparseIS& is);

/// Column integrals (1/sqrt(2*pi)) * sum_k density * dw of a dense IS.
ComplexSignal dense_projection(const DenseIS& d);

/// Entrywise truth - est on identical grids.
DenseIS error_map(const DenseIS& truth, const DenseIS& est);

/// Grid-weighted error norms of error_map(truth, est), the estimate's
/// reconstruction error against z, and the estimate's dropped-weight fraction.
AnalysisReport is_metrics(const DenseIS& truth, const DenseIS& est, const ComplexSignal& z);

} // namespace isa
