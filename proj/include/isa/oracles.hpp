#pragma once

#include "isa/analyses.hpp"

#include <optional>

namespace isa {

/// The four reference signals. omega0 must lie inside the display band;
/// alpha0 > 0 for the Gaussian AM kind.
struct ExampleKind {
    enum class Tag { SHC, Impulse, LinearFM, GaussAM };
    Tag    tag    = Tag::SHC;
    double omega0 = 0.0; // rad/s
    double r0     = 0.0; // rad/s^2 (LinearFM)
    double alpha0 = 0.0; // 1/s (GaussAM)
};

const char* example_name(ExampleKind::Tag t);

/// Signal plus its generating triplets. The impulse carries no triplets (it is
/// not an AM-FM component); its surrogate is a single sample of height 1/dt at
/// the t~0 sample, so trapezoid quadratures see unit mass.
struct Example {
    ComplexSignal           signal;
    std::optional<ParamSet> triplets;
};

Example example_signal(const ExampleKind& k, const TimeGrid& g);

/// Rasterized ground-truth IS: triplet atoms for the AM-FM kinds, the Shannon
/// (time-domain) form for the impulse.
DenseIS synthesis_is(const ExampleKind& k, const TimeGrid& g, const FreqGrid& f);

/// Closed-form IS of a (signal, analysis) table row, rasterized with the same
/// binning as the atom field. Fractional rows are built by quadrature
/// (brute_frft into the Namias field) rather than from the typeset formulas.
/// Pairs without a closed-form row are rejected.
DenseIS oracle_is(const ExampleKind& k, const AnalysisMethod& m, const TimeGrid& g,
                  const FreqGrid& f);

/// Runs the live analysis, rasterizes, and compares against oracle_is.
AnalysisReport oracle_recon_check(const ExampleKind& k, const AnalysisMethod& m,
                                  const TimeGrid& g, const FreqGrid& f, int threads = 1);

} // namespace isa
