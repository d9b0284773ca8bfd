#pragma once

#include "isa/oracles.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isa {

/// Parsed run configuration (JSON, strict: unknown keys are rejected).
struct RunConfig {
    TimeGrid                      grid{};
    std::vector<CanonicalTriplet> components;
    std::optional<AnalysisMethod> method;
    std::optional<ExampleKind>    example;
    std::vector<double>           sweep_alphas;
    std::vector<double>           sweep_rs;
    std::map<std::string, std::string> paths; // optional "in"/"out" defaults
};

RunConfig parse_config(const std::string& text);

/// Signal CSV: header `t,re,im`, one row per sample, 17 significant digits,
/// LF line endings. Round trips are bit-exact.
std::string   export_signal_csv(const ComplexSignal& z);
ComplexSignal import_signal_csv(const std::string& text);

/// IS binary (.isb): little-endian, magic "ISA1", u32 n_t, u32 n_w,
/// f64 dt, t0, dw, w0, then n_t*n_w (re, im) f64 pairs, time-major.
std::vector<std::uint8_t> export_is(const DenseIS& d);
DenseIS                   import_is(const std::vector<std::uint8_t>& bytes);

/// Binary P5 PGM of the dB-scaled magnitude, maxval 255; rows are frequency
/// bins (top = highest), columns time. floor_db must be negative. An all-zero
/// density renders as an all-zero image.
std::vector<std::uint8_t> render_pgm(const DenseIS& d, double floor_db);

/// Comparison report as JSON with keys l2_error, linf_error, recon_rel_error,
/// dropped_fraction.
std::string report_json(const AnalysisReport& rep);

/// Chirplet-plane sweep: for every (alpha, r) runs the synchrosqueezed STFrFT
/// at cot(gamma) = r (r = 0 is the plain STFT) against the reference IS and
/// emits one CSV row `alpha,r,l2_error,recon_rel_error,dropped_fraction,status`.
/// Per-cell contract failures are reported in the status column, not thrown.
std::string run_sweep(const RunConfig& cfg, int threads = 1);

/// Whole-file helpers (IoError on failure).
std::string               read_text_file(const std::string& path);
std::vector<std::uint8_t> read_binary_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
void write_binary_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

} // namespace isa
