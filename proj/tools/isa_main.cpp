// Command-line driver: synth / analyze / oracle / compare / sweep / render.
//
// Exit codes: 0 success, 2 config or contract error, 3 I/O error,
// 4 numerical contract failure (e.g. demodulation magnitude floor).

#include "isa/errors.hpp"
#include "isa/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <numbers>
#include <string>

namespace {

constexpr double kPi = std::numbers::pi;

isa::AnalysisMethod method_from_flags(const std::string& name, double alpha, double gamma) {
    isa::AnalysisMethod m;
    using K = isa::AnalysisMethod::Kind;
    if (name == "fd") m.kind = K::FD;
    else if (name == "frft") m.kind = K::FRFT;
    else if (name == "sstft") m.kind = K::SSTFT;
    else if (name == "sstfrft") m.kind = K::SSTFRFT;
    else if (name == "td") m.kind = K::TD;
    else if (name == "mc") m.kind = K::MC;
    else if (name == "as") m.kind = K::AS;
    else throw isa::ContractError("unknown method: " + name);
    m.alpha = alpha;
    m.gamma = gamma;
    isa::validate_method(m);
    return m;
}

isa::ExampleKind example_from_flags(const std::string& name, double omega0, double r0,
                                    double alpha0) {
    isa::ExampleKind k;
    using T = isa::ExampleKind::Tag;
    if (name == "shc") k.tag = T::SHC;
    else if (name == "impulse") k.tag = T::Impulse;
    else if (name == "lfm") k.tag = T::LinearFM;
    else if (name == "gaussam") k.tag = T::GaussAM;
    else throw isa::ContractError("unknown example: " + name);
    k.omega0 = omega0;
    k.r0 = r0;
    k.alpha0 = alpha0;
    return k;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Instantaneous-spectrum toolkit"};
    app.require_subcommand(1);

    std::string config_path, in_path, out_path, truth_path, est_path, signal_path, report_path;
    std::string method_name = "fd", example_name = "shc";
    double alpha = 4.0, gamma = kPi / 2.0;
    double floor_db = -80.0;
    int threads = 1;
    int grid_n = 1024;
    double grid_dt = 1.0 / 256.0, grid_t0 = -2.0;
    double omega0 = 16.0 * kPi, r0 = 8.0 * kPi, alpha0 = 2.0;

    auto* synth = app.add_subcommand("synth", "Synthesize a signal from a config");
    synth->add_option("--config", config_path, "JSON config with grid and components")
        ->required();
    synth->add_option("--out", out_path, "Output signal CSV")->required();

    auto* analyze = app.add_subcommand("analyze", "Estimate the IS of a signal");
    analyze->add_option("--method", method_name, "fd|frft|sstft|sstfrft|td|mc|as")->required();
    analyze->add_option("--alpha", alpha, "Gaussian window parameter (1/s)");
    analyze->add_option("--gamma", gamma, "Fractional angle (rad)");
    analyze->add_option("--in", in_path, "Input signal CSV")->required();
    analyze->add_option("--out", out_path, "Output IS binary (.isb)")->required();
    analyze->add_option("--threads", threads, "Worker threads (output is thread-count invariant)");

    auto* oracle = app.add_subcommand("oracle", "Closed-form table-row IS for an example signal");
    oracle->add_option("--example", example_name, "shc|impulse|lfm|gaussam")->required();
    oracle->add_option("--method", method_name, "fd|frft|sstft|sstfrft|td|mc|as")->required();
    oracle->add_option("--alpha", alpha, "Gaussian window parameter (1/s)");
    oracle->add_option("--gamma", gamma, "Fractional angle (rad)");
    oracle->add_option("--n", grid_n, "Grid sample count");
    oracle->add_option("--dt", grid_dt, "Grid spacing (s)");
    oracle->add_option("--t0", grid_t0, "First sample time (s)");
    oracle->add_option("--omega0", omega0, "Example tone/center frequency (rad/s)");
    oracle->add_option("--r0", r0, "Linear FM chirp rate (rad/s^2)");
    oracle->add_option("--alpha0", alpha0, "Gaussian AM duration parameter (1/s)");
    oracle->add_option("--out", out_path, "Output IS binary (.isb)")->required();

    auto* compare = app.add_subcommand("compare", "Compare two ISs against a signal");
    compare->add_option("--truth", truth_path, "Reference IS (.isb)")->required();
    compare->add_option("--est", est_path, "Estimated IS (.isb)")->required();
    compare->add_option("--signal", signal_path, "Signal CSV the estimate should project")
        ->required();
    compare->add_option("--report", report_path, "Output JSON report")->required();

    auto* sweep = app.add_subcommand("sweep", "Chirplet-plane (alpha, r) error sweep");
    sweep->add_option("--config", config_path, "JSON config with grid, sweep lists and input")
        ->required();
    sweep->add_option("--out", out_path, "Output CSV")->required();
    sweep->add_option("--threads", threads, "Worker threads (output is thread-count invariant)");

    auto* render = app.add_subcommand("render", "Render |density| of an IS to a P5 PGM");
    render->add_option("--in", in_path, "Input IS binary (.isb)")->required();
    render->add_option("--floor-db", floor_db, "Dynamic-range floor in dB (< 0)");
    render->add_option("--out", out_path, "Output PGM")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (synth->parsed()) {
            const isa::RunConfig cfg = isa::parse_config(isa::read_text_file(config_path));
            isa::ComplexSignal z;
            if (!cfg.components.empty())
                z = isa::synthesize_signal(isa::ParamSet{cfg.components}, cfg.grid);
            else if (cfg.example)
                z = isa::example_signal(*cfg.example, cfg.grid).signal;
            else
                throw isa::ContractError("synth: config has neither components nor an example");
            isa::write_text_file(out_path, isa::export_signal_csv(z));
        } else if (analyze->parsed()) {
            const isa::ComplexSignal z = isa::import_signal_csv(isa::read_text_file(in_path));
            const isa::AnalysisMethod m = method_from_flags(method_name, alpha, gamma);
            const isa::DenseIS d = isa::analyze_dense(z, m, isa::freq_grid_of(z.grid), threads);
            isa::write_binary_file(out_path, isa::export_is(d));
        } else if (oracle->parsed()) {
            const isa::TimeGrid g = isa::build_time_grid(grid_n, grid_dt, grid_t0);
            const isa::ExampleKind k = example_from_flags(example_name, omega0, r0, alpha0);
            const isa::AnalysisMethod m = method_from_flags(method_name, alpha, gamma);
            const isa::DenseIS d = isa::oracle_is(k, m, g, isa::freq_grid_of(g));
            isa::write_binary_file(out_path, isa::export_is(d));
        } else if (compare->parsed()) {
            const isa::DenseIS truth = isa::import_is(isa::read_binary_file(truth_path));
            const isa::DenseIS est = isa::import_is(isa::read_binary_file(est_path));
            const isa::ComplexSignal z =
                isa::import_signal_csv(isa::read_text_file(signal_path));
            const isa::AnalysisReport rep = isa::is_metrics(truth, est, z);
            isa::write_text_file(report_path, isa::report_json(rep));
        } else if (sweep->parsed()) {
            const isa::RunConfig cfg = isa::parse_config(isa::read_text_file(config_path));
            isa::write_text_file(out_path, isa::run_sweep(cfg, threads));
        } else if (render->parsed()) {
            const isa::DenseIS d = isa::import_is(isa::read_binary_file(in_path));
            isa::write_binary_file(out_path, isa::render_pgm(d, floor_db));
        }
    } catch (const isa::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const isa::NumericError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const isa::ContractError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
