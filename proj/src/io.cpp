#include "isa/io.hpp"

#include "isa/errors.hpp"

#include <json.hpp>

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>

namespace isa {

namespace {

using nlohmann::json;

static_assert(std::endian::native == std::endian::little,
              "the .isb codec assumes a little-endian host");

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// --- strict JSON helpers ----------------------------------------------------

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* key : allowed)
            if (it.key() == key) { ok = true; break; }
        if (!ok)
            throw ContractError("config: unknown key \"" + it.key() + "\" in " + where);
    }
}

const json& need(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ContractError("config: missing key \"" + std::string(key) + "\" in " + where);
    return *it;
}

double need_num(const json& obj, const char* key, const std::string& where) {
    const json& v = need(obj, key, where);
    if (!v.is_number())
        throw ContractError("config: " + where + "." + key + " must be a number");
    return v.get<double>();
}

int need_int(const json& obj, const char* key, const std::string& where) {
    const json& v = need(obj, key, where);
    if (!v.is_number_integer())
        throw ContractError("config: " + where + "." + key + " must be an integer");
    return v.get<int>();
}

std::vector<double> need_num_array(const json& obj, const char* key, const std::string& where) {
    const json& v = need(obj, key, where);
    if (!v.is_array())
        throw ContractError("config: " + where + "." + key + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number())
            throw ContractError("config: " + where + "." + key + " must contain only numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

IADescriptor parse_ia(const json& obj, const std::string& where) {
    if (!obj.is_object())
        throw ContractError("config: " + where + " must be an object");
    const json& kind = need(obj, "kind", where);
    if (kind == "constant") {
        check_keys(obj, {"kind", "value"}, where);
        const double v = need_num(obj, "value", where);
        if (v < 0.0)
            throw ContractError("config: " + where + ".value must be >= 0");
        return ConstantIA{v};
    }
    if (kind == "gaussian") {
        check_keys(obj, {"kind", "peak", "alpha", "center"}, where);
        const double peak = need_num(obj, "peak", where);
        const double alpha = need_num(obj, "alpha", where);
        const double center = need_num(obj, "center", where);
        if (peak < 0.0)
            throw ContractError("config: " + where + ".peak must be >= 0");
        if (!(alpha > 0.0))
            throw ContractError("config: " + where + ".alpha must be > 0");
        return GaussianPulseIA{peak, alpha, center};
    }
    if (kind == "sampled") {
        check_keys(obj, {"kind", "values"}, where);
        return SampledIA{need_num_array(obj, "values", where)};
    }
    throw ContractError("config: " + where + ".kind must be constant|gaussian|sampled");
}

IFDescriptor parse_if(const json& obj, const std::string& where) {
    if (!obj.is_object())
        throw ContractError("config: " + where + " must be an object");
    const json& kind = need(obj, "kind", where);
    if (kind == "constant") {
        check_keys(obj, {"kind", "omega0"}, where);
        return ConstantIF{need_num(obj, "omega0", where)};
    }
    if (kind == "linear") {
        check_keys(obj, {"kind", "omega0", "slope"}, where);
        return LinearIF{need_num(obj, "omega0", where), need_num(obj, "slope", where)};
    }
    if (kind == "sampled") {
        check_keys(obj, {"kind", "values"}, where);
        return SampledIF{need_num_array(obj, "values", where)};
    }
    throw ContractError("config: " + where + ".kind must be constant|linear|sampled");
}

AnalysisMethod parse_method(const json& obj) {
    if (!obj.is_object())
        throw ContractError("config: method must be an object");
    const json& name = need(obj, "name", "method");
    AnalysisMethod m;
    using K = AnalysisMethod::Kind;
    if (name == "fd") { check_keys(obj, {"name"}, "method"); m.kind = K::FD; }
    else if (name == "td") { check_keys(obj, {"name"}, "method"); m.kind = K::TD; }
    else if (name == "mc") { check_keys(obj, {"name"}, "method"); m.kind = K::MC; }
    else if (name == "as") { check_keys(obj, {"name"}, "method"); m.kind = K::AS; }
    else if (name == "frft") {
        check_keys(obj, {"name", "gamma"}, "method");
        m.kind = K::FRFT;
        m.gamma = need_num(obj, "gamma", "method");
    } else if (name == "sstft") {
        check_keys(obj, {"name", "alpha"}, "method");
        m.kind = K::SSTFT;
        m.alpha = need_num(obj, "alpha", "method");
        if (!(m.alpha > 0.0))
            throw ContractError("config: method.alpha must be > 0");
    } else if (name == "sstfrft") {
        check_keys(obj, {"name", "alpha", "gamma"}, "method");
        m.kind = K::SSTFRFT;
        m.alpha = need_num(obj, "alpha", "method");
        m.gamma = need_num(obj, "gamma", "method");
        if (!(m.alpha > 0.0))
            throw ContractError("config: method.alpha must be > 0");
    } else {
        throw ContractError("config: method.name must be fd|frft|sstft|sstfrft|td|mc|as");
    }
    validate_method(m);
    return m;
}

ExampleKind parse_example(const json& obj) {
    if (!obj.is_object())
        throw ContractError("config: example must be an object");
    const json& kind = need(obj, "kind", "example");
    ExampleKind k;
    using T = ExampleKind::Tag;
    if (kind == "shc") {
        check_keys(obj, {"kind", "omega0"}, "example");
        k.tag = T::SHC;
        k.omega0 = need_num(obj, "omega0", "example");
    } else if (kind == "impulse") {
        check_keys(obj, {"kind"}, "example");
        k.tag = T::Impulse;
    } else if (kind == "lfm") {
        check_keys(obj, {"kind", "omega0", "r0"}, "example");
        k.tag = T::LinearFM;
        k.omega0 = need_num(obj, "omega0", "example");
        k.r0 = need_num(obj, "r0", "example");
    } else if (kind == "gaussam") {
        check_keys(obj, {"kind", "omega0", "alpha0"}, "example");
        k.tag = T::GaussAM;
        k.omega0 = need_num(obj, "omega0", "example");
        k.alpha0 = need_num(obj, "alpha0", "example");
        if (!(k.alpha0 > 0.0))
            throw ContractError("config: example.alpha0 must be > 0");
    } else {
        throw ContractError("config: example.kind must be shc|impulse|lfm|gaussam");
    }
    return k;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ContractError(std::string("config: ") + e.what());
    }
    if (!root.is_object())
        throw ContractError("config: top level must be a JSON object");
    check_keys(root, {"grid", "components", "method", "example", "sweep", "paths"}, "config");

    RunConfig cfg;
    const json& grid = need(root, "grid", "config");
    if (!grid.is_object())
        throw ContractError("config: grid must be an object");
    check_keys(grid, {"n", "dt", "t0"}, "grid");
    cfg.grid = build_time_grid(need_int(grid, "n", "grid"), need_num(grid, "dt", "grid"),
                               need_num(grid, "t0", "grid"));

    if (auto it = root.find("components"); it != root.end()) {
        if (!it->is_array())
            throw ContractError("config: components must be an array");
        int idx = 0;
        for (const auto& comp : *it) {
            const std::string where = "components[" + std::to_string(idx) + "]";
            if (!comp.is_object())
                throw ContractError("config: " + where + " must be an object");
            check_keys(comp, {"ia", "if", "phi"}, where);
            CanonicalTriplet c;
            c.ia  = parse_ia(need(comp, "ia", where), where + ".ia");
            c.iff = parse_if(need(comp, "if", where), where + ".if");
            c.phi = need_num(comp, "phi", where);
            if (!std::isfinite(c.phi))
                throw ContractError("config: " + where + ".phi must be finite");
            // Validate descriptor lengths/signs against the grid right away.
            ia_samples(c.ia, cfg.grid);
            if_samples(c.iff, cfg.grid);
            cfg.components.push_back(std::move(c));
            ++idx;
        }
    }
    if (auto it = root.find("method"); it != root.end()) cfg.method = parse_method(*it);
    if (auto it = root.find("example"); it != root.end()) cfg.example = parse_example(*it);
    if (auto it = root.find("sweep"); it != root.end()) {
        if (!it->is_object())
            throw ContractError("config: sweep must be an object");
        check_keys(*it, {"alphas", "rs"}, "sweep");
        cfg.sweep_alphas = need_num_array(*it, "alphas", "sweep");
        cfg.sweep_rs     = need_num_array(*it, "rs", "sweep");
    }
    if (auto it = root.find("paths"); it != root.end()) {
        if (!it->is_object())
            throw ContractError("config: paths must be an object");
        check_keys(*it, {"in", "out"}, "paths");
        for (auto p = it->begin(); p != it->end(); ++p) {
            if (!p->is_string())
                throw ContractError("config: paths." + p.key() + " must be a string");
            cfg.paths[p.key()] = p->get<std::string>();
        }
    }
    return cfg;
}

std::string export_signal_csv(const ComplexSignal& z) {
    std::string out = "t,re,im\n";
    for (int m = 0; m < z.grid.n; ++m) {
        out += num17(z.grid.t(m));
        out += ',';
        out += num17(z.samples[m].real());
        out += ',';
        out += num17(z.samples[m].imag());
        out += '\n';
    }
    return out;
}

ComplexSignal import_signal_csv(const std::string& text) {
    if (text.empty()) throw IoError("signal csv: empty file");
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "t,re,im")
        throw IoError("signal csv: missing or malformed header (expected `t,re,im`)");

    std::vector<double> ts;
    std::vector<cplx> samples;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        double v[3];
        const char* p = line.c_str();
        for (int fld = 0; fld < 3; ++fld) {
            char* endp = nullptr;
            v[fld] = std::strtod(p, &endp);
            if (endp == p)
                throw IoError("signal csv: malformed row " + std::to_string(row));
            p = endp;
            if (fld < 2) {
                if (*p != ',')
                    throw IoError("signal csv: missing column in row " + std::to_string(row));
                ++p;
            }
        }
        if (*p != '\0')
            throw IoError("signal csv: trailing garbage in row " + std::to_string(row));
        ts.push_back(v[0]);
        samples.push_back(cplx{v[1], v[2]});
    }
    if (ts.empty()) throw IoError("signal csv: no data rows");
    const int n = static_cast<int>(ts.size());
    if (n < 2) throw IoError("signal csv: need at least two rows to infer spacing");

    const double t0 = ts.front();
    const double dt = (ts.back() - t0) / (n - 1);
    const double tol = 1e-9 * (std::abs(t0) + std::abs(dt) * n);
    for (int m = 0; m < n; ++m) {
        if (std::abs(ts[m] - (t0 + m * dt)) > tol)
            throw IoError("signal csv: non-uniform t spacing at row " + std::to_string(m + 2));
    }
    return ComplexSignal{make_time_grid(n, dt, t0), std::move(samples)};
}

namespace {

template <typename T>
void put(std::vector<std::uint8_t>& out, T v) {
    const auto* p = reinterpret_cast<const std::uint8_t*>(&v);
    out.insert(out.end(), p, p + sizeof(T));
}

template <typename T>
T get(const std::vector<std::uint8_t>& in, std::size_t& off) {
    T v;
    std::memcpy(&v, in.data() + off, sizeof(T));
    off += sizeof(T);
    return v;
}

} // namespace

std::vector<std::uint8_t> export_is(const DenseIS& d) {
    std::vector<std::uint8_t> out;
    const std::size_t count = d.density.size();
    out.reserve(44 + 16 * count);
    out.insert(out.end(), {'I', 'S', 'A', '1'});
    put<std::uint32_t>(out, static_cast<std::uint32_t>(d.tgrid.n));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(d.fgrid.n_w));
    put<double>(out, d.tgrid.dt);
    put<double>(out, d.tgrid.t0);
    put<double>(out, d.fgrid.dw);
    put<double>(out, d.fgrid.w0);
    for (const cplx& v : d.density) {
        put<double>(out, v.real());
        put<double>(out, v.imag());
    }
    return out;
}

DenseIS import_is(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 44 || std::memcmp(bytes.data(), "ISA1", 4) != 0)
        throw IoError("not an IS file (bad magic or too short)");
    std::size_t off = 4;
    const auto n_t = get<std::uint32_t>(bytes, off);
    const auto n_w = get<std::uint32_t>(bytes, off);
    const double dt = get<double>(bytes, off);
    const double t0 = get<double>(bytes, off);
    const double dw = get<double>(bytes, off);
    const double w0 = get<double>(bytes, off);

    if (n_t == 0 || n_w == 0 || n_t > (1u << 24) || n_w > (1u << 24) ||
        static_cast<std::uint64_t>(n_t) * n_w > (1ull << 28))
        throw IoError("IS file: shape overflow (" + std::to_string(n_t) + " x " +
                      std::to_string(n_w) + ")");
    const std::uint64_t expected = 44ull + 16ull * n_t * n_w;
    if (bytes.size() != expected)
        throw IoError("IS file: truncated or padded payload (expected " +
                      std::to_string(expected) + " bytes, got " + std::to_string(bytes.size()) +
                      ")");
    if (n_w < 8 || !(dw > 0.0))
        throw IoError("IS file: invalid frequency grid");

    DenseIS d;
    d.tgrid = make_time_grid(static_cast<int>(n_t), dt, t0);
    d.fgrid = FreqGrid{static_cast<int>(n_w), dw, w0};
    d.density.resize(static_cast<std::size_t>(n_t) * n_w);
    for (auto& v : d.density) {
        const double re = get<double>(bytes, off);
        const double im = get<double>(bytes, off);
        v = cplx{re, im};
    }
    return d;
}

std::vector<std::uint8_t> render_pgm(const DenseIS& d, double floor_db) {
    if (!(floor_db < 0.0))
        throw ContractError("render_pgm: floor_db must be negative, got " +
                            std::to_string(floor_db));
    const int w = d.tgrid.n;
    const int h = d.fgrid.n_w;
    double max_mag = 0.0;
    for (const cplx& v : d.density) max_mag = std::max(max_mag, std::abs(v));

    std::string header = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + static_cast<std::size_t>(w) * h);
    for (int row = 0; row < h; ++row) {
        const int k = h - 1 - row; // top row = highest frequency bin
        for (int m = 0; m < w; ++m) {
            std::uint8_t pix = 0;
            const double mag = std::abs(d.density[d.idx(m, k)]);
            if (max_mag > 0.0 && mag > 0.0) {
                const double db = 20.0 * std::log10(mag / max_mag);
                const double lin = (db - floor_db) / (-floor_db);
                const double clipped = std::min(1.0, std::max(0.0, lin));
                pix = static_cast<std::uint8_t>(std::lround(255.0 * clipped));
            }
            out.push_back(pix);
        }
    }
    return out;
}

std::string report_json(const AnalysisReport& rep) {
    json j;
    j["l2_error"] = rep.l2_error;
    j["linf_error"] = rep.linf_error;
    j["recon_rel_error"] = rep.recon_rel_error;
    j["dropped_fraction"] = rep.dropped_fraction;
    return j.dump(2) + "\n";
}

std::string run_sweep(const RunConfig& cfg, int threads) {
    if (cfg.sweep_alphas.empty() || cfg.sweep_rs.empty())
        throw ContractError("sweep: alphas and rs must both be nonempty");

    ComplexSignal z;
    DenseIS truth;
    if (cfg.example) {
        const Example ex = example_signal(*cfg.example, cfg.grid);
        z = ex.signal;
        truth = synthesis_is(*cfg.example, cfg.grid, freq_grid_of(cfg.grid));
    } else if (!cfg.components.empty()) {
        const ParamSet s{cfg.components};
        z = synthesize_signal(s, cfg.grid);
        truth = rasterize(is_from_paramset(s, cfg.grid, freq_grid_of(cfg.grid)));
    } else if (auto it = cfg.paths.find("in"); it != cfg.paths.end()) {
        z = import_signal_csv(read_text_file(it->second));
        // No synthesis information: the monocomponent IS is the reference.
        truth = rasterize(mc_is(z, freq_grid_of(z.grid)));
    } else {
        throw ContractError("sweep: config must provide an example, components, or paths.in");
    }

    const FreqGrid f = freq_grid_of(z.grid);
    std::string csv = "alpha,r,l2_error,recon_rel_error,dropped_fraction,status\n";
    for (double alpha : cfg.sweep_alphas) {
        for (double r : cfg.sweep_rs) {
            std::string row = num17(alpha) + "," + num17(r) + ",";
            try {
                const double gamma = std::atan2(1.0, r); // cot(gamma) = r, gamma in (0, pi)
                const DenseIS est = rasterize(sstfrft_is(z, alpha, gamma, f, threads));
                const AnalysisReport rep = is_metrics(truth, est, z);
                row += num17(rep.l2_error) + "," + num17(rep.recon_rel_error) + "," +
                       num17(rep.dropped_fraction) + ",ok";
            } catch (const std::exception& e) {
                std::string msg = e.what();
                for (char& c : msg)
                    if (c == ',' || c == '\n') c = ';';
                row += "nan,nan,nan,error: " + msg;
            }
            csv += row + "\n";
        }
    }
    return csv;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::uint8_t> read_binary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("failed writing file: " + path);
}

void write_binary_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing file: " + path);
}

} // namespace isa
