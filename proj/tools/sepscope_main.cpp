// sepscope command-line front end.
//
// Subcommands: analyze, fano, css-check, segment-scan, sample, polytope-build.
// Exit codes form a stable contract:
//   analyze:    0 separable (conclusive), 1 entangled, 2 inconclusive
//   css-check:  0 polytope is a CSS, 1 it is not
//   any:        64 parse error, 65 validation error, 66 bad parameter/usage
// SEPSCOPE_LOG selects the stderr log level (off|error|warn|info|debug).

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepscope/sepscope.hpp"

namespace {

using namespace sepscope;

constexpr int kExitSeparable = 0;
constexpr int kExitEntangled = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitParse = 64;
constexpr int kExitValidation = 65;
constexpr int kExitUsage = 66;

enum class LogLevel { Off = 0, Error, Warn, Info, Debug };

LogLevel log_level_from_env() {
    const char* raw = std::getenv("SEPSCOPE_LOG");
    if (!raw) return LogLevel::Warn;
    const std::string v(raw);
    if (v == "off") return LogLevel::Off;
    if (v == "error") return LogLevel::Error;
    if (v == "warn") return LogLevel::Warn;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
}

const LogLevel g_log_level = log_level_from_env();

void log(LogLevel level, const std::string& msg) {
    if (level > g_log_level) return;
    static const char* names[] = {"off", "error", "warn", "info", "debug"};
    std::cerr << "sepscope [" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

class StageTimer {
public:
    void start() { t0_ = std::chrono::steady_clock::now(); }
    double stop() {
        const auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(t1 - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in " + origin + ": " + e.what());
    }
}

struct GlobalOptions {
    Tolerances tol;
    bool json_out = false;
    bool csv_out = false;
    std::optional<std::uint64_t> seed;
    bool ci = false;

    std::uint64_t require_seed() const {
        if (seed) return *seed;
        if (ci) throw BadParameterError("--seed is required in --ci mode");
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        const auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(now).count();
        log(LogLevel::Info, "no --seed given; derived seed from clock");
        return static_cast<std::uint64_t>(ns);
    }
};

void apply_tol_overrides(GlobalOptions& opts, const std::vector<std::string>& overrides) {
    for (const std::string& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw BadParameterError("--tol-override expects key=value, got '" + ov + "'");
        const std::string key = ov.substr(0, eq);
        double value = 0.0;
        try {
            value = std::stod(ov.substr(eq + 1));
        } catch (const std::exception&) {
            throw BadParameterError("--tol-override value is not a number: '" + ov + "'");
        }
        if (!opts.tol.set(key, value))
            throw BadParameterError("unknown tolerance key '" + key +
                                    "' (known: herm, trace, psd, hull, dedup, product, "
                                    "entropy, unitary)");
        log(LogLevel::Debug, "tolerance " + key + " = " + format_double(value));
    }
}

DensityMatrix load_bipartite_state(const std::string& path, const GlobalOptions& opts,
                                   std::string* digest_out) {
    const std::string text = read_file(path);
    if (digest_out) *digest_out = fnv1a_digest(text);
    const Json j = parse_json_text(text, path);
    DensityMatrix rho = state_from_json(j, opts.tol);
    rho.require_factor_dims();
    return rho;
}

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(const std::string& path, int segment_points, const GlobalOptions& opts) {
    StageTimer timer;
    std::map<std::string, double> timings;

    timer.start();
    const std::string text = read_file(path);
    const std::string digest = fnv1a_digest(text);
    const Json input = parse_json_text(text, path);
    timings["load"] = timer.stop();

    timer.start();
    DensityMatrix rho = state_from_json(input, opts.tol);
    const FactorDims dims = rho.require_factor_dims();
    timings["validate"] = timer.stop();

    timer.start();
    const double sm = sm_measure(rho);
    timings["sm_measure"] = timer.stop();

    timer.start();
    const bool product = is_product(rho, opts.tol);
    timings["product_check"] = timer.stop();

    timer.start();
    const double ppt_min = ppt_min_eigenvalue(rho);
    timings["ppt"] = timer.stop();

    timer.start();
    const SegmentScanReport scan = segment_scan(rho, segment_points, opts.tol);
    timings["segment_scan"] = timer.stop();

    Json report;
    report["input_digest"] = digest;
    report["dims"] = Json::array({dims.first, dims.second});
    report["sm_measure"] = sm;
    report["is_product"] = product;
    report["ppt_min_eigenvalue"] = ppt_min;
    report["segment_verdict"] = to_string(scan.verdict);
    report["conclusive"] = scan.conclusive;
    Json jt;
    for (const auto& [stage, ms] : timings) jt[stage] = ms;
    report["timings_ms"] = std::move(jt);

    if (opts.csv_out) {
        std::cout << "input_digest,dims_a,dims_b,sm_measure,is_product,ppt_min_eigenvalue,"
                     "segment_verdict,conclusive\n"
                  << digest << "," << dims.first << "," << dims.second << ","
                  << format_double(sm) << "," << (product ? 1 : 0) << ","
                  << format_double(ppt_min) << "," << to_string(scan.verdict) << ","
                  << (scan.conclusive ? 1 : 0) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }

    if (scan.verdict == SegmentVerdict::EntangledDetected) return kExitEntangled;
    return scan.conclusive ? kExitSeparable : kExitInconclusive;
}

// ---------------------------------------------------------------------------
// fano

int cmd_fano(const std::string& path, const GlobalOptions& opts) {
    const DensityMatrix rho = load_bipartite_state(path, opts, nullptr);
    std::cout << fano_to_json(fano_decompose(rho)).dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// css-check

int cmd_css_check(const std::string& path, const GlobalOptions& opts) {
    const Json j = parse_json_text(read_file(path), path);
    const ProductPolytope poly = polytope_from_json(j, opts.tol);

    const std::size_t before = poly.vertices.size();
    const ProductPolytope pruned =
        make_product_polytope(prune_duplicates(poly.vertices, opts.tol.dedup));
    const ProductPolytope image = lambda_tau(pruned, opts.tol);
    const bool css = polytope_equal(image, pruned, opts.tol);
    const double max_residual = polytope_equal_max_residual(image, pruned, opts.tol);

    Json report;
    report["is_css"] = css;
    report["max_residual"] = max_residual;
    report["vertices_before"] = before;
    report["vertices_after"] = pruned.vertices.size();
    std::cout << report.dump(2) << "\n";
    return css ? 0 : 1;
}

// ---------------------------------------------------------------------------
// segment-scan

int cmd_segment_scan(const std::string& path, int segment_points, const GlobalOptions& opts) {
    const DensityMatrix rho = load_bipartite_state(path, opts, nullptr);
    const SegmentScanReport report = segment_scan(rho, segment_points, opts.tol);
    if (opts.csv_out)
        std::cout << segment_report_to_csv(report);
    else
        std::cout << segment_report_to_json(report).dump(2) << "\n";
    return report.verdict == SegmentVerdict::EntangledDetected ? kExitEntangled
           : report.conclusive                                 ? kExitSeparable
                                                               : kExitInconclusive;
}

// ---------------------------------------------------------------------------
// sample

int cmd_sample(int dim_a, int dim_b, int count, const GlobalOptions& opts) {
    if (count < 1) throw BadParameterError("--count must be at least 1");
    if (dim_a < 2 || dim_b < 2) throw BadParameterError("--dims factors must be at least 2");
    Rng rng(opts.require_seed());
    const FactorDims dims{dim_a, dim_b};

    struct Row {
        int index;
        double sm;
        double ppt_min;
        int ppt_flag;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const DensityMatrix rho = random_state(dims, rng);
        const double sm = sm_measure(rho);
        const double ppt_min = ppt_min_eigenvalue(rho);
        rows.push_back(Row{i, sm, ppt_min, ppt_min >= -opts.tol.psd ? 1 : 0});
    }

    if (opts.json_out) {
        Json out = Json::array();
        for (const Row& r : rows)
            out.push_back(Json{{"index", r.index},
                               {"sm_measure", r.sm},
                               {"ppt_min_eigenvalue", r.ppt_min},
                               {"ppt_flag", r.ppt_flag}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "index,sm_measure,ppt_min_eigenvalue,ppt_flag\n";
        for (const Row& r : rows)
            std::cout << r.index << "," << format_double(r.sm) << ","
                      << format_double(r.ppt_min) << "," << r.ppt_flag << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// polytope-build

int cmd_polytope_build(const std::string& path, const GlobalOptions& opts) {
    const Json j = parse_json_text(read_file(path), path);
    const SeparableDecomposition dec = decomposition_from_json(j, opts.tol);
    const ProductPolytope poly = invariant_polytope(dec);
    std::cout << polytope_to_json(poly).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sepscope: bipartite separability analysis via convex state geometry"};
    app.require_subcommand(1);

    GlobalOptions opts;
    std::vector<std::string> tol_overrides;
    app.add_option("--tol-override", tol_overrides,
                   "Override a named tolerance, key=value (repeatable)");
    app.add_flag("--json", opts.json_out, "Emit JSON output");
    app.add_flag("--csv", opts.csv_out, "Emit CSV output");
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "Seed for all randomness");
    app.add_flag("--ci", opts.ci, "CI mode: refuse to run randomized commands without --seed");

    std::string analyze_path, fano_path, css_path, scan_path, build_path;
    int segment_points = 101;
    int sample_count = 0, sample_dim_a = 0, sample_dim_b = 0;

    auto* analyze = app.add_subcommand("analyze", "Full separability report for a state file");
    analyze->add_option("state", analyze_path, "State JSON file")->required();
    analyze->add_option("--segment-points", segment_points, "Points on the segment scan");

    auto* fano = app.add_subcommand("fano", "Generator-basis decomposition of a state file");
    fano->add_option("state", fano_path, "State JSON file")->required();

    auto* css = app.add_subcommand("css-check", "Test a polytope file for lambda-tau invariance");
    css->add_option("polytope", css_path, "Polytope JSON file")->required();

    auto* scan = app.add_subcommand("segment-scan", "PPT scan along the segment to Omega(rho)");
    scan->add_option("state", scan_path, "State JSON file")->required();
    scan->add_option("--segment-points", segment_points, "Points on the segment scan");

    auto* sample = app.add_subcommand("sample", "Batch metrics over random states, CSV");
    sample->add_option("--dims", [&](const std::vector<std::string>& vals) {
               if (vals.size() != 2) return false;
               sample_dim_a = std::stoi(vals[0]);
               sample_dim_b = std::stoi(vals[1]);
               return true;
           },
           "Factor dimensions N K")
        ->expected(2)
        ->required();
    sample->add_option("--count", sample_count, "Number of states")->required();

    auto* build = app.add_subcommand("polytope-build",
                                     "Invariant polytope from a decomposition file");
    build->add_option("decomposition", build_path, "Decomposition JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (seed_opt->count() > 0) opts.seed = seed_value;

    try {
        apply_tol_overrides(opts, tol_overrides);
        if (analyze->parsed()) return cmd_analyze(analyze_path, segment_points, opts);
        if (fano->parsed()) return cmd_fano(fano_path, opts);
        if (css->parsed()) return cmd_css_check(css_path, opts);
        if (scan->parsed()) return cmd_segment_scan(scan_path, segment_points, opts);
        if (sample->parsed()) return cmd_sample(sample_dim_a, sample_dim_b, sample_count, opts);
        if (build->parsed()) return cmd_polytope_build(build_path, opts);
    } catch (const ParseError& e) {
        log(LogLevel::Error, e.what());
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BadParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadCountError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        log(LogLevel::Error, e.what());
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
