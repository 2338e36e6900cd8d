// gzlab: command-line surface for the Gelfand-Zeitlin / contraction toolkit.
//
// Subcommands: eval, interlace, bracket-check, flow, polytope, reconstruct,
// chain, fiber, survey. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 validation failure, 2 argument/IO errors.
//
// Every randomized command is bit-reproducible given (seed, flags): per-sample
// seeds are drawn from a splitmix64 stream (seed_i = mix(master + (i+1)*gamma))
// so parallel execution over GZ_THREADS workers cannot change any byte of the
// output.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gz/gz.hpp"

namespace {

using nlohmann::json;

struct CommonOptions {
    std::string group = "U";
    std::vector<double> lambda;
    int n = 0;
    double tol = 1e-9;
    double rank_tol = 1e-8;
    double fd_step = 1e-5;
    std::uint64_t seed = 0;
    int samples = 1;
    bool strict = false;
    std::string input;
    std::string output;
};

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        json j;
        try {
            std::cin >> j;
        } catch (const json::exception& e) {
            throw gz::ArgumentError(std::string("cannot parse stdin as JSON: ") + e.what());
        }
        return j;
    }
    std::ifstream in(path);
    if (!in) throw gz::ArgumentError("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw gz::ArgumentError("cannot parse '" + path + "' as JSON: " + e.what());
    }
    return j;
}

json parse_inline_or_file(const std::string& text) {
    if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
        try {
            return json::parse(text);
        } catch (const json::exception& e) {
            throw gz::ArgumentError(std::string("cannot parse inline JSON: ") + e.what());
        }
    }
    return read_json_input(text);
}

void emit_text(const std::string& text, const std::string& output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw gz::ArgumentError("cannot open output file '" + output_path + "'");
    out << text;
}

void emit(const json& j, const std::string& output_path) { emit_text(j.dump() + "\n", output_path); }

gz::Spectrum lambda_of(const CommonOptions& opt) {
    if (opt.lambda.empty()) throw gz::ArgumentError("missing --lambda");
    return gz::Spectrum(opt.lambda);
}

// Either --input (matrix JSON) or --lambda with --seed.
gz::HermitianMatrix hermitian_point(const CommonOptions& opt) {
    if (!opt.input.empty()) return gz::hermitian_from_json(read_json_input(opt.input));
    return gz::sample_orbit_point(lambda_of(opt), opt.seed);
}

gz::SkewSymmetricMatrix skew_point(const CommonOptions& opt) {
    if (!opt.input.empty()) return gz::skew_from_json(read_json_input(opt.input));
    if (opt.n == 0) throw gz::ArgumentError("SO sampling needs --n");
    return gz::sample_orbit_point_so(lambda_of(opt), opt.n, opt.seed);
}

int cmd_eval(const CommonOptions& opt) {
    json out;
    if (opt.group == "SO") {
        const auto a = skew_point(opt);
        out["pattern"] = to_json(gz_map(a));
        out["chamber"] = to_json(sweep(a, opt.tol));
    } else {
        const auto a = hermitian_point(opt);
        out["pattern"] = to_json(gz_map(a));
        out["chamber"] = to_json(sweep(a, opt.tol));
    }
    emit(out, opt.output);
    return 0;
}

int cmd_interlace(const CommonOptions& opt, const std::string& pattern_text) {
    const auto p = gz::pattern_from_json(parse_inline_or_file(pattern_text.empty() ? opt.input : pattern_text));
    const auto violations = gz::check_interlacing(p, opt.tol);
    json out;
    out["valid"] = violations.empty();
    out["violations"] = json::array();
    for (const auto& v : violations) out["violations"].push_back(to_json(v));
    emit(out, opt.output);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "interlacing: " << v.describe() << "\n";
        return 1;
    }
    return 0;
}

template <class M>
json bracket_sweep(const std::vector<gz::ScalarField<M>>& fields, const std::vector<M>& points, bool use_fd,
                   double fd_step) {
    // Pairwise brackets over all sampled points, parallel over points,
    // canonical order in the output.
    std::vector<double> point_max(points.size(), 0.0);
    gz::parallel_for_index(static_cast<int>(points.size()), [&](int pi) {
        const M& a = points[static_cast<std::size_t>(pi)];
        std::vector<M> grads;
        grads.reserve(fields.size());
        for (const auto& f : fields) {
            if (use_fd) {
                gz::ScalarField<M> fd = f;
                fd.grad = nullptr;
                grads.push_back(gz::gradient(fd, a, fd_step));
            } else {
                grads.push_back(gz::gradient(f, a, fd_step));
            }
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < fields.size(); ++i)
            for (std::size_t j = i + 1; j < fields.size(); ++j)
                worst = std::max(worst, std::abs(gz::lie_poisson_pairing(a, grads[i], grads[j])));
        point_max[static_cast<std::size_t>(pi)] = worst;
    });
    double overall = 0.0;
    for (double v : point_max) overall = std::max(overall, v);
    json out;
    out["max_abs_bracket"] = overall;
    out["per_point_max"] = point_max;
    out["gradient"] = use_fd ? "finite-difference" : "analytic";
    return out;
}

int cmd_bracket_check(const CommonOptions& opt, bool use_fd, double threshold) {
    json out;
    if (opt.group == "SO") {
        if (opt.n == 0) throw gz::ArgumentError("bracket-check for SO needs --n");
        const auto lambda = lambda_of(opt);
        std::vector<gz::SkewSymmetricMatrix> points;
        for (int i = 0; i < opt.samples; ++i)
            points.push_back(gz::sample_orbit_point_so(lambda, opt.n, gz::child_seed(opt.seed, i)));
        out = bracket_sweep(gz::gz_fields_so(opt.n), points, use_fd, opt.fd_step);
    } else {
        const auto lambda = lambda_of(opt);
        std::vector<gz::HermitianMatrix> points;
        for (int i = 0; i < opt.samples; ++i)
            points.push_back(gz::sample_orbit_point(lambda, gz::child_seed(opt.seed, i)));
        out = bracket_sweep(gz::gz_fields(lambda.size()), points, use_fd, opt.fd_step);
    }
    const double measured = out["max_abs_bracket"].get<double>();
    out["threshold"] = threshold;
    out["pass"] = measured <= threshold;
    emit(out, opt.output);
    if (measured > threshold) {
        std::cerr << "bracket-check: max |{f,g}| = " << measured << " exceeds " << threshold << "\n";
        return 1;
    }
    return 0;
}

template <class M, class Field>
int run_flow(const CommonOptions& opt, const Field& f, const M& a0, double t_end, double dt,
             const std::string& format) {
    const auto trace = gz::lax_flow(f, a0, t_end, dt, opt.fd_step);
    if (format == "csv") {
        std::ostringstream os;
        gz::write_csv(os, trace);
        emit_text(os.str(), opt.output);
    } else {
        emit(to_json(trace), opt.output);
    }
    return 0;
}

int cmd_flow(const CommonOptions& opt, int level, int index, double t_end, double dt, const std::string& format) {
    if (format != "json" && format != "csv") throw gz::ArgumentError("--format must be json or csv");
    if (opt.group == "SO")
        return run_flow(opt, gz::eigenvalue_field_so(level, index), skew_point(opt), t_end, dt, format);
    return run_flow(opt, gz::eigenvalue_field(level, index), hermitian_point(opt), t_end, dt, format);
}

int cmd_polytope(const CommonOptions& opt) {
    const auto group = gz::group_from_string(opt.group);
    const auto spec = gz::polytope_spec(lambda_of(opt), group, opt.n);
    emit(to_json(spec), opt.output);
    return 0;
}

int cmd_reconstruct(const CommonOptions& opt, const std::string& pattern_text, const std::string& phases_text,
                    bool random_phases) {
    const auto p = gz::pattern_from_json(parse_inline_or_file(pattern_text.empty() ? opt.input : pattern_text));
    gz::HermitianMatrix a;
    if (random_phases) {
        a = gz::reconstruct_random_phases(p, opt.seed, opt.tol);
    } else if (!phases_text.empty()) {
        const auto phases = parse_inline_or_file(phases_text).get<std::vector<std::vector<double>>>();
        a = gz::reconstruct(p, phases, opt.tol);
    } else {
        a = gz::reconstruct(p, {}, opt.tol);
    }
    emit(to_json(a), opt.output);
    return 0;
}

int cmd_chain(const CommonOptions& opt) {
    json out;
    if (opt.group == "SO") {
        out = to_json(gz::chain_report(skew_point(opt), opt.tol, opt.rank_tol));
    } else {
        out = to_json(gz::chain_report(hermitian_point(opt), opt.tol, opt.rank_tol));
    }
    emit(out, opt.output);
    return 0;
}

int cmd_fiber(const CommonOptions& opt, const std::string& pattern_text) {
    if (opt.group == "SO") {
        // SO fibers are analyzed at a supplied orbit point (dimension data
        // only; there is no SO inverse construction).
        const auto a = skew_point(opt);
        const auto tangent = gz::fiber_tangent(a, opt.tol, opt.rank_tol);
        const int dim_orbit = gz::orbit_dimension_so(gz::skew_spectrum(a), a.size(), opt.tol);
        json out;
        out["total_dim"] = tangent.dim;
        out["torus_rank"] = tangent.dim - tangent.leaf_dim_total;
        out["oracle_dim"] = dim_orbit - gz::jacobian_rank(a, opt.tol, opt.rank_tol);
        out["consistent"] = out["total_dim"] == out["oracle_dim"];
        out["warning"] = tangent.warning;
        emit(out, opt.output);
        if (opt.strict && !out["consistent"].get<bool>()) return 1;
        return 0;
    }
    const auto p = gz::pattern_from_json(parse_inline_or_file(pattern_text.empty() ? opt.input : pattern_text));
    const auto lambda = opt.lambda.empty() ? p.top_row() : lambda_of(opt);
    const auto report = gz::classify_fiber(lambda, p, opt.seed, opt.tol, opt.rank_tol);
    emit(to_json(report), opt.output);
    if (opt.strict && !report.consistent) {
        std::cerr << "fiber: total_dim " << report.total_dim << " != oracle_dim " << report.oracle_dim << "\n";
        return 1;
    }
    return 0;
}

int cmd_survey(const CommonOptions& opt, const std::string& csv_path) {
    if (gz::group_from_string(opt.group) != gz::GroupKind::U)
        throw gz::ArgumentError("survey supports U orbits (SO fibers are point-wise via 'fiber --input')");
    const auto lambda = lambda_of(opt);
    const auto reports = gz::survey_polytope(lambda, opt.samples, opt.seed, opt.tol, opt.rank_tol);

    std::ostringstream lines;
    int consistent = 0;
    for (const auto& r : reports) {
        lines << to_json(r).dump() << "\n";
        if (r.consistent) ++consistent;
    }
    emit_text(lines.str(), opt.output);

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw gz::ArgumentError("cannot open CSV file '" + csv_path + "'");
        csv << "pattern_digest,total_dim,oracle_dim,consistent\n";
        for (const auto& r : reports)
            csv << gz::fnv1a_digest(to_json(r.pattern).dump()) << "," << r.total_dim << "," << r.oracle_dim << ","
                << (r.consistent ? "true" : "false") << "\n";
    }

    const auto degeneration = gz::summarize_degeneration(reports);
    std::cerr << "survey: " << consistent << "/" << reports.size() << " consistent; degeneration "
              << to_json(degeneration).dump() << "\n";
    if (opt.strict && consistent != static_cast<int>(reports.size())) return 1;
    return 0;
}

// --config support: a JSON object of long-option values applied before the
// command line (command line wins because options take the last value).
std::vector<std::string> apply_config(const std::vector<std::string>& args) {
    std::string config_path;
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") config_path = args[i + 1];
    if (config_path.empty()) return args;

    const json cfg = read_json_input(config_path);
    if (!cfg.is_object()) throw gz::ArgumentError("config file must hold a JSON object");
    std::vector<std::string> merged;
    merged.push_back(args.empty() ? "gzlab" : args[0]);
    if (args.size() > 1) merged.push_back(args[1]); // subcommand first
    for (const auto& [key, value] : cfg.items()) {
        if (key == "strict") {
            if (value.is_boolean() && value.get<bool>()) merged.push_back("--strict");
            continue;
        }
        merged.push_back("--" + key);
        if (value.is_string())
            merged.push_back(value.get<std::string>());
        else if (value.is_array()) {
            std::string flat;
            for (const auto& v : value) {
                if (!flat.empty()) flat += ",";
                flat += v.dump();
            }
            merged.push_back(flat);
        } else
            merged.push_back(value.dump());
    }
    for (std::size_t i = 2; i < args.size(); ++i) merged.push_back(args[i]);
    return merged;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Gelfand-Zeitlin orbit toolkit: chain spectra, Lie-Poisson brackets, action flows,\n"
        "pattern polytopes, inverse reconstruction and fiber classification.\n\n"
        "Seeding: randomized commands derive per-sample seeds from --seed via a splitmix64\n"
        "stream (seed_i = scramble(seed + (i+1)*0x9E3779B97F4A7C15)), so results are\n"
        "byte-identical for a fixed command line regardless of GZ_THREADS."};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string config_path;
    std::string pattern_text, phases_text, csv_path, format = "json";
    bool use_fd = false, random_phases = false;
    double threshold = -1.0;
    int level = 1, index = 1;
    double t_end = 1.0, dt = 1e-3;

    const auto take_last = CLI::MultiOptionPolicy::TakeLast;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--group", opt.group, "U or SO")->capture_default_str()->multi_option_policy(take_last);
        cmd->add_option("--lambda", opt.lambda, "orbit spectrum (comma separated)")
            ->delimiter(',')
            ->multi_option_policy(take_last);
        cmd->add_option("--n", opt.n, "matrix size (needed for SO moduli)")->multi_option_policy(take_last);
        cmd->add_option("--tol", opt.tol, "clustering/validation tolerance")
            ->capture_default_str()
            ->check(CLI::PositiveNumber)
            ->multi_option_policy(take_last);
        cmd->add_option("--rank-tol", opt.rank_tol, "numerical rank threshold")
            ->capture_default_str()
            ->check(CLI::PositiveNumber)
            ->multi_option_policy(take_last);
        cmd->add_option("--fd-step", opt.fd_step, "finite difference step")
            ->capture_default_str()
            ->check(CLI::PositiveNumber)
            ->multi_option_policy(take_last);
        cmd->add_option("--seed", opt.seed, "master seed")->capture_default_str()->multi_option_policy(take_last);
        cmd->add_option("--samples", opt.samples, "sample count")
            ->capture_default_str()
            ->check(CLI::PositiveNumber)
            ->multi_option_policy(take_last);
        cmd->add_flag("--strict", opt.strict, "nonzero exit on failed checks");
        cmd->add_option("--input", opt.input, "input file ('-' for stdin)")->multi_option_policy(take_last);
        cmd->add_option("--output", opt.output, "output file (default stdout)")->multi_option_policy(take_last);
        cmd->add_option("--config", config_path, "JSON config file with option defaults")
            ->multi_option_policy(take_last);
    };

    auto* eval = app.add_subcommand("eval", "pattern and chamber point of a matrix");
    add_common(eval);

    auto* interlace = app.add_subcommand("interlace", "validate a pattern's interlacing");
    add_common(interlace);
    interlace->add_option("--pattern", pattern_text, "pattern JSON (inline or file)")->multi_option_policy(take_last);

    auto* bracket = app.add_subcommand("bracket-check", "max |{f,g}| over chain component pairs");
    add_common(bracket);
    bracket->add_flag("--fd", use_fd, "use pure finite-difference gradients");
    bracket->add_option("--threshold", threshold, "pass/fail bound (default 1e-6, 1e-4 with --fd)")
        ->multi_option_policy(take_last);

    auto* flow = app.add_subcommand("flow", "integrate the Lax flow of a chain component");
    add_common(flow);
    flow->add_option("--level", level, "component level k")->capture_default_str()->multi_option_policy(take_last);
    flow->add_option("--index", index, "component index i")->capture_default_str()->multi_option_policy(take_last);
    flow->add_option("--t-end", t_end, "integration time")->capture_default_str()->multi_option_policy(take_last);
    flow->add_option("--dt", dt, "step size")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->multi_option_policy(take_last);
    flow->add_option("--format", format, "json or csv")->capture_default_str()->multi_option_policy(take_last);

    auto* polytope = app.add_subcommand("polytope", "interlacing inequalities of an orbit's pattern image");
    add_common(polytope);

    auto* rec = app.add_subcommand("reconstruct", "matrix with a prescribed pattern");
    add_common(rec);
    rec->add_option("--pattern", pattern_text, "pattern JSON (inline or file)")->multi_option_policy(take_last);
    rec->add_option("--phases", phases_text, "border phase rows (JSON)")->multi_option_policy(take_last);
    rec->add_flag("--random-phases", random_phases, "seeded random border phases");

    auto* chain = app.add_subcommand("chain", "per-level strata and leaf dimensions");
    add_common(chain);

    auto* fiber = app.add_subcommand("fiber", "classify the fiber over a pattern");
    add_common(fiber);
    fiber->add_option("--pattern", pattern_text, "pattern JSON (inline or file)")->multi_option_policy(take_last);

    auto* survey = app.add_subcommand("survey", "Monte Carlo fiber survey over the polytope");
    add_common(survey);
    survey->add_option("--csv", csv_path, "write a CSV summary to this path")->multi_option_policy(take_last);

    std::vector<std::string> raw_args(argv, argv + argc);
    try {
        raw_args = apply_config(raw_args);
    } catch (const std::exception& e) {
        std::cerr << "gzlab: " << e.what() << "\n";
        return 2;
    }
    std::vector<char*> carg;
    carg.reserve(raw_args.size());
    for (auto& s : raw_args) carg.push_back(s.data());

    try {
        app.parse(static_cast<int>(carg.size()), carg.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) return cmd_eval(opt);
        if (*interlace) return cmd_interlace(opt, pattern_text);
        if (*bracket) {
            if (threshold < 0.0) threshold = use_fd ? 1e-4 : 1e-6;
            return cmd_bracket_check(opt, use_fd, threshold);
        }
        if (*flow) return cmd_flow(opt, level, index, t_end, dt, format);
        if (*polytope) return cmd_polytope(opt);
        if (*rec) return cmd_reconstruct(opt, pattern_text, phases_text, random_phases);
        if (*chain) return cmd_chain(opt);
        if (*fiber) return cmd_fiber(opt, pattern_text);
        if (*survey) return cmd_survey(opt, csv_path);
        std::cerr << "gzlab: no subcommand\n";
        return 2;
    } catch (const gz::ArgumentError& e) {
        std::cerr << "gzlab: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "gzlab: JSON error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gzlab: " << e.what() << "\n";
        return 1;
    }
}
