#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lfwa/benchmarks.hpp"
#include "lfwa/harness.hpp"
#include "lfwa/report.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Unknown names and malformed lists surface as std::invalid_argument and map
// to the usage exit code.
using UsageError = std::invalid_argument;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, sep);) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

/// "f1..f9", "f1,f3,f5..f7" or "all".
std::vector<std::string> expand_functions(const std::string& spec) {
    if (spec == "all") return {lfwa::kFunctionIds.begin(), lfwa::kFunctionIds.end()};
    std::vector<std::string> out;
    for (const auto& item : split(spec, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            lfwa::make_objective(item);
            out.push_back(item);
            continue;
        }
        const std::string from = item.substr(0, dots);
        const std::string to = item.substr(dots + 2);
        lfwa::make_objective(from);
        lfwa::make_objective(to);
        const int a = std::stoi(from.substr(1));
        const int b = std::stoi(to.substr(1));
        if (a > b) throw UsageError("empty function range '" + item + "'");
        for (int k = a; k <= b; ++k) out.push_back("f" + std::to_string(k));
    }
    if (out.empty()) throw UsageError("no functions selected");
    return out;
}

std::vector<lfwa::Algorithm> expand_algorithms(const std::string& spec) {
    if (spec == "all") return {lfwa::kAlgorithms.begin(), lfwa::kAlgorithms.end()};
    std::vector<lfwa::Algorithm> out;
    for (const auto& item : split(spec, ',')) out.push_back(lfwa::parse_algorithm(item));
    if (out.empty()) throw UsageError("no algorithms selected");
    return out;
}

struct CommonOptions {
    std::size_t runs = 20;
    std::size_t iterations = 1000;
    std::optional<std::size_t> pop_size;
    std::uint64_t seed = 0;
    double tolerance = 1e-5;
    std::size_t gaussian_sparks = 0;
    bool scalar_beta = false;
    std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string output;
    std::string format = "csv";
    bool per_run = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--runs", o.runs, "independent replications")->check(CLI::PositiveNumber);
    cmd->add_option("--iterations", o.iterations, "generations per run");
    cmd->add_option("--pop-size", o.pop_size, "population size of the selected algorithm(s)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "base seed; replicate k uses seed + k");
    cmd->add_option("--tolerance", o.tolerance, "success tolerance")->check(CLI::NonNegativeNumber);
    cmd->add_option("--gaussian-sparks", o.gaussian_sparks, "LFWA Gaussian sparks per generation (0: 3 per firework)");
    cmd->add_flag("--scalar-beta", o.scalar_beta, "LFWA: one displacement coefficient per spark");
    cmd->add_option("--jobs", o.jobs, "concurrent replications")->check(CLI::PositiveNumber);
    cmd->add_option("--output", o.output, "output path prefix");
    cmd->add_option("--format", o.format, "summary format")->check(CLI::IsMember({"csv", "json"}));
}

lfwa::RunConfig make_config(const CommonOptions& o) {
    lfwa::RunConfig c;
    c.max_iterations = o.iterations;
    c.tolerance = o.tolerance;
    c.seed = o.seed;
    c.gaussian_sparks_per_generation = o.gaussian_sparks;
    c.scalar_beta = o.scalar_beta;
    if (o.pop_size) c.population_size = *o.pop_size;
    return c;
}

lfwa::AlgorithmParams make_params(const CommonOptions& o) {
    lfwa::AlgorithmParams p;
    if (o.pop_size) {
        p.fwa.fireworks = *o.pop_size;
        p.spso.swarm_size = *o.pop_size;
        p.ba.population = *o.pop_size;
    }
    return p;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
    std::cerr << "wrote " << path << '\n';
}

std::string summary_text(const std::vector<lfwa::Experiment>& exps, const std::string& format) {
    std::ostringstream os;
    if (format == "json") lfwa::report::write_summary_json(os, exps);
    else lfwa::report::write_summary_csv(os, exps);
    return os.str();
}

std::string default_prefix(const std::string& verb, const std::vector<lfwa::Experiment>& exps,
                           const CommonOptions& o) {
    std::string key;
    for (const auto& e : exps) {
        key += std::string(lfwa::to_string(e.algorithm)) + e.objective +
               lfwa::report::params_fingerprint(e.algorithm, e.config, e.params);
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char tag[9];
    std::snprintf(tag, sizeof tag, "%08llx", static_cast<unsigned long long>(h >> 32));
    std::string name = verb;
    if (exps.size() == 1) name += "_" + std::string(lfwa::to_string(exps[0].algorithm)) + "_" + exps[0].objective;
    return name + "_r" + std::to_string(o.runs) + "_i" + std::to_string(o.iterations) + "_s" +
           std::to_string(o.seed) + "_" + tag;
}

std::string curves_text(const lfwa::Experiment& e, lfwa::CurveTransform t, bool per_run) {
    std::ostringstream os;
    lfwa::report::write_curves_csv(os, lfwa::export_curves(e.records, t, per_run));
    return os.str();
}

std::string provenance_text(const std::vector<lfwa::Experiment>& exps) {
    return lfwa::report::provenance_json(exps).dump(2) + "\n";
}

lfwa::CurveTransform parse_transform(const std::string& s) {
    return s == "log10" ? lfwa::CurveTransform::log10 : lfwa::CurveTransform::raw;
}

std::string short_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void list_functions(std::ostream& os) {
    os << "id,name,dim,domain,declared_optimum,form_differs,optimum_inconsistent\n";
    for (const auto& o : lfwa::all_objectives()) {
        os << o.id() << ',' << o.name() << ',' << o.dim() << ",[" << short_real(o.space().lower(0)) << ' '
           << short_real(o.space().upper(0)) << "]^" << o.dim() << ',' << short_real(o.declared_optimum()) << ','
           << (o.note().differs_from_printed ? "yes" : "no") << ','
           << (o.note().optimum_inconsistent ? "INCONSISTENT" : "no") << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lite fireworks algorithm and baseline benchmark harness"};
    app.require_subcommand(1);

    CommonOptions run_opts, cmp_opts, curve_opts;
    std::string run_alg = "lfwa", run_fn;
    std::string curve_alg = "lfwa", curve_fn, transform = "raw";
    std::string cmp_algs = "all", cmp_fns = "all";

    auto* list_cmd = app.add_subcommand("list-functions", "print the benchmark registry");

    auto* run_cmd = app.add_subcommand("run", "one algorithm on one function: summary, curves, provenance");
    run_cmd->add_option("--algorithm", run_alg, "lfwa|fwa|spso|ba");
    run_cmd->add_option("--function", run_fn, "f1..f9")->required();
    run_cmd->add_flag("--per-run", run_opts.per_run, "one curve column per run");
    add_common(run_cmd, run_opts);

    auto* cmp_cmd = app.add_subcommand("compare", "algorithm x function grid: one summary row per pair");
    cmp_cmd->add_option("--algorithms", cmp_algs, "comma list or 'all'");
    cmp_cmd->add_option("--functions", cmp_fns, "comma list, ranges like f1..f9, or 'all'");
    add_common(cmp_cmd, cmp_opts);

    auto* curve_cmd = app.add_subcommand("curve", "convergence curve of one algorithm on one function");
    curve_cmd->add_option("--algorithm", curve_alg, "lfwa|fwa|spso|ba");
    curve_cmd->add_option("--function", curve_fn, "f1..f9")->required();
    curve_cmd->add_option("--transform", transform, "raw|log10")->check(CLI::IsMember({"raw", "log10"}));
    curve_cmd->add_flag("--per-run", curve_opts.per_run, "one curve column per run");
    add_common(curve_cmd, curve_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (list_cmd->parsed()) {
            list_functions(std::cout);
            return 0;
        }

        if (run_cmd->parsed() || curve_cmd->parsed()) {
            const bool is_run = run_cmd->parsed();
            const CommonOptions& o = is_run ? run_opts : curve_opts;
            const auto algorithm = lfwa::parse_algorithm(is_run ? run_alg : curve_alg);
            const std::string fn = is_run ? run_fn : curve_fn;
            lfwa::make_objective(fn);
            const auto config = make_config(o);
            config.validate();

            std::vector<lfwa::Experiment> exps;
            exps.push_back(lfwa::run_experiment(algorithm, fn, o.runs, config, o.seed, make_params(o), o.jobs));
            const std::string prefix = o.output.empty() ? default_prefix(is_run ? "run" : "curve", exps, o) : o.output;

            if (is_run) {
                write_file(prefix + ".summary." + o.format, summary_text(exps, o.format));
                write_file(prefix + ".curves.csv", curves_text(exps[0], lfwa::CurveTransform::raw, o.per_run));
            } else {
                write_file(prefix + ".curves.csv", curves_text(exps[0], parse_transform(transform), o.per_run));
            }
            write_file(prefix + ".provenance.json", provenance_text(exps));
            std::cout << summary_text(exps, "csv");
            return 0;
        }

        if (cmp_cmd->parsed()) {
            const auto algorithms = expand_algorithms(cmp_algs);
            const auto functions = expand_functions(cmp_fns);
            const auto config = make_config(cmp_opts);
            config.validate();
            std::vector<lfwa::Experiment> exps;
            for (auto a : algorithms) {
                for (const auto& fn : functions) {
                    exps.push_back(
                        lfwa::run_experiment(a, fn, cmp_opts.runs, config, cmp_opts.seed, make_params(cmp_opts),
                                             cmp_opts.jobs));
                }
            }
            const std::string prefix =
                cmp_opts.output.empty() ? default_prefix("compare", exps, cmp_opts) : cmp_opts.output;
            write_file(prefix + ".summary." + cmp_opts.format, summary_text(exps, cmp_opts.format));
            write_file(prefix + ".provenance.json", provenance_text(exps));
            std::cout << summary_text(exps, "csv");
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
