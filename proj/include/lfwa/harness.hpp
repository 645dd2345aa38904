#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "lfwa/baselines.hpp"
#include "lfwa/benchmarks.hpp"
#include "lfwa/core.hpp"
#include "lfwa/lfwa.hpp"
#include "lfwa/run_record.hpp"

namespace lfwa {

enum class Algorithm { lfwa, fwa, spso, ba };

inline constexpr std::array<Algorithm, 4> kAlgorithms = {Algorithm::lfwa, Algorithm::fwa, Algorithm::spso,
                                                         Algorithm::ba};

inline std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::lfwa: return "lfwa";
        case Algorithm::fwa: return "fwa";
        case Algorithm::spso: return "spso";
        case Algorithm::ba: return "ba";
    }
    return "?";
}

class UnknownAlgorithmError : public std::invalid_argument {
public:
    explicit UnknownAlgorithmError(std::string_view name)
        : std::invalid_argument("unknown algorithm '" + std::string(name) + "'; valid names: lfwa, fwa, spso, ba") {}
};

inline Algorithm parse_algorithm(std::string_view name) {
    for (Algorithm a : kAlgorithms) {
        if (to_string(a) == name) return a;
    }
    throw UnknownAlgorithmError(name);
}

struct AlgorithmParams {
    FwaParams fwa;
    SpsoParams spso;
    BaParams ba;
};

inline std::size_t population_of(Algorithm a, const RunConfig& config, const AlgorithmParams& params) {
    switch (a) {
        case Algorithm::lfwa: return config.population_size;
        case Algorithm::fwa: return params.fwa.fireworks;
        case Algorithm::spso: return params.spso.swarm_size;
        case Algorithm::ba: return params.ba.population;
    }
    return 0;
}

inline RunRecord run_once(Algorithm a, const Objective& objective, const RunConfig& config,
                          const AlgorithmParams& params = {}) {
    switch (a) {
        case Algorithm::lfwa: return lfwa_run(objective, config);
        case Algorithm::fwa: return fwa_run(objective, params.fwa, config);
        case Algorithm::spso: return spso_run(objective, params.spso, config);
        case Algorithm::ba: return ba_run(objective, params.ba, config);
    }
    throw std::logic_error("run_once: unhandled algorithm");
}

/// Worst / best / mean / population SD of the final values, and the
/// fraction within tolerance of the declared optimum.
struct ExperimentSummary {
    double worst = 0.0;
    double best = 0.0;
    double mean = 0.0;
    double sd = 0.0;
    double success_rate = 0.0;
    std::size_t run_count = 0;
    Vector finals;
};

inline ExperimentSummary summarize(std::span<const double> finals, double declared_optimum, double tolerance) {
    if (finals.empty()) throw std::invalid_argument("summarize: no runs");
    ExperimentSummary out;
    out.finals.assign(finals.begin(), finals.end());
    out.run_count = finals.size();

    // Sorted copy: sums then do not depend on run order.
    Vector sorted(finals.begin(), finals.end());
    std::sort(sorted.begin(), sorted.end());
    out.best = sorted.front();
    out.worst = sorted.back();
    const double n = static_cast<double>(sorted.size());

    if (out.best == out.worst) {
        out.mean = out.best;
        out.sd = 0.0;
    } else {
        out.mean = std::clamp(std::accumulate(sorted.begin(), sorted.end(), 0.0) / n, out.best, out.worst);
        double ss = 0.0;
        for (double v : sorted) ss += (v - out.mean) * (v - out.mean);
        out.sd = std::sqrt(ss / n);
    }

    std::size_t hits = 0;
    for (double v : sorted) {
        if (std::abs(v - declared_optimum) <= tolerance) ++hits;
    }
    out.success_rate = static_cast<double>(hits) / n;
    return out;
}

class ExperimentError : public std::runtime_error {
public:
    ExperimentError(std::uint64_t seed, const std::string& what)
        : std::runtime_error("run with seed " + std::to_string(seed) + " failed: " + what), seed_(seed) {}
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

struct Experiment {
    Algorithm algorithm = Algorithm::lfwa;
    std::string objective;
    RunConfig config;
    AlgorithmParams params;
    std::uint64_t base_seed = 0;
    ExperimentSummary summary;
    std::vector<RunRecord> records;
};

/// `runs` replications with seeds base_seed + k, spread over `jobs` threads.
/// Results are stored by replicate index, so they do not depend on thread
/// scheduling.
inline Experiment run_experiment(Algorithm algorithm, std::string_view objective_id, std::size_t runs,
                                 RunConfig config, std::uint64_t base_seed, const AlgorithmParams& params = {},
                                 std::size_t jobs = 1) {
    if (runs == 0) throw std::invalid_argument("run_experiment: runs must be at least 1");
    const Objective objective = make_objective(objective_id);

    Experiment exp;
    exp.algorithm = algorithm;
    exp.objective = objective.id();
    exp.config = config;
    exp.params = params;
    exp.base_seed = base_seed;
    exp.records.resize(runs);

    std::vector<std::exception_ptr> errors(runs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < runs; k = next++) {
            RunConfig local = config;
            local.seed = base_seed + k;
            try {
                exp.records[k] = run_once(algorithm, objective, local, params);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };

    const std::size_t threads = std::clamp<std::size_t>(jobs, 1, runs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (std::size_t k = 0; k < runs; ++k) {
        if (!errors[k]) continue;
        try {
            std::rethrow_exception(errors[k]);
        } catch (const std::exception& e) {
            throw ExperimentError(base_seed + k, e.what());
        }
    }

    Vector finals;
    finals.reserve(runs);
    for (const auto& r : exp.records) finals.push_back(r.final_best.fitness);
    exp.summary = summarize(finals, objective.declared_optimum(), config.tolerance);
    return exp;
}

enum class CurveTransform { raw, log10 };

inline constexpr double kLogFloor = 1e-300;

inline double apply_transform(double v, CurveTransform t) {
    return t == CurveTransform::raw ? v : std::log10(std::max(v, kLogFloor));
}

/// Per-iteration curve table: `iteration`, `mean_best`, then optionally one
/// column per run. The mean is taken over raw values, then transformed.
struct CurveTable {
    std::vector<std::string> columns;
    std::vector<Vector> rows;
};

inline CurveTable export_curves(std::span<const RunRecord> records, CurveTransform transform,
                                bool per_run_columns = false) {
    if (records.empty()) throw std::invalid_argument("export_curves: no records");
    const std::size_t length = records.front().trajectory.size();
    for (const auto& r : records) {
        if (r.trajectory.size() != length) throw std::invalid_argument("export_curves: mixed iteration counts");
        if (r.objective != records.front().objective) throw std::invalid_argument("export_curves: mixed objectives");
    }

    CurveTable table;
    table.columns = {"iteration", "mean_best"};
    if (per_run_columns) {
        for (const auto& r : records) table.columns.push_back("run_" + std::to_string(r.seed));
    }
    const double n = static_cast<double>(records.size());
    for (std::size_t t = 0; t < length; ++t) {
        double sum = 0.0;
        for (const auto& r : records) sum += r.trajectory[t];
        Vector row{static_cast<double>(t), apply_transform(sum / n, transform)};
        if (per_run_columns) {
            for (const auto& r : records) row.push_back(apply_transform(r.trajectory[t], transform));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace lfwa
