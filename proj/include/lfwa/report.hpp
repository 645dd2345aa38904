#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "lfwa/benchmarks.hpp"
#include "lfwa/harness.hpp"

namespace lfwa::report {

/// Shortest round-trip text for a double.
inline std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline nlohmann::ordered_json params_json(Algorithm a, const RunConfig& config, const AlgorithmParams& params) {
    nlohmann::ordered_json j;
    switch (a) {
        case Algorithm::lfwa:
            j["population_size"] = config.population_size;
            j["gaussian_sparks_per_generation"] = config.gaussian_sparks();
            j["xi"] = config.xi;
            j["scalar_beta"] = config.scalar_beta;
            break;
        case Algorithm::fwa:
            j["fireworks"] = params.fwa.fireworks;
            j["total_sparks"] = params.fwa.total_sparks;
            j["min_fraction"] = params.fwa.min_fraction;
            j["max_fraction"] = params.fwa.max_fraction;
            j["max_amplitude"] = params.fwa.max_amplitude;
            j["gaussian_sparks"] = params.fwa.gaussian_sparks;
            j["xi"] = config.xi;
            break;
        case Algorithm::spso:
            j["swarm_size"] = params.spso.swarm_size;
            j["inertia_start"] = params.spso.inertia_start;
            j["inertia_end"] = params.spso.inertia_end;
            j["cognitive"] = params.spso.cognitive;
            j["social"] = params.spso.social;
            j["velocity_clamp"] = params.spso.velocity_clamp;
            break;
        case Algorithm::ba:
            j["population"] = params.ba.population;
            j["frequency_min"] = params.ba.frequency_min;
            j["frequency_max"] = params.ba.frequency_max;
            j["loudness"] = params.ba.loudness;
            j["loudness_decay"] = params.ba.loudness_decay;
            j["pulse_rate"] = params.ba.pulse_rate;
            j["pulse_growth"] = params.ba.pulse_growth;
            break;
    }
    return j;
}

/// 64-bit FNV-1a of the resolved parameter JSON, as 16 hex digits.
inline std::string params_fingerprint(Algorithm a, const RunConfig& config, const AlgorithmParams& params) {
    const std::string text = std::string(to_string(a)) + params_json(a, config, params).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline constexpr std::string_view kSummaryHeader =
    "algorithm,function,runs,iterations,pop_size,worst,best,mean,sd,success_rate,seed_base,params_fingerprint";

inline void write_summary_row(std::ostream& os, const Experiment& e) {
    const auto& s = e.summary;
    os << to_string(e.algorithm) << ',' << e.objective << ',' << s.run_count << ',' << e.config.max_iterations << ','
       << population_of(e.algorithm, e.config, e.params) << ',' << format_real(s.worst) << ','
       << format_real(s.best) << ',' << format_real(s.mean) << ',' << format_real(s.sd) << ','
       << format_real(s.success_rate) << ',' << e.base_seed << ','
       << params_fingerprint(e.algorithm, e.config, e.params) << '\n';
}

inline void write_summary_csv(std::ostream& os, std::span<const Experiment> experiments) {
    os << kSummaryHeader << '\n';
    for (const auto& e : experiments) write_summary_row(os, e);
}

inline nlohmann::ordered_json summary_json(const Experiment& e) {
    const auto& s = e.summary;
    nlohmann::ordered_json j;
    j["algorithm"] = to_string(e.algorithm);
    j["function"] = e.objective;
    j["runs"] = s.run_count;
    j["iterations"] = e.config.max_iterations;
    j["pop_size"] = population_of(e.algorithm, e.config, e.params);
    j["worst"] = s.worst;
    j["best"] = s.best;
    j["mean"] = s.mean;
    j["sd"] = s.sd;
    j["success_rate"] = s.success_rate;
    j["seed_base"] = e.base_seed;
    j["params_fingerprint"] = params_fingerprint(e.algorithm, e.config, e.params);
    return j;
}

inline void write_summary_json(std::ostream& os, std::span<const Experiment> experiments) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : experiments) arr.push_back(summary_json(e));
    os << arr.dump(2) << '\n';
}

inline void write_curves_csv(std::ostream& os, const CurveTable& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
    os << '\n';
    for (const auto& row : table.rows) {
        os << static_cast<std::uint64_t>(row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) os << ',' << format_real(row[c]);
        os << '\n';
    }
}

inline nlohmann::ordered_json objective_json(const Objective& o) {
    nlohmann::ordered_json j;
    j["id"] = o.id();
    j["name"] = o.name();
    j["printed_label"] = o.printed_label();
    j["dim"] = o.dim();
    j["lower"] = o.space().lower().front();
    j["upper"] = o.space().upper().front();
    j["declared_optimum"] = o.declared_optimum();
    j["differs_from_printed"] = o.note().differs_from_printed;
    j["optimum_inconsistent"] = o.note().optimum_inconsistent;
    j["form"] = std::string(o.note().description);
    return j;
}

/// Full resolved configuration of a batch of experiments.
inline nlohmann::ordered_json provenance_json(std::span<const Experiment> experiments) {
    nlohmann::ordered_json j;
    j["sd_convention"] = "population (divide by N)";
    j["success_rule"] = "|final - declared_optimum| <= tolerance";
    j["log10_floor"] = kLogFloor;
    auto list = nlohmann::ordered_json::array();
    for (const auto& e : experiments) {
        nlohmann::ordered_json item;
        item["algorithm"] = to_string(e.algorithm);
        item["function"] = objective_json(make_objective(e.objective));
        item["runs"] = e.summary.run_count;
        item["iterations"] = e.config.max_iterations;
        item["tolerance"] = e.config.tolerance;
        item["seed_base"] = e.base_seed;
        item["params"] = params_json(e.algorithm, e.config, e.params);
        item["params_fingerprint"] = params_fingerprint(e.algorithm, e.config, e.params);
        nlohmann::ordered_json evals = nlohmann::ordered_json::array();
        for (const auto& r : e.records) evals.push_back(r.evaluations_used);
        item["evaluations_used"] = std::move(evals);
        list.push_back(std::move(item));
    }
    j["experiments"] = std::move(list);
    return j;
}

}  // namespace lfwa::report
