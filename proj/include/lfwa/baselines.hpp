#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lfwa/benchmarks.hpp"
#include "lfwa/core.hpp"
#include "lfwa/lfwa.hpp"
#include "lfwa/run_record.hpp"

// Reference versions of the comparison algorithms. All of them use the same
// random mapping of out-of-bounds coordinates as the LFWA engine.

namespace lfwa {

namespace detail {

inline void push_best(RunRecord& record, const Individual& best) { record.trajectory.push_back(best.fitness); }

template <RandomSource Rng>
Vector uniform_point(const SearchSpace& space, Rng& rng) {
    Vector x(space.dim());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = space.lower(j) + rng.uniform01() * space.width(j);
    return x;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fireworks algorithm (Tan & Zhu, 2010)

struct FwaParams {
    std::size_t fireworks = 5;
    std::size_t total_sparks = 50;  // m
    double min_fraction = 0.04;     // a
    double max_fraction = 0.8;      // b
    double max_amplitude = 40.0;    // A-hat
    std::size_t gaussian_sparks = 5;

    void validate() const {
        if (fireworks < 1) throw std::invalid_argument("FwaParams: need at least one firework");
        if (!(0.0 < min_fraction && min_fraction < max_fraction && max_fraction < 1.0)) {
            throw std::invalid_argument("FwaParams: require 0 < a < b < 1");
        }
        if (total_sparks < 1 || gaussian_sparks < 1) throw std::invalid_argument("FwaParams: m and m-hat must be >= 1");
        if (!(max_amplitude > 0.0)) throw std::invalid_argument("FwaParams: amplitude must be positive");
    }
};

/// Spark counts: m * (y_max - f_i + xi) / (sum(y_max - f_j) + xi), rounded
/// and clamped to [round(a m), round(b m)].
inline std::vector<std::size_t> fwa_spark_counts(std::span<const double> fitnesses, const FwaParams& params,
                                                 double xi) {
    const double y_max = *std::max_element(fitnesses.begin(), fitnesses.end());
    double total = 0.0;
    for (double f : fitnesses) total += y_max - f;
    const double m = static_cast<double>(params.total_sparks);
    const double lo = std::round(params.min_fraction * m);
    const double hi = std::round(params.max_fraction * m);
    std::vector<std::size_t> counts(fitnesses.size());
    for (std::size_t i = 0; i < fitnesses.size(); ++i) {
        const double s = m * (y_max - fitnesses[i] + xi) / (total + xi);
        double c = std::round(s);
        if (s < params.min_fraction * m) c = lo;
        else if (s > params.max_fraction * m) c = hi;
        counts[i] = static_cast<std::size_t>(c);
    }
    return counts;
}

/// Amplitudes: A-hat * (f_i - y_min + xi) / (sum(f_j - y_min) + xi).
inline std::vector<double> fwa_amplitudes(std::span<const double> fitnesses, const FwaParams& params, double xi) {
    const double y_min = *std::min_element(fitnesses.begin(), fitnesses.end());
    double total = 0.0;
    for (double f : fitnesses) total += f - y_min;
    std::vector<double> amps(fitnesses.size());
    for (std::size_t i = 0; i < fitnesses.size(); ++i) {
        amps[i] = params.max_amplitude * (fitnesses[i] - y_min + xi) / (total + xi);
    }
    return amps;
}

inline RunRecord fwa_run(Objective objective, const FwaParams& params, const RunConfig& config) {
    params.validate();
    objective.reset_eval_count();
    const SearchSpace& space = objective.space();
    const std::size_t d = space.dim();
    RngStream rng(config.seed);

    std::vector<Individual> fireworks;
    for (std::size_t i = 0; i < params.fireworks; ++i) {
        fireworks.push_back(objective.make_individual(detail::uniform_point(space, rng)));
    }
    Individual best = fireworks[argmin_fitness(fireworks)];

    RunRecord record{"fwa", objective.id(), config.seed, {}, {}, 0};
    detail::push_best(record, best);

    for (std::size_t t = 0; t < config.max_iterations; ++t) {
        std::vector<double> fitnesses;
        for (const auto& fw : fireworks) fitnesses.push_back(fw.fitness);
        const auto counts = fwa_spark_counts(fitnesses, params, config.xi);
        const auto amps = fwa_amplitudes(fitnesses, params, config.xi);

        std::vector<Individual> candidates = fireworks;
        for (std::size_t i = 0; i < fireworks.size(); ++i) {
            for (std::size_t s = 0; s < counts[i]; ++s) {
                Vector x = fireworks[i].position;
                const std::size_t z = static_cast<std::size_t>(std::round(static_cast<double>(d) * rng.uniform01()));
                const double shift = amps[i] * (2.0 * rng.uniform01() - 1.0);
                for (std::size_t j : choose_dimensions(d, z, rng)) x[j] += shift;
                candidates.push_back(objective.make_individual(map_into_bounds(std::move(x), space, rng)));
            }
        }
        for (std::size_t g = 0; g < params.gaussian_sparks; ++g) {
            Vector x = fireworks[rng.uniform_index(0, fireworks.size() - 1)].position;
            const std::size_t z = static_cast<std::size_t>(std::round(static_cast<double>(d) * rng.uniform01()));
            const double scale = 1.0 + rng.normal();
            for (std::size_t j : choose_dimensions(d, z, rng)) x[j] *= scale;
            candidates.push_back(objective.make_individual(map_into_bounds(std::move(x), space, rng)));
        }

        // Keep the best; fill the rest by roulette on summed distance to all candidates.
        const std::size_t elite = argmin_fitness(candidates);
        std::vector<double> crowd(candidates.size(), 0.0);
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            for (std::size_t b = a + 1; b < candidates.size(); ++b) {
                double sq = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    const double diff = candidates[a].position[j] - candidates[b].position[j];
                    sq += diff * diff;
                }
                const double dist = std::sqrt(sq);
                crowd[a] += dist;
                crowd[b] += dist;
            }
        }
        crowd[elite] = 0.0;
        double total = 0.0;
        for (double c : crowd) total += c;

        std::vector<Individual> next{candidates[elite]};
        while (next.size() < params.fireworks) {
            std::size_t pick = elite;
            if (total > 0.0) {
                double target = rng.uniform01() * total;
                for (std::size_t k = 0; k < crowd.size(); ++k) {
                    if (crowd[k] <= 0.0) continue;
                    pick = k;
                    target -= crowd[k];
                    if (target < 0.0) break;
                }
            }
            next.push_back(candidates[pick]);
        }
        fireworks = std::move(next);
        if (fireworks[0].fitness < best.fitness) best = fireworks[0];
        detail::push_best(record, best);
    }

    record.final_best = best;
    record.evaluations_used = objective.eval_count();
    return record;
}

// ---------------------------------------------------------------------------
// Standard global-best PSO with linearly decreasing inertia

struct SpsoParams {
    std::size_t swarm_size = 30;
    double inertia_start = 0.9;
    double inertia_end = 0.4;
    double cognitive = 2.0;
    double social = 2.0;
    double velocity_clamp = 0.5;  // fraction of the domain width

    void validate() const {
        if (swarm_size < 1) throw std::invalid_argument("SpsoParams: empty swarm");
        if (!(cognitive > 0.0 && social > 0.0)) throw std::invalid_argument("SpsoParams: coefficients must be positive");
        if (inertia_start < inertia_end) throw std::invalid_argument("SpsoParams: inertia must not increase");
        if (velocity_clamp < 0.0) throw std::invalid_argument("SpsoParams: negative velocity clamp");
    }
};

inline RunRecord spso_run(Objective objective, const SpsoParams& params, const RunConfig& config) {
    params.validate();
    objective.reset_eval_count();
    const SearchSpace& space = objective.space();
    const std::size_t d = space.dim();
    RngStream rng(config.seed);

    Vector vmax(d);
    for (std::size_t j = 0; j < d; ++j) vmax[j] = params.velocity_clamp * space.width(j);

    std::vector<Individual> particles;
    std::vector<Vector> velocity;
    for (std::size_t i = 0; i < params.swarm_size; ++i) {
        particles.push_back(objective.make_individual(detail::uniform_point(space, rng)));
        Vector v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = vmax[j] * (2.0 * rng.uniform01() - 1.0);
        velocity.push_back(std::move(v));
    }
    std::vector<Individual> pbest = particles;
    Individual gbest = pbest[argmin_fitness(pbest)];

    RunRecord record{"spso", objective.id(), config.seed, {}, {}, 0};
    detail::push_best(record, gbest);

    const double steps = config.max_iterations > 1 ? static_cast<double>(config.max_iterations - 1) : 1.0;
    for (std::size_t t = 0; t < config.max_iterations; ++t) {
        const double w =
            params.inertia_start - (params.inertia_start - params.inertia_end) * static_cast<double>(t) / steps;
        for (std::size_t i = 0; i < particles.size(); ++i) {
            Vector x = particles[i].position;
            Vector& v = velocity[i];
            for (std::size_t j = 0; j < d; ++j) {
                const double r1 = rng.uniform01();
                const double r2 = rng.uniform01();
                v[j] = w * v[j] + params.cognitive * r1 * (pbest[i].position[j] - x[j]) +
                       params.social * r2 * (gbest.position[j] - x[j]);
                v[j] = std::clamp(v[j], -vmax[j], vmax[j]);
                x[j] += v[j];
            }
            particles[i] = objective.make_individual(map_into_bounds(std::move(x), space, rng));
            if (particles[i].fitness < pbest[i].fitness) {
                pbest[i] = particles[i];
                if (pbest[i].fitness < gbest.fitness) gbest = pbest[i];
            }
        }
        detail::push_best(record, gbest);
    }

    record.final_best = gbest;
    record.evaluations_used = objective.eval_count();
    return record;
}

// ---------------------------------------------------------------------------
// Bat algorithm (Yang, 2010)

struct BaParams {
    std::size_t population = 30;
    double frequency_min = 0.0;
    double frequency_max = 2.0;
    double loudness = 0.9;        // A0
    double loudness_decay = 0.97; // alpha
    double pulse_rate = 0.1;      // r0
    double pulse_growth = 0.1;    // gamma

    void validate() const {
        if (population < 1) throw std::invalid_argument("BaParams: empty population");
        if (frequency_min > frequency_max) throw std::invalid_argument("BaParams: frequency range inverted");
        if (!(loudness_decay > 0.0 && loudness_decay <= 1.0)) {
            throw std::invalid_argument("BaParams: loudness decay must lie in (0, 1]");
        }
        if (pulse_growth < 0.0) throw std::invalid_argument("BaParams: negative pulse-rate growth");
    }
};

/// r(t) = r0 (1 - exp(-gamma t)).
inline double ba_pulse_rate(const BaParams& params, std::size_t iteration) {
    return params.pulse_rate * (1.0 - std::exp(-params.pulse_growth * static_cast<double>(iteration)));
}

inline double ba_next_loudness(const BaParams& params, double loudness) { return params.loudness_decay * loudness; }

/// Per-bat loudness and pulse-rate values at the end of a run.
struct BaSchedule {
    std::vector<double> loudness;
    std::vector<double> pulse_rate;
};

inline RunRecord ba_run(Objective objective, const BaParams& params, const RunConfig& config,
                        BaSchedule* schedule = nullptr) {
    params.validate();
    objective.reset_eval_count();
    const SearchSpace& space = objective.space();
    const std::size_t d = space.dim();
    RngStream rng(config.seed);

    std::vector<Individual> bats;
    for (std::size_t i = 0; i < params.population; ++i) {
        bats.push_back(objective.make_individual(detail::uniform_point(space, rng)));
    }
    std::vector<Vector> velocity(bats.size(), Vector(d, 0.0));
    std::vector<double> loudness(bats.size(), params.loudness);
    std::vector<double> pulse(bats.size(), 0.0);
    Individual best = bats[argmin_fitness(bats)];

    RunRecord record{"ba", objective.id(), config.seed, {}, {}, 0};
    detail::push_best(record, best);

    for (std::size_t t = 0; t < config.max_iterations; ++t) {
        double mean_loudness = 0.0;
        for (double a : loudness) mean_loudness += a;
        mean_loudness /= static_cast<double>(loudness.size());

        for (std::size_t i = 0; i < bats.size(); ++i) {
            const double freq =
                params.frequency_min + (params.frequency_max - params.frequency_min) * rng.uniform01();
            Vector x(d);
            for (std::size_t j = 0; j < d; ++j) {
                velocity[i][j] += (bats[i].position[j] - best.position[j]) * freq;
                x[j] = bats[i].position[j] + velocity[i][j];
            }
            if (rng.uniform01() > pulse[i]) {
                // Local walk around the current best.
                for (std::size_t j = 0; j < d; ++j) {
                    x[j] = best.position[j] + (2.0 * rng.uniform01() - 1.0) * mean_loudness;
                }
            }
            Individual trial = objective.make_individual(map_into_bounds(std::move(x), space, rng));
            if (trial.fitness <= bats[i].fitness && rng.uniform01() < loudness[i]) {
                bats[i] = trial;
                loudness[i] = ba_next_loudness(params, loudness[i]);
                pulse[i] = ba_pulse_rate(params, t + 1);
            }
            if (trial.fitness < best.fitness) best = trial;
        }
        detail::push_best(record, best);
    }

    if (schedule) *schedule = BaSchedule{loudness, pulse};
    record.final_best = best;
    record.evaluations_used = objective.eval_count();
    return record;
}

}  // namespace lfwa
