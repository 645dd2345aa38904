#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "lfwa/benchmarks.hpp"
#include "lfwa/core.hpp"
#include "lfwa/run_record.hpp"

namespace lfwa {

/// Number of sparks per firework: ceil(M ^ ((f_max - f_i) / (f_max - f_min + xi))).
/// The exponent lies in [0, 1), so every count is in [1, M].
inline std::vector<std::size_t> explosion_intensity(std::span<const double> fitnesses, std::size_t population,
                                                    double xi) {
    if (fitnesses.empty()) return {};
    const auto [lo, hi] = std::minmax_element(fitnesses.begin(), fitnesses.end());
    const double f_min = *lo;
    const double f_max = *hi;
    const double m = static_cast<double>(population);
    std::vector<std::size_t> counts(fitnesses.size());
    for (std::size_t i = 0; i < fitnesses.size(); ++i) {
        const double exponent = (f_max - fitnesses[i]) / (f_max - f_min + xi);
        const double s = std::ceil(std::pow(m, exponent));
        counts[i] = std::clamp<std::size_t>(static_cast<std::size_t>(s), 1, population);
    }
    return counts;
}

inline double average_intensity(std::span<const std::size_t> counts) {
    if (counts.empty()) return 0.0;
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    return total / static_cast<double>(counts.size());
}

/// True when the firework follows its own historical best rather than the core firework.
inline bool follows_pbest(std::size_t count, double average) noexcept {
    return static_cast<double>(count) < average;
}

/// Displacement vector: towards pbest_i for low-intensity fireworks, towards
/// the core firework otherwise.
inline Vector explosion_radius(std::span<const double> x, std::span<const double> pbest,
                               std::span<const double> core, std::size_t count, double average) {
    const auto target = follows_pbest(count, average) ? pbest : core;
    Vector r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) r[j] = target[j] - x[j];
    return r;
}

/// `count` sparks x + beta * R. With `scalar_beta` one coefficient scales
/// the whole radius; otherwise each coordinate draws its own.
template <RandomSource Rng>
std::vector<Vector> generate_explosion_sparks(std::span<const double> x, std::span<const double> radius,
                                              std::size_t count, Rng& rng, bool scalar_beta = false) {
    std::vector<Vector> sparks;
    sparks.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        Vector spark(x.begin(), x.end());
        if (scalar_beta) {
            const double beta = rng.uniform01();
            for (std::size_t j = 0; j < spark.size(); ++j) spark[j] += beta * radius[j];
        } else {
            for (std::size_t j = 0; j < spark.size(); ++j) spark[j] += rng.uniform01() * radius[j];
        }
        sparks.push_back(std::move(spark));
    }
    return sparks;
}

/// Picks `n` distinct indices out of [0, d) by partial Fisher-Yates.
template <RandomSource Rng>
std::vector<std::size_t> choose_dimensions(std::size_t d, std::size_t n, Rng& rng) {
    std::vector<std::size_t> dims(d);
    std::iota(dims.begin(), dims.end(), std::size_t{0});
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t swap_with = rng.uniform_index(k, d - 1);
        std::swap(dims[k], dims[swap_with]);
    }
    dims.resize(n);
    return dims;
}

/// Multiplies n randomly chosen coordinates by (N(0,1) + 1), n uniform in [1, d].
template <RandomSource Rng>
Vector gaussian_mutation(std::span<const double> x, Rng& rng) {
    Vector out(x.begin(), x.end());
    if (out.empty()) return out;
    const std::size_t n = rng.uniform_index(1, out.size());
    for (std::size_t j : choose_dimensions(out.size(), n, rng)) out[j] *= rng.normal() + 1.0;
    return out;
}

/// Re-places each out-of-bounds coordinate uniformly inside its interval.
/// In-bounds coordinates are untouched and consume no randomness.
template <RandomSource Rng>
Vector map_into_bounds(Vector position, const SearchSpace& space, Rng& rng) {
    for (std::size_t j = 0; j < position.size(); ++j) {
        if (position[j] < space.lower(j) || position[j] > space.upper(j)) {
            position[j] = space.lower(j) + rng.uniform01() * space.width(j);
        }
    }
    return position;
}

/// Explosion and Gaussian sparks of one generation, after bounds mapping.
struct SparkSet {
    std::vector<Individual> explosion_sparks;
    std::vector<Individual> gaussian_sparks;
    std::vector<std::size_t> counts;
};

/// Elite-Random selection: the best candidate goes to slot 0; the other
/// slots are filled uniformly at random without replacement from the rest.
/// Falls back to drawing with replacement if the pool is too small.
template <RandomSource Rng>
std::vector<Individual> select_next_generation(std::span<const Individual> candidates, std::size_t population,
                                               Rng& rng) {
    if (candidates.empty()) throw std::invalid_argument("select_next_generation: empty candidate set");
    if (population == 0) return {};
    const std::size_t elite = argmin_fitness(candidates);

    std::vector<std::size_t> pool;
    pool.reserve(candidates.size() - 1);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (k != elite) pool.push_back(k);
    }

    std::vector<Individual> next;
    next.reserve(population);
    next.push_back(candidates[elite]);
    const std::size_t wanted = population - 1;
    if (pool.size() >= wanted) {
        for (std::size_t k = 0; k < wanted; ++k) {
            const std::size_t pick = rng.uniform_index(k, pool.size() - 1);
            std::swap(pool[k], pool[pick]);
            next.push_back(candidates[pool[k]]);
        }
    } else {
        if (pool.empty()) pool.push_back(elite);
        for (std::size_t k = 0; k < wanted; ++k) {
            next.push_back(candidates[pool[rng.uniform_index(0, pool.size() - 1)]]);
        }
    }
    return next;
}

/// Candidate set in the order used by selection: Gaussian sparks, explosion
/// sparks, fireworks, pbest, core. Ties for the elite go to the earliest
/// entry, so a new spark of equal fitness displaces the incumbent.
inline std::vector<Individual> assemble_candidates(std::span<const Individual> fireworks,
                                                   std::span<const Individual> pbest, const Individual& core,
                                                   const SparkSet& sparks) {
    std::vector<Individual> all;
    all.reserve(fireworks.size() + pbest.size() + 1 + sparks.explosion_sparks.size() +
                sparks.gaussian_sparks.size());
    all.insert(all.end(), sparks.gaussian_sparks.begin(), sparks.gaussian_sparks.end());
    all.insert(all.end(), sparks.explosion_sparks.begin(), sparks.explosion_sparks.end());
    all.insert(all.end(), fireworks.begin(), fireworks.end());
    all.insert(all.end(), pbest.begin(), pbest.end());
    all.push_back(core);
    return all;
}

template <RandomSource Rng>
std::vector<Individual> select_next_generation(std::span<const Individual> fireworks,
                                               std::span<const Individual> pbest, const Individual& core,
                                               const SparkSet& sparks, std::size_t population, Rng& rng) {
    const auto candidates = assemble_candidates(fireworks, pbest, core, sparks);
    return select_next_generation(std::span<const Individual>(candidates), population, rng);
}

struct LfwaState {
    std::vector<Individual> fireworks;
    std::vector<Individual> pbest;
    Individual core;
    std::size_t iteration = 0;
    Individual best_so_far;
};

/// Intermediate quantities of one generation, for inspection and tests.
struct GenerationTrace {
    std::vector<std::size_t> counts;
    double average = 0.0;
    std::vector<bool> used_pbest;
    std::vector<Vector> radii;
    std::vector<std::vector<Vector>> raw_sparks;
    std::vector<std::size_t> gaussian_parents;
    std::vector<Vector> raw_gaussian;
    SparkSet sparks;
    std::vector<Individual> selected;
};

/// Starting state: M uniform positions, pbest equal to the fireworks.
template <RandomSource Rng>
LfwaState lfwa_initialize(Objective& objective, const RunConfig& config, Rng& rng) {
    const SearchSpace& space = objective.space();
    LfwaState state;
    state.fireworks.reserve(config.population_size);
    for (std::size_t i = 0; i < config.population_size; ++i) {
        Vector x(space.dim());
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = space.lower(j) + rng.uniform01() * space.width(j);
        state.fireworks.push_back(objective.make_individual(std::move(x)));
    }
    state.pbest = state.fireworks;
    state.core = state.pbest[argmin_fitness(state.pbest)];
    state.best_so_far = state.core;
    return state;
}

/// One generation: intensities, radii, explosion sparks, Gaussian sparks,
/// bounds mapping, Elite-Random selection, then pbest / core update.
template <RandomSource Rng>
LfwaState lfwa_step(LfwaState state, Objective& objective, const RunConfig& config, Rng& rng,
                    GenerationTrace* trace = nullptr) {
    const SearchSpace& space = objective.space();
    const std::size_t m = state.fireworks.size();

    std::vector<double> fitnesses(m);
    for (std::size_t i = 0; i < m; ++i) fitnesses[i] = state.fireworks[i].fitness;

    SparkSet sparks;
    sparks.counts = explosion_intensity(fitnesses, m, config.xi);
    const double average = average_intensity(sparks.counts);
    if (trace) {
        trace->counts = sparks.counts;
        trace->average = average;
    }

    for (std::size_t i = 0; i < m; ++i) {
        const Vector& x = state.fireworks[i].position;
        const Vector radius = explosion_radius(x, state.pbest[i].position, state.core.position, sparks.counts[i],
                                               average);
        auto raw = generate_explosion_sparks(x, radius, sparks.counts[i], rng, config.scalar_beta);
        for (const Vector& spark : raw) {
            sparks.explosion_sparks.push_back(objective.make_individual(map_into_bounds(spark, space, rng)));
        }
        if (trace) {
            trace->used_pbest.push_back(follows_pbest(sparks.counts[i], average));
            trace->radii.push_back(radius);
            trace->raw_sparks.push_back(std::move(raw));
        }
    }

    const std::size_t mutants = config.gaussian_sparks();
    for (std::size_t g = 0; g < mutants; ++g) {
        const std::size_t parent = rng.uniform_index(0, m - 1);
        Vector raw = gaussian_mutation(state.fireworks[parent].position, rng);
        sparks.gaussian_sparks.push_back(objective.make_individual(map_into_bounds(raw, space, rng)));
        if (trace) {
            trace->gaussian_parents.push_back(parent);
            trace->raw_gaussian.push_back(std::move(raw));
        }
    }

    state.fireworks = select_next_generation(std::span<const Individual>(state.fireworks),
                                             std::span<const Individual>(state.pbest), state.core, sparks, m, rng);

    // Equal fitness also replaces pbest; rounding plateaus near an optimum
    // are otherwise never left.
    for (std::size_t i = 0; i < m; ++i) {
        if (state.fireworks[i].fitness <= state.pbest[i].fitness) state.pbest[i] = state.fireworks[i];
    }
    state.core = state.pbest[argmin_fitness(state.pbest)];
    if (state.core.fitness < state.best_so_far.fitness) state.best_so_far = state.core;
    ++state.iteration;

    if (trace) {
        trace->sparks = std::move(sparks);
        trace->selected = state.fireworks;
    }
    return state;
}

/// Full seeded run for `config.max_iterations` generations.
inline RunRecord lfwa_run(Objective objective, const RunConfig& config) {
    config.validate();
    objective.reset_eval_count();
    RngStream rng(config.seed);

    LfwaState state = lfwa_initialize(objective, config, rng);
    RunRecord record{"lfwa", objective.id(), config.seed, {}, {}, 0};
    record.trajectory.reserve(config.max_iterations + 1);
    record.trajectory.push_back(state.best_so_far.fitness);
    for (std::size_t t = 0; t < config.max_iterations; ++t) {
        state = lfwa_step(std::move(state), objective, config, rng);
        record.trajectory.push_back(state.best_so_far.fitness);
    }
    record.final_best = state.best_so_far;
    record.evaluations_used = objective.eval_count();
    return record;
}

}  // namespace lfwa
