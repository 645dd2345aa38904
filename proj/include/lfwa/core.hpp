#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lfwa {

using Vector = std::vector<double>;

/// Box-constrained search domain.
class SearchSpace {
public:
    SearchSpace(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
        if (lower_.empty() || lower_.size() != upper_.size()) {
            throw std::invalid_argument("SearchSpace: bounds must be non-empty and of equal length");
        }
        for (std::size_t j = 0; j < lower_.size(); ++j) {
            if (!(lower_[j] < upper_[j])) {
                throw std::invalid_argument("SearchSpace: lower bound must be below upper bound in dimension " +
                                            std::to_string(j));
            }
        }
    }

    static SearchSpace cube(double lo, double hi, std::size_t dim) {
        return SearchSpace(Vector(dim, lo), Vector(dim, hi));
    }

    std::size_t dim() const noexcept { return lower_.size(); }
    const Vector& lower() const noexcept { return lower_; }
    const Vector& upper() const noexcept { return upper_; }
    double lower(std::size_t j) const { return lower_[j]; }
    double upper(std::size_t j) const { return upper_[j]; }
    double width(std::size_t j) const { return upper_[j] - lower_[j]; }

    bool contains(std::span<const double> x) const {
        if (x.size() != dim()) return false;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] < lower_[j] || x[j] > upper_[j]) return false;
        }
        return true;
    }

private:
    Vector lower_;
    Vector upper_;
};

/// A position with its cached objective value (minimization).
struct Individual {
    Vector position;
    double fitness = std::numeric_limits<double>::infinity();

    friend bool operator==(const Individual&, const Individual&) = default;
};

/// Index of the first individual with strictly smallest fitness.
inline std::size_t argmin_fitness(std::span<const Individual> pool) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pool.size(); ++k) {
        if (pool[k].fitness < pool[best].fitness) best = k;
    }
    return best;
}

class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& objective, Vector position)
        : std::runtime_error(describe(objective, position)), position_(std::move(position)) {}

    const Vector& position() const noexcept { return position_; }

private:
    static std::string describe(const std::string& objective, const Vector& x) {
        std::ostringstream os;
        os.precision(17);
        os << objective << " produced a non-finite value at (";
        for (std::size_t j = 0; j < x.size(); ++j) os << (j ? ", " : "") << x[j];
        os << ")";
        return os.str();
    }

    Vector position_;
};

/// Requirements on any source of randomness fed to the operators.
/// `uniform_index(lo, hi)` is inclusive on both ends.
template <typename R>
concept RandomSource = requires(R& rng, std::size_t lo, std::size_t hi) {
    { rng.uniform01() } -> std::same_as<double>;
    { rng.normal() } -> std::same_as<double>;
    { rng.uniform_index(lo, hi) } -> std::same_as<std::size_t>;
};

/// Seeded random stream. The transformations from engine output to
/// uniform/normal/integer draws are written out here rather than taken from
/// <random> distributions, whose algorithms differ between standard
/// libraries, so a seed reproduces bit-identical runs everywhere.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via the Marsaglia polar method.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = 0.0, v = 0.0, s = 0.0;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    /// Uniform integer in [lo, hi], unbiased by rejection.
    std::size_t uniform_index(std::size_t lo, std::size_t hi) {
        if (hi < lo) throw std::invalid_argument("uniform_index: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo);
        if (span == std::numeric_limits<std::uint64_t>::max()) return lo + static_cast<std::size_t>(engine_());
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
        std::uint64_t draw = engine_();
        while (draw > limit) draw = engine_();
        return lo + static_cast<std::size_t>(draw % range);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

static_assert(RandomSource<RngStream>);

/// Run protocol shared by every algorithm.
struct RunConfig {
    std::size_t population_size = 5;
    std::size_t max_iterations = 1000;
    double tolerance = 1e-5;
    std::uint64_t seed = 0;
    /// Number of Gaussian mutants per generation; 0 means three per firework.
    std::size_t gaussian_sparks_per_generation = 0;
    double xi = std::numeric_limits<double>::epsilon();
    /// Use one displacement coefficient per spark instead of one per dimension.
    bool scalar_beta = false;

    std::size_t gaussian_sparks() const noexcept {
        return gaussian_sparks_per_generation == 0 ? 3 * population_size : gaussian_sparks_per_generation;
    }

    void validate() const {
        if (population_size < 2) throw std::invalid_argument("RunConfig: population_size must be at least 2");
        if (!(tolerance >= 0.0)) throw std::invalid_argument("RunConfig: tolerance must be nonnegative");
        if (!(xi > 0.0)) throw std::invalid_argument("RunConfig: xi must be positive");
    }
};

}  // namespace lfwa
