#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lfwa/core.hpp"

namespace lfwa {

namespace functions {

inline double sphere(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

inline double rosenbrock(std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

inline double rastrigin(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v) + 10.0;
    return sum;
}

inline double griewank(std::span<const double> x) {
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / 4000.0 - prod + 1.0;
}

inline double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double squares = 0.0;
    double cosines = 0.0;
    for (double v : x) {
        squares += v * v;
        cosines += std::cos(2.0 * std::numbers::pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(squares / n)) - std::exp(cosines / n) + 20.0 + std::numbers::e;
}

// Printed form, not the shifted Schwefel 2.26 (its minimum here is negative).
inline double schwefel_printed(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += -v * std::sin(std::sqrt(std::abs(v)));
    return sum;
}

inline double six_hump_camel(std::span<const double> x) {
    const double a = x[0];
    const double b = x[1];
    const double a2 = a * a;
    const double b2 = b * b;
    return 4.0 * a2 - 2.1 * a2 * a2 + a2 * a2 * a2 / 3.0 + a * b - 4.0 * b2 + 4.0 * b2 * b2;
}

inline double goldstein_price(std::span<const double> x) {
    const double a = x[0];
    const double b = x[1];
    const double s = a + b + 1.0;
    const double t = 2.0 * a - 3.0 * b;
    const double left =
        1.0 + s * s * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    const double right =
        30.0 + t * t * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    return left * right;
}

inline double schaffer_f6(std::span<const double> x) {
    const double r2 = x[0] * x[0] + x[1] * x[1];
    const double s = std::sin(std::sqrt(r2));
    const double denom = 1.0 + 0.001 * r2;
    return (s * s - 0.5) / (denom * denom) + 0.5;
}

}  // namespace functions

using ObjectiveFn = double (*)(std::span<const double>);

/// Which formula variant an objective evaluates, relative to the printed table.
struct FormNote {
    bool differs_from_printed = false;  // a standard form replaces the printed formula
    bool optimum_inconsistent = false;  // declared optimum is not the formula's minimum
    std::string_view description;
};

/// A benchmark function with its registry metadata. Copies carry their own
/// evaluation counter, so each run owns one copy.
class Objective {
public:
    Objective(std::string id, std::string name, std::string printed_label, SearchSpace space,
              double declared_optimum, std::optional<Vector> known_minimizer, FormNote note, ObjectiveFn fn)
        : id_(std::move(id)),
          name_(std::move(name)),
          printed_label_(std::move(printed_label)),
          space_(std::move(space)),
          declared_optimum_(declared_optimum),
          known_minimizer_(std::move(known_minimizer)),
          note_(note),
          fn_(fn) {}

    const std::string& id() const noexcept { return id_; }
    const std::string& name() const noexcept { return name_; }
    const std::string& printed_label() const noexcept { return printed_label_; }
    const SearchSpace& space() const noexcept { return space_; }
    std::size_t dim() const noexcept { return space_.dim(); }
    double declared_optimum() const noexcept { return declared_optimum_; }
    const std::optional<Vector>& known_minimizer() const noexcept { return known_minimizer_; }
    const FormNote& note() const noexcept { return note_; }

    std::uint64_t eval_count() const noexcept { return eval_count_; }
    void reset_eval_count() noexcept { eval_count_ = 0; }

    /// Pure evaluation without touching the counter.
    double value(std::span<const double> x) const {
        if (x.size() != dim()) {
            throw std::invalid_argument(id_ + ": expected " + std::to_string(dim()) + " coordinates, got " +
                                        std::to_string(x.size()));
        }
        return fn_(x);
    }

    double evaluate(std::span<const double> x) {
        const double f = value(x);
        ++eval_count_;
        if (!std::isfinite(f)) throw EvaluationError(id_, Vector(x.begin(), x.end()));
        return f;
    }

    Individual make_individual(Vector position) {
        const double f = evaluate(position);
        return Individual{std::move(position), f};
    }

private:
    std::string id_;
    std::string name_;
    std::string printed_label_;
    SearchSpace space_;
    double declared_optimum_;
    std::optional<Vector> known_minimizer_;
    FormNote note_;
    ObjectiveFn fn_;
    std::uint64_t eval_count_ = 0;
};

inline constexpr std::array<std::string_view, 9> kFunctionIds = {"f1", "f2", "f3", "f4", "f5",
                                                                  "f6", "f7", "f8", "f9"};

class UnknownFunctionError : public std::invalid_argument {
public:
    explicit UnknownFunctionError(std::string_view name)
        : std::invalid_argument("unknown function '" + std::string(name) +
                                "'; valid names: f1, f2, f3, f4, f5, f6, f7, f8, f9") {}
};

inline Objective make_objective(std::string_view id) {
    using namespace functions;
    auto zeros = [](std::size_t d) { return std::optional<Vector>(Vector(d, 0.0)); };

    if (id == "f1") {
        return {"f1", "Sphere", "Sphere", SearchSpace::cube(-100, 100, 30), 0.0, zeros(30),
                {true, false, "sum of squares (printed as a plain sum)"}, sphere};
    }
    if (id == "f2") {
        return {"f2", "Rosenbrock", "Rosenbrock", SearchSpace::cube(-10, 10, 30), 0.0,
                std::optional<Vector>(Vector(30, 1.0)),
                {true, false, "standard Rosenbrock 100(x[i+1]-x[i]^2)^2+(x[i]-1)^2"}, rosenbrock};
    }
    if (id == "f3") {
        return {"f3", "Rastrigin", "Rosenbrock", SearchSpace::cube(-5.12, 5.12, 30), 0.0, zeros(30),
                {false, false, "printed formula is Rastrigin; registered under that name"}, rastrigin};
    }
    if (id == "f4") {
        return {"f4", "Griewank", "Griewank", SearchSpace::cube(-600, 600, 30), 0.0, zeros(30),
                {false, false, "standard Griewank"}, griewank};
    }
    if (id == "f5") {
        return {"f5", "Ackley", "Ackley", SearchSpace::cube(-32, 32, 30), 0.0, zeros(30),
                {true, false, "standard Ackley with 1/n averaging in both exponents"}, ackley};
    }
    if (id == "f6") {
        return {"f6", "Schwefel", "Schwefel", SearchSpace::cube(-100, 100, 30), 0.0, zeros(30),
                {false, true, "as printed; declared optimum 0 is not the minimum on the domain"},
                schwefel_printed};
    }
    if (id == "f7") {
        return {"f7", "Six-Hump Camel-Back", "Six-Hump Camel-Back", SearchSpace::cube(-5, 5, 2), -1.0316285,
                std::optional<Vector>(Vector{0.08984201368301331, -0.7126564032704135}),
                {true, false, "x1^6 coefficient 1/3 (printed as 3.1)"}, six_hump_camel};
    }
    if (id == "f8") {
        return {"f8", "Goldstein-Price", "Goldstein Price", SearchSpace::cube(-2, 2, 2), 3.0,
                std::optional<Vector>(Vector{0.0, -1.0}),
                {true, false, "standard Goldstein-Price (3x2^2 terms)"}, goldstein_price};
    }
    if (id == "f9") {
        return {"f9", "Schaffer F6", "Schaffer's F6", SearchSpace::cube(-100, 100, 2), 0.0, zeros(2),
                {false, false, "standard Schaffer F6"}, schaffer_f6};
    }
    throw UnknownFunctionError(id);
}

inline std::vector<Objective> all_objectives() {
    std::vector<Objective> out;
    for (auto id : kFunctionIds) out.push_back(make_objective(id));
    return out;
}

}  // namespace lfwa
