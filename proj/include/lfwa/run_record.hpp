#pragma once

#include <cstdint>
#include <string>

#include "lfwa/core.hpp"

namespace lfwa {

/// Outcome of one seeded run: the best-so-far trajectory (entry 0 is the
/// initial population, then one entry per iteration) and the final best.
struct RunRecord {
    std::string algorithm;
    std::string objective;
    std::uint64_t seed = 0;
    Vector trajectory;
    Individual final_best;
    std::uint64_t evaluations_used = 0;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

}  // namespace lfwa
