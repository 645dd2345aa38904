// Smallest use of the library: one LFWA run on Rastrigin, printing a few
// points of the best-so-far curve.

#include <cstdio>

#include "lfwa/lfwa.hpp"

int main() {
    lfwa::RunConfig config;
    config.seed = 7;
    const auto record = lfwa::lfwa_run(lfwa::make_objective("f3"), config);
    for (std::size_t t = 0; t < record.trajectory.size(); t += 100) {
        std::printf("%5zu  %.6g\n", t, record.trajectory[t]);
    }
    std::printf("final %.6g after %llu evaluations\n", record.final_best.fitness,
                static_cast<unsigned long long>(record.evaluations_used));
}
