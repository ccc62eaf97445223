#pragma once

#include <bhfs/core/objectives.hpp>

#include <cstdint>
#include <vector>

namespace bhfs {

enum class OracleMode {
    Permutation,  ///< every entry order through the decoder
    Full,         ///< every machine assignment and per-machine order, earliest timing
};

struct OracleResult {
    std::vector<ObjectiveVector> front;  ///< sorted by (cmax, tec)
    std::uint64_t enumerated = 0;        ///< candidates examined
    std::uint64_t deadlocked = 0;        ///< full mode: orders that cannot all be executed
};

/// Brute-force non-dominated front of a small instance.
///
/// Permutation mode needs n! <= cap. Full mode needs n <= 5, at most 3 stages, and a product
/// of per-stage sequencing counts <= cap. Machines of a stage are interchangeable, so each
/// stage's sequencing is a set of job lists up to relabelling. Throws CapExceeded otherwise.
OracleResult exhaustive_front(const Instance& instance, OracleMode mode,
                              std::uint64_t cap = 50'000'000);

/// Number of distinct ways to split `jobs` labelled jobs into at most `machines` ordered
/// lists on interchangeable machines.
std::uint64_t stage_sequencings(int jobs, int machines);

}  // namespace bhfs
