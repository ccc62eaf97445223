#pragma once

#include <bhfs/core/objectives.hpp>

#include <span>
#include <vector>

namespace bhfs {

/// Rank partition F1, F2, ... of `points` (indices, ascending within each front): F1 is the
/// non-dominated subset, Fk the non-dominated subset once F1..Fk-1 are removed.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const ObjectiveVector> points);

}  // namespace bhfs
