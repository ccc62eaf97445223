#pragma once

#include <bhfs/core/objectives.hpp>

#include <span>
#include <utility>
#include <vector>

namespace bhfs {

/// Per-objective bounds used to map raw objective values onto [0, 1]. Built once from the
/// union of every front taking part in a comparison.
struct NormalizationContext {
    double min_cmax = 0.0;
    double max_cmax = 0.0;
    double min_tec = 0.0;
    double max_tec = 0.0;
    double reference = 1.2;

    static NormalizationContext from_points(std::span<const ObjectiveVector> points);
    static NormalizationContext from_fronts(std::span<const std::vector<ObjectiveVector>> fronts);

    /// (cmax, tec) scaled by (v - min) / (max - min); a degenerate axis maps to 0.
    std::pair<double, double> normalize(const ObjectiveVector& v) const noexcept;
};

/// Area dominated by the normalised front inside the box [0, ref]^2 (at most ref^2 = 1.44).
/// Points beyond the reference on either axis contribute nothing. Empty front -> 0.
double hypervolume(std::span<const ObjectiveVector> front, const NormalizationContext& ctx);

/// (1 / |front|) * sqrt(sum of squared distances from each front point to its nearest
/// reference point), in normalised space. Throws InvalidInput on an empty argument.
double generational_distance(std::span<const ObjectiveVector> front,
                             std::span<const ObjectiveVector> reference_front,
                             const NormalizationContext& ctx);

struct ReferenceFront {
    std::vector<ObjectiveVector> front;  ///< ascending makespan
    NormalizationContext context;        ///< bounds over the union of all inputs
};

/// Non-dominated filter of the union of `fronts`. Requires at least one point overall.
ReferenceFront build_reference_front(std::span<const std::vector<ObjectiveVector>> fronts);

}  // namespace bhfs
