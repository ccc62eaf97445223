#pragma once

#include <bhfs/core/objectives.hpp>

#include <span>
#include <vector>

namespace bhfs {

/// Pareto dominance under minimisation: no worse on both objectives, better on one.
constexpr bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept
{
    return a.cmax <= b.cmax && a.tec <= b.tec && a != b;
}

/// a <= b on both objectives.
constexpr bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept
{
    return a.cmax <= b.cmax && a.tec <= b.tec;
}

struct Solution {
    Permutation sequence;
    ObjectiveVector objectives;

    bool operator==(const Solution&) const = default;
};

/// Keeps the entries that no other entry dominates; among entries with identical objective
/// vectors only the first one survives. Relative input order is preserved.
std::vector<Solution> nondominated(std::vector<Solution> solutions);
std::vector<ObjectiveVector> nondominated(std::span<const ObjectiveVector> points);

/// Mutually non-dominated set of solutions with pairwise distinct objective vectors.
class ParetoArchive {
public:
    ParetoArchive() = default;

    /// Adds `s` unless an entry dominates it or already has its objective vector; removes the
    /// entries `s` dominates. Returns whether the archive changed.
    bool insert(Solution s);
    /// Inserts every element; returns whether any insertion changed the archive.
    bool merge(std::span<const Solution> solutions);

    const std::vector<Solution>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    std::vector<ObjectiveVector> points() const;
    /// Objective vectors in ascending makespan order.
    std::vector<ObjectiveVector> sorted_points() const;

private:
    std::vector<Solution> entries_;
};

}  // namespace bhfs
