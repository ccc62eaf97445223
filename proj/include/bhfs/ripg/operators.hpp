#pragma once

#include <bhfs/core/random.hpp>
#include <bhfs/pareto/archive.hpp>
#include <bhfs/ripg/evaluator.hpp>

#include <vector>

namespace bhfs {

/// Hybrid selection: with `front_changed`, the entry of largest crowding distance (ties drawn
/// uniformly); otherwise a uniformly random entry. A single-entry archive returns that entry
/// without touching `rng`. Requires a non-empty archive.
const Solution& select(const ParetoArchive& archive, bool front_changed, Rng& rng);

struct Destruction {
    Permutation partial;
    std::vector<JobId> removed;  ///< in removal order
};

/// Removes `d` jobs at uniformly random positions, one after the other.
Destruction destruct(std::span<const JobId> seq, int d, Rng& rng);

/// Reinserts `removed` (in order) at every position of every kept partial sequence, keeping only
/// the non-dominated partial sequences after each job.
std::vector<Solution> reconstruct(Evaluator& eval, const Permutation& partial,
                                  std::span<const JobId> removed);

/// Destruction of `d` random jobs followed by non-dominated reconstruction. The input solution
/// joins the final filter, so some output entry weakly dominates it. Throws InvalidConfig unless
/// 1 <= d < n.
std::vector<Solution> greedy_phase(Evaluator& eval, const Solution& input, int d, Rng& rng);

/// Removes one random job and returns the non-dominated subset of its n reinsertions (the
/// original slot included). Throws InvalidConfig for n < 2.
std::vector<Solution> local_search(Evaluator& eval, const Solution& input, Rng& rng);

/// Moves a random job to a different random position. Sequences shorter than 2 are unchanged.
Permutation insertion_move(const Permutation& seq, Rng& rng);
/// Swaps two distinct random positions. Sequences shorter than 2 are unchanged.
Permutation interchange_move(const Permutation& seq, Rng& rng);

/// Improves every solution on its own: `loop_size` rounds of the insertion/interchange
/// neighbourhood cycle, replacing the solution only by a strictly dominating neighbour (which
/// restarts the cycle at insertion). Returns the non-dominated subset of the results.
std::vector<Solution> refine(Evaluator& eval, std::vector<Solution> front, int loop_size, Rng& rng);

}  // namespace bhfs
