#pragma once

#include <bhfs/core/random.hpp>
#include <bhfs/ripg/run.hpp>

#include <vector>

namespace bhfs {

struct Nsga2Config {
    int population_size = 50;
    double crossover_prob = 0.9;
    double mutation_prob = 0.2;
    std::int64_t time_budget_ms = 1000;
    std::uint64_t rng_seed = 0;
    std::optional<std::uint64_t> iteration_cap;  ///< generations
    TraceOptions trace;
    /// Replaces the default initial population (NEH seeds + random permutations); repeated
    /// cyclically up to `population_size`.
    std::vector<Permutation> initial_population;

    void validate(int jobs) const;
};

/// Davis order crossover: the child keeps `first[lo..hi]` in place and fills the remaining
/// slots, starting after `hi` and wrapping around, with the other jobs in `second`'s order
/// (read from `hi + 1`, wrapping).
Permutation order_crossover(const Permutation& first, const Permutation& second, std::size_t lo,
                            std::size_t hi);
Permutation order_crossover(const Permutation& first, const Permutation& second, Rng& rng);

/// Elitist survival: whole rank fronts while they fit, then the last front by descending
/// crowding distance (ties: lower index). Returns `count` indices into `points`.
std::vector<std::size_t> select_survivors(std::span<const ObjectiveVector> points, std::size_t count);

/// Permutation-encoded NSGA-II with an external archive of every evaluated point.
RunResult run_nsga2(const Instance& instance, const Nsga2Config& config);

}  // namespace bhfs
