#pragma once

#include <bhfs/ripg/run.hpp>

namespace bhfs {

struct MoigConfig {
    int destruction_size = 3;
    std::int64_t time_budget_ms = 1000;
    std::uint64_t rng_seed = 0;
    std::optional<std::uint64_t> iteration_cap;
    TraceOptions trace;

    void validate(int jobs) const;
};

/// Multi-objective iterated greedy: NEH-seeded archive, then repeatedly destruct/reconstruct a
/// uniformly chosen archive entry and merge the result.
RunResult run_moig(const Instance& instance, const MoigConfig& config);

}  // namespace bhfs
