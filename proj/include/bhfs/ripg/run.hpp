#pragma once

#include <bhfs/pareto/archive.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace bhfs {

/// Stopping rule shared by the search methods: a wall-clock budget, or, when an iteration cap
/// is set, that cap alone (deterministic runs).
class Budget {
public:
    Budget(std::int64_t time_budget_ms, std::optional<std::uint64_t> iteration_cap);

    /// True once the cap is reached (cap mode) or the wall-clock budget has elapsed.
    bool exhausted(std::uint64_t iterations_done) const;
    /// Wall-clock check used between operator applications; always false in cap mode.
    bool out_of_time() const;
    double elapsed_ms() const;

private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_;
    std::int64_t time_budget_ms_;
    std::optional<std::uint64_t> iteration_cap_;
};

struct TraceRecord {
    std::uint64_t iteration = 0;
    double elapsed_ms = 0.0;
    std::size_t archive_size = 0;
    std::uint64_t evaluations = 0;
    double hypervolume = 0.0;            ///< under the archive's own normalisation
    std::vector<ObjectiveVector> front;  ///< filled only when fronts are recorded
};

struct RunTrace {
    std::uint64_t iterations = 0;
    std::uint64_t evaluations = 0;
    double elapsed_ms = 0.0;
    std::vector<TraceRecord> snapshots;
    std::vector<ObjectiveVector> final_front;
};

/// Snapshot policy shared by the search methods.
struct TraceOptions {
    /// Record every `interval`-th iteration, plus iteration 0, every iteration that changed the
    /// archive, and the last one.
    std::uint64_t interval = 1;
    bool record_fronts = false;
};

struct RunResult {
    ParetoArchive archive;
    RunTrace trace;
};

struct RipgConfig {
    int destruction_size = 3;
    int loop_size = 10;
    std::int64_t time_budget_ms = 1000;
    std::uint64_t rng_seed = 0;
    std::optional<std::uint64_t> iteration_cap;
    TraceOptions trace;

    /// Throws InvalidConfig when a parameter is out of range for an n-job instance.
    void validate(int jobs) const;
};

/// Refined iterated Pareto greedy. Each iteration: select -> greedy phase -> merge ->
/// select -> local search -> merge -> refine the whole archive.
RunResult run_ripg(const Instance& instance, const RipgConfig& config);

/// Trace bookkeeping shared by the search methods.
class TraceRecorder {
public:
    TraceRecorder(TraceOptions options, const Budget& budget) : options_(options), budget_(&budget) {}

    void record(std::uint64_t iteration, const ParetoArchive& archive, std::uint64_t evaluations,
                bool changed);
    RunTrace finish(std::uint64_t iterations, const ParetoArchive& archive, std::uint64_t evaluations);

private:
    TraceOptions options_;
    const Budget* budget_;
    RunTrace trace_;
};

}  // namespace bhfs
