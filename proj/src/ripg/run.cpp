#include <bhfs/ripg/run.hpp>

#include <bhfs/core/error.hpp>
#include <bhfs/pareto/metrics.hpp>
#include <bhfs/ripg/neh.hpp>
#include <bhfs/ripg/operators.hpp>

namespace bhfs {

Budget::Budget(std::int64_t time_budget_ms, std::optional<std::uint64_t> iteration_cap)
    : start_(Clock::now()), time_budget_ms_(time_budget_ms), iteration_cap_(iteration_cap)
{
}

bool Budget::exhausted(std::uint64_t iterations_done) const
{
    if (iteration_cap_) return iterations_done >= *iteration_cap_;
    return out_of_time();
}

bool Budget::out_of_time() const
{
    return !iteration_cap_ && elapsed_ms() >= static_cast<double>(time_budget_ms_);
}

double Budget::elapsed_ms() const
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
}

void TraceRecorder::record(std::uint64_t iteration, const ParetoArchive& archive,
                           std::uint64_t evaluations, bool changed)
{
    const bool due = iteration == 0 || changed ||
                     (options_.interval > 0 && iteration % options_.interval == 0);
    if (!due) return;
    TraceRecord r;
    r.iteration = iteration;
    r.elapsed_ms = budget_->elapsed_ms();
    r.archive_size = archive.size();
    r.evaluations = evaluations;
    const auto points = archive.points();
    r.hypervolume = hypervolume(points, NormalizationContext::from_points(points));
    if (options_.record_fronts) r.front = archive.sorted_points();
    trace_.snapshots.push_back(std::move(r));
}

RunTrace TraceRecorder::finish(std::uint64_t iterations, const ParetoArchive& archive,
                               std::uint64_t evaluations)
{
    if (trace_.snapshots.empty() || trace_.snapshots.back().iteration != iterations)
        record(iterations, archive, evaluations, true);
    trace_.iterations = iterations;
    trace_.evaluations = evaluations;
    trace_.elapsed_ms = budget_->elapsed_ms();
    trace_.final_front = archive.sorted_points();
    return std::move(trace_);
}

void RipgConfig::validate(int jobs) const
{
    if (destruction_size < 1 || destruction_size >= jobs)
        throw InvalidConfig("ripg: destruction size must lie in [1, n-1]");
    if (loop_size < 1) throw InvalidConfig("ripg: loop size must be at least 1");
    if (!iteration_cap && time_budget_ms <= 0)
        throw InvalidConfig("ripg: time budget must be positive");
}

RunResult run_ripg(const Instance& instance, const RipgConfig& config)
{
    config.validate(instance.jobs());
    Budget budget(config.time_budget_ms, config.iteration_cap);
    Evaluator eval(instance);
    Rng rng(config.rng_seed);
    TraceRecorder recorder(config.trace, budget);

    ParetoArchive archive = initialize(eval);
    recorder.record(0, archive, eval.evaluations(), true);

    bool front_changed = true;
    std::uint64_t iterations = 0;
    while (!budget.exhausted(iterations)) {
        const auto before = archive.sorted_points();

        const Solution first = select(archive, front_changed, rng);
        archive.merge(greedy_phase(eval, first, config.destruction_size, rng));
        if (budget.out_of_time()) break;

        const Solution second = select(archive, front_changed, rng);
        archive.merge(local_search(eval, second, rng));
        if (budget.out_of_time()) break;

        auto refined = refine(eval, archive.entries(), config.loop_size, rng);
        archive = ParetoArchive();
        archive.merge(refined);

        ++iterations;
        front_changed = archive.sorted_points() != before;
        recorder.record(iterations, archive, eval.evaluations(), front_changed);
    }
    return {archive, recorder.finish(iterations, archive, eval.evaluations())};
}

}  // namespace bhfs
