#include <bhfs/baselines/moig.hpp>

#include <bhfs/core/error.hpp>
#include <bhfs/core/random.hpp>
#include <bhfs/ripg/neh.hpp>
#include <bhfs/ripg/operators.hpp>

namespace bhfs {

void MoigConfig::validate(int jobs) const
{
    if (destruction_size < 1 || destruction_size >= jobs)
        throw InvalidConfig("moig: destruction size must lie in [1, n-1]");
    if (!iteration_cap && time_budget_ms <= 0) throw InvalidConfig("moig: time budget must be positive");
}

RunResult run_moig(const Instance& instance, const MoigConfig& config)
{
    config.validate(instance.jobs());
    Budget budget(config.time_budget_ms, config.iteration_cap);
    Evaluator eval(instance);
    Rng rng(config.rng_seed);
    TraceRecorder recorder(config.trace, budget);

    ParetoArchive archive = initialize(eval);
    recorder.record(0, archive, eval.evaluations(), true);

    std::uint64_t iterations = 0;
    while (!budget.exhausted(iterations)) {
        const Solution picked = archive.entries()[uniform_index(rng, archive.size())];
        const bool changed = archive.merge(greedy_phase(eval, picked, config.destruction_size, rng));
        ++iterations;
        recorder.record(iterations, archive, eval.evaluations(), changed);
    }
    return {archive, recorder.finish(iterations, archive, eval.evaluations())};
}

}  // namespace bhfs
