#include <bhfs/ripg/neh.hpp>

#include <algorithm>

namespace bhfs {

Permutation neh(Evaluator& eval, Criterion criterion)
{
    const Instance& instance = eval.instance();
    Permutation order = identity_permutation(instance.jobs());
    std::stable_sort(order.begin(), order.end(), [&](JobId a, JobId b) {
        return instance.job_workload(a) > instance.job_workload(b);
    });

    auto score = [&](const ObjectiveVector& v) {
        return criterion == Criterion::Makespan ? v.cmax : v.tec;
    };

    Permutation seq{order.front()};
    Permutation candidate;
    for (std::size_t next = 1; next < order.size(); ++next) {
        std::size_t best_pos = 0;
        std::int64_t best = 0;
        for (std::size_t pos = 0; pos <= seq.size(); ++pos) {
            candidate = seq;
            candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(pos), order[next]);
            const auto value = score(eval(candidate));
            if (pos == 0 || value < best) {
                best = value;
                best_pos = pos;
            }
        }
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(best_pos), order[next]);
    }
    return seq;
}

Permutation neh_makespan(const Instance& instance)
{
    Evaluator eval(instance);
    return neh_makespan(eval);
}

Permutation neh_tec(const Instance& instance)
{
    Evaluator eval(instance);
    return neh_tec(eval);
}

ParetoArchive initialize(Evaluator& eval)
{
    ParetoArchive archive;
    for (auto criterion : {Criterion::Makespan, Criterion::Energy}) {
        Permutation seq = neh(eval, criterion);
        const auto objectives = eval(seq);
        archive.insert({std::move(seq), objectives});
    }
    return archive;
}

ParetoArchive initialize(const Instance& instance)
{
    Evaluator eval(instance);
    return initialize(eval);
}

}  // namespace bhfs
