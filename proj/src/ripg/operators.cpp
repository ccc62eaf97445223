#include <bhfs/ripg/operators.hpp>

#include <bhfs/core/error.hpp>
#include <bhfs/pareto/crowding.hpp>

#include <algorithm>
#include <cassert>

namespace bhfs {

namespace {

Permutation inserted(const Permutation& seq, std::size_t pos, JobId job)
{
    Permutation out;
    out.reserve(seq.size() + 1);
    out.insert(out.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(pos));
    out.push_back(job);
    out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(pos), seq.end());
    return out;
}

}  // namespace

const Solution& select(const ParetoArchive& archive, bool front_changed, Rng& rng)
{
    const auto& entries = archive.entries();
    assert(!entries.empty());
    if (entries.size() == 1) return entries.front();
    if (!front_changed) return entries[uniform_index(rng, entries.size())];

    const auto distance = crowding_distance(archive.points());
    const double best = *std::max_element(distance.begin(), distance.end());
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < distance.size(); ++i)
        if (distance[i] == best) tied.push_back(i);
    if (tied.size() == 1) return entries[tied.front()];
    return entries[tied[uniform_index(rng, tied.size())]];
}

Destruction destruct(std::span<const JobId> seq, int d, Rng& rng)
{
    Destruction out{Permutation(seq.begin(), seq.end()), {}};
    for (int i = 0; i < d && !out.partial.empty(); ++i) {
        const auto pos = uniform_index(rng, out.partial.size());
        out.removed.push_back(out.partial[pos]);
        out.partial.erase(out.partial.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return out;
}

std::vector<Solution> reconstruct(Evaluator& eval, const Permutation& partial,
                                  std::span<const JobId> removed)
{
    std::vector<Solution> kept{{partial, eval(partial)}};
    std::vector<Solution> candidates;
    for (JobId job : removed) {
        candidates.clear();
        for (const Solution& s : kept) {
            for (std::size_t pos = 0; pos <= s.sequence.size(); ++pos) {
                Permutation seq = inserted(s.sequence, pos, job);
                const auto objectives = eval(seq);
                candidates.push_back({std::move(seq), objectives});
            }
        }
        kept = nondominated(std::move(candidates));
        candidates = {};
    }
    return kept;
}

std::vector<Solution> greedy_phase(Evaluator& eval, const Solution& input, int d, Rng& rng)
{
    const int n = static_cast<int>(input.sequence.size());
    if (d < 1 || d >= n)
        throw InvalidConfig("greedy phase: destruction size " + std::to_string(d) +
                            " must lie in [1, " + std::to_string(n - 1) + "]");
    const Destruction destroyed = destruct(input.sequence, d, rng);
    auto out = reconstruct(eval, destroyed.partial, destroyed.removed);
    out.push_back(input);
    return nondominated(std::move(out));
}

std::vector<Solution> local_search(Evaluator& eval, const Solution& input, Rng& rng)
{
    const std::size_t n = input.sequence.size();
    if (n < 2) throw InvalidConfig("local search needs at least two jobs");
    Permutation rest = input.sequence;
    const auto removed_at = uniform_index(rng, n);
    const JobId job = rest[removed_at];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(removed_at));

    std::vector<Solution> candidates;
    candidates.reserve(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        Permutation seq = inserted(rest, pos, job);
        const auto objectives = eval(seq);
        candidates.push_back({std::move(seq), objectives});
    }
    return nondominated(std::move(candidates));
}

Permutation insertion_move(const Permutation& seq, Rng& rng)
{
    const std::size_t n = seq.size();
    if (n < 2) return seq;
    const auto from = uniform_index(rng, n);
    auto to = uniform_index(rng, n - 1);
    if (to >= from) ++to;
    Permutation rest = seq;
    const JobId job = rest[from];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(from));
    return inserted(rest, to, job);
}

Permutation interchange_move(const Permutation& seq, Rng& rng)
{
    const std::size_t n = seq.size();
    if (n < 2) return seq;
    const auto a = uniform_index(rng, n);
    auto b = uniform_index(rng, n - 1);
    if (b >= a) ++b;
    Permutation out = seq;
    std::swap(out[a], out[b]);
    return out;
}

std::vector<Solution> refine(Evaluator& eval, std::vector<Solution> front, int loop_size, Rng& rng)
{
    for (Solution& current : front) {
        if (current.sequence.size() < 2) continue;
        for (int loop = 0; loop < loop_size; ++loop) {
            int neighbourhood = 1;
            while (neighbourhood < 3) {
                Permutation candidate = neighbourhood == 1 ? insertion_move(current.sequence, rng)
                                                           : interchange_move(current.sequence, rng);
                const auto objectives = eval(candidate);
                if (dominates(objectives, current.objectives)) {
                    current = {std::move(candidate), objectives};
                    neighbourhood = 1;
                } else {
                    ++neighbourhood;
                }
            }
        }
    }
    return nondominated(std::move(front));
}

}  // namespace bhfs
