#include <bhfs/exact/oracle.hpp>

#include <bhfs/core/error.hpp>
#include <bhfs/pareto/archive.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace bhfs {

namespace {

using Sequencing = std::vector<std::vector<JobId>>;  // one job list per machine

Sequencing canonical(Sequencing s)
{
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
        if (a.empty() || b.empty()) return !a.empty() && b.empty();
        return a.front() < b.front();
    });
    return s;
}

// Every split of the job set into `machines` ordered lists, up to machine relabelling.
std::vector<Sequencing> sequencings(int jobs, int machines)
{
    std::set<Sequencing> found;
    Permutation perm = identity_permutation(jobs);
    std::vector<int> cuts(machines + 1, 0);  // list m holds perm[cuts[m], cuts[m+1])
    cuts.back() = jobs;
    auto emit = [&] {
        Sequencing s(machines);
        for (int m = 0; m < machines; ++m) s[m].assign(perm.begin() + cuts[m], perm.begin() + cuts[m + 1]);
        found.insert(canonical(std::move(s)));
    };
    auto place = [&](auto& self, int m) -> void {
        if (m == machines) return emit();
        for (int c = cuts[m - 1]; c <= jobs; ++c) {
            cuts[m] = c;
            self(self, m + 1);
        }
    };
    do {
        place(place, 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {found.begin(), found.end()};
}

struct Timing {
    std::vector<Time> start, completion;  // (job, stage)
    std::vector<int> machine;
};

// Earliest-start execution of fixed per-machine orders; false on deadlock.
bool execute(const Instance& instance, const std::vector<const Sequencing*>& plan, Timing& t)
{
    const int n = instance.jobs();
    const int stages = instance.stages();
    const auto at = [stages](int j, int k) { return static_cast<std::size_t>(j) * stages + k; };
    t.start.assign(static_cast<std::size_t>(n) * stages, 0);
    t.completion.assign(t.start.size(), 0);
    t.machine.assign(t.start.size(), -1);

    std::vector<int> stage_of(n, -1);         // stage currently occupied
    std::vector<Time> done_at(n, 0);          // end of processing at that stage
    std::vector<int> holder(instance.total_machines(), -1);
    std::vector<std::size_t> next(instance.total_machines(), 0);
    int finished = 0;
    Time now = 0;

    while (finished < n) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (int j = 0; j < n; ++j)
                if (stage_of[j] == stages - 1 && done_at[j] <= now) {
                    const int flat = t.machine[at(j, stages - 1)];
                    holder[flat] = -1;
                    t.completion[at(j, stages - 1)] = done_at[j];
                    stage_of[j] = stages;
                    ++finished;
                    moved = true;
                }
            for (int k = 0; k < stages; ++k)
                for (int m = 0; m < instance.machines(k); ++m) {
                    const int flat = instance.machine_offset(k) + m;
                    const auto& order = (*plan[k])[m];
                    if (holder[flat] != -1 || next[flat] >= order.size()) continue;
                    const JobId j = order[next[flat]];
                    if (stage_of[j] != k - 1 || (k > 0 && done_at[j] > now)) continue;
                    if (k > 0) {
                        holder[t.machine[at(j, k - 1)]] = -1;
                        t.completion[at(j, k - 1)] = now;
                    }
                    holder[flat] = j;
                    ++next[flat];
                    stage_of[j] = k;
                    t.machine[at(j, k)] = flat;
                    t.start[at(j, k)] = now;
                    done_at[j] = now + instance.proc(j, k);
                    moved = true;
                }
        }
        if (finished == n) break;
        Time upcoming = -1;
        for (int j = 0; j < n; ++j)
            if (stage_of[j] >= 0 && stage_of[j] < stages && done_at[j] > now)
                upcoming = upcoming < 0 ? done_at[j] : std::min(upcoming, done_at[j]);
        if (upcoming < 0) return false;
        now = upcoming;
    }
    return true;
}

ObjectiveVector account(const Instance& instance, const Timing& t)
{
    const int stages = instance.stages();
    const int total = instance.total_machines();
    std::vector<Time> first(total, -1), last(total, 0), occupied(total, 0);
    std::vector<int> stage_of_machine(total);
    for (int k = 0; k < stages; ++k)
        for (int m = 0; m < instance.machines(k); ++m) stage_of_machine[instance.machine_offset(k) + m] = k;
    ObjectiveVector v;
    Energy energy = 0;
    for (int j = 0; j < instance.jobs(); ++j)
        for (int k = 0; k < stages; ++k) {
            const std::size_t idx = static_cast<std::size_t>(j) * stages + k;
            const int flat = t.machine[idx];
            const Time s = t.start[idx], c = t.completion[idx];
            first[flat] = first[flat] < 0 ? s : std::min(first[flat], s);
            last[flat] = std::max(last[flat], c);
            occupied[flat] += c - s;
            energy += instance.energy_proc(k) * instance.proc(j, k);
            energy += instance.energy_block(k) * (c - s - instance.proc(j, k));
            if (k == stages - 1) v.cmax = std::max(v.cmax, c);
        }
    for (int f = 0; f < total; ++f)
        if (first[f] >= 0) energy += instance.energy_idle(stage_of_machine[f]) * (last[f] - first[f] - occupied[f]);
    v.tec = energy;
    return v;
}

std::uint64_t factorial_capped(int n, std::uint64_t cap)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
        if (f > cap) return cap + 1;
    }
    return f;
}

}  // namespace

std::uint64_t stage_sequencings(int jobs, int machines)
{
    return sequencings(jobs, machines).size();
}

OracleResult exhaustive_front(const Instance& instance, OracleMode mode, std::uint64_t cap)
{
    const int n = instance.jobs();
    OracleResult result;
    std::vector<ObjectiveVector> points;

    if (mode == OracleMode::Permutation) {
        if (factorial_capped(n, cap) > cap)
            throw CapExceeded("permutation oracle: " + std::to_string(n) + "! exceeds the cap");
        Permutation perm = identity_permutation(n);
        do {
            points.push_back(evaluate_sequence(instance, perm));
            ++result.enumerated;
            if (points.size() >= (1u << 16)) points = nondominated(std::span<const ObjectiveVector>(points));
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        if (n > 5 || instance.stages() > 3)
            throw CapExceeded("full oracle supports at most 5 jobs and 3 stages");
        std::vector<std::vector<Sequencing>> per_stage;
        std::uint64_t product = 1;
        for (int k = 0; k < instance.stages(); ++k) {
            per_stage.push_back(sequencings(n, instance.machines(k)));
            product *= per_stage.back().size();
            if (product > cap) throw CapExceeded("full oracle: search space exceeds the cap");
        }
        std::vector<std::size_t> digit(instance.stages(), 0);
        std::vector<const Sequencing*> plan(instance.stages());
        Timing timing;
        while (true) {
            for (int k = 0; k < instance.stages(); ++k) plan[k] = &per_stage[k][digit[k]];
            ++result.enumerated;
            if (execute(instance, plan, timing))
                points.push_back(account(instance, timing));
            else
                ++result.deadlocked;
            if (points.size() >= (1u << 16)) points = nondominated(std::span<const ObjectiveVector>(points));
            int k = instance.stages() - 1;
            while (k >= 0 && ++digit[k] == per_stage[k].size()) digit[k--] = 0;
            if (k < 0) break;
        }
    }
    result.front = nondominated(std::span<const ObjectiveVector>(points));
    std::sort(result.front.begin(), result.front.end());
    return result;
}

}  // namespace bhfs
