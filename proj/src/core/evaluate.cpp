#include <bhfs/core/objectives.hpp>

#include <bhfs/core/constraints.hpp>
#include <bhfs/core/error.hpp>

#include "simulate.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace bhfs {

std::ostream& operator<<(std::ostream& os, const ObjectiveVector& v)
{
    return os << "(cmax=" << v.cmax << ", tec=" << v.tec << ")";
}

namespace {

[[noreturn]] void violated(Constraint c, const std::string& detail)
{
    throw InconsistentSchedule(std::string(constraint_tag(c)) + " " +
                                   std::string(constraint_name(c)),
                               detail);
}

std::string at(JobId job, int stage)
{
    return "job " + std::to_string(job) + " at stage " + std::to_string(stage);
}

/// Accumulates per-machine statistics and energies for placed (job, stage) cells.
class Accountant {
public:
    explicit Accountant(const Instance& instance)
        : instance_(instance), report_{}
    {
        report_.machines.resize(instance.total_machines());
    }

    void add(JobId job, int stage, int flat, Time start, Time completion)
    {
        const Time proc = instance_.proc(job, stage);
        const Time block = completion - start - proc;
        MachineStats& m = report_.machines[flat];
        if (!m.used) {
            m.used = true;
            m.earliest_start = start;
            m.latest_completion = completion;
        } else {
            m.earliest_start = std::min(m.earliest_start, start);
            m.latest_completion = std::max(m.latest_completion, completion);
        }
        m.busy += proc;
        m.blocked += block;
        report_.total_blocking += block;
        report_.energy_blocking += block * instance_.energy_block(stage);
        report_.energy_processing += proc * instance_.energy_proc(stage);
        if (stage == instance_.stages() - 1) report_.cmax = std::max(report_.cmax, completion);
    }

    ObjectiveReport finish()
    {
        for (int k = 0; k < instance_.stages(); ++k) {
            for (int f = instance_.machine_offset(k); f < instance_.machine_offset(k + 1); ++f) {
                MachineStats& m = report_.machines[f];
                if (!m.used) continue;
                m.idle = m.latest_completion - m.earliest_start - m.busy - m.blocked;
                report_.total_idle += m.idle;
                report_.energy_idle += m.idle * instance_.energy_idle(k);
            }
        }
        report_.tec = report_.energy_processing + report_.energy_idle + report_.energy_blocking;
        return std::move(report_);
    }

private:
    const Instance& instance_;
    ObjectiveReport report_;
};

}  // namespace

ObjectiveReport evaluate(const Instance& instance, const Schedule& s)
{
    const int n = instance.jobs();
    const int stages = instance.stages();
    const auto shape_ok = [&](const auto& m) {
        return m.rows() == static_cast<std::size_t>(n) && m.cols() == static_cast<std::size_t>(stages);
    };
    if (!shape_ok(s.start) || !shape_ok(s.completion) || !shape_ok(s.block) ||
        !shape_ok(s.machine) || s.timelines.size() != static_cast<std::size_t>(instance.total_machines()))
        violated(Constraint::Assignment, "schedule dimensions do not match the instance");

    std::vector<std::size_t> seen(instance.total_machines(), 0);
    std::size_t placed_cells = 0;
    for (JobId j = 0; j < n; ++j) {
        const bool placed = s.machine(j, 0) >= 0;
        for (int k = 0; k < stages; ++k) {
            const int m = s.machine(j, k);
            if ((m >= 0) != placed)
                violated(Constraint::Assignment, at(j, k) + " is placed at some stages only");
            if (!placed) continue;
            if (m >= instance.machines(k))
                violated(Constraint::Assignment, at(j, k) + " uses machine " + std::to_string(m));
            ++placed_cells;

            if (s.block(j, k) < 0) violated(Constraint::NonNegativity, at(j, k) + " has negative blocking");
            if (s.start(j, k) < 0) violated(Constraint::NonNegativity, at(j, k) + " starts before 0");
            if (s.completion(j, k) != s.start(j, k) + instance.proc(j, k) + s.block(j, k))
                violated(Constraint::TimingBalance, at(j, k));
            if (k == stages - 1 && s.block(j, k) != 0)
                violated(Constraint::LastStageNoBlock, at(j, k));
            if (k + 1 < stages && s.machine(j, k + 1) >= 0 && s.start(j, k + 1) != s.completion(j, k))
                violated(Constraint::StageLink, at(j, k));
        }
    }

    std::size_t listed_cells = 0;
    for (int k = 0; k < stages; ++k) {
        for (int m = 0; m < instance.machines(k); ++m) {
            const auto& line = s.timelines[instance.machine_offset(k) + m];
            listed_cells += line.size();
            for (std::size_t idx = 0; idx < line.size(); ++idx) {
                const Occupation& o = line[idx];
                if (o.job < 0 || o.job >= n || s.machine(o.job, k) != m ||
                    s.start(o.job, k) != o.start || s.completion(o.job, k) != o.end)
                    violated(Constraint::Assignment,
                             "timeline of machine " + std::to_string(m) + " at stage " +
                                 std::to_string(k) + " disagrees with the timetable");
                if (idx > 0) {
                    const Occupation& prev = line[idx - 1];
                    if (o.start < prev.end || (o.start == prev.start && o.end < prev.end))
                        violated(Constraint::NoOverlap,
                                 at(o.job, k) + " overlaps job " + std::to_string(prev.job));
                }
            }
        }
    }
    if (listed_cells != placed_cells)
        violated(Constraint::Assignment, "timelines do not list every placed job exactly once");

    Accountant acc(instance);
    for (JobId j = 0; j < n; ++j) {
        if (s.machine(j, 0) < 0) continue;
        for (int k = 0; k < stages; ++k)
            acc.add(j, k, instance.machine_offset(k) + s.machine(j, k), s.start(j, k),
                    s.completion(j, k));
    }
    return acc.finish();
}

ObjectiveVector evaluate_sequence(const Instance& instance, std::span<const JobId> seq)
{
    thread_local detail::Timetable table;
    detail::simulate(instance, seq, table);
    Accountant acc(instance);
    for (int pos = 0; pos < table.length; ++pos)
        for (int k = 0; k < table.stages; ++k) {
            const auto cell = table.at(pos, k);
            acc.add(seq[pos], k, table.machine[cell], table.start[cell], table.completion[cell]);
        }
    return acc.finish().objectives();
}

ObjectiveVector evaluate_perm(const Instance& instance, std::span<const JobId> perm)
{
    return evaluate(instance, decode(instance, perm)).objectives();
}

LowerBounds lower_bounds(const Instance& instance)
{
    LowerBounds lb;
    for (JobId j = 0; j < instance.jobs(); ++j) lb.cmax = std::max(lb.cmax, instance.job_workload(j));
    for (int k = 0; k < instance.stages(); ++k) {
        const Time m = instance.machines(k);
        lb.cmax = std::max(lb.cmax, (instance.stage_workload(k) + m - 1) / m);
    }
    lb.tec = instance.processing_energy();
    return lb;
}

}  // namespace bhfs
