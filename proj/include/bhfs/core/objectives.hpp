#pragma once

#include <bhfs/core/instance.hpp>
#include <bhfs/core/schedule.hpp>

#include <compare>
#include <iosfwd>
#include <utility>
#include <vector>

namespace bhfs {

enum class Criterion { Makespan, Energy };

/// (makespan, total energy consumption); both minimised.
struct ObjectiveVector {
    Time cmax = 0;
    Energy tec = 0;

    auto operator<=>(const ObjectiveVector&) const = default;
};

std::ostream& operator<<(std::ostream& os, const ObjectiveVector& v);

struct MachineStats {
    Time earliest_start = 0;
    Time latest_completion = 0;
    Time busy = 0;     ///< sum of processing times of assigned jobs
    Time blocked = 0;  ///< sum of blocking times of assigned jobs
    Time idle = 0;     ///< span minus busy minus blocked; 0 for unused machines
    bool used = false;
};

struct ObjectiveReport {
    Time cmax = 0;
    Energy tec = 0;
    Time total_blocking = 0;
    Time total_idle = 0;
    Energy energy_processing = 0;
    Energy energy_idle = 0;
    Energy energy_blocking = 0;
    std::vector<MachineStats> machines;  ///< per flat machine index

    ObjectiveVector objectives() const { return {cmax, tec}; }
};

/// Checks every timetable constraint of `schedule` against `instance` and accounts time and
/// energy. Only jobs placed in the schedule (machine != -1) are counted. Throws
/// InconsistentSchedule naming the violated constraint.
ObjectiveReport evaluate(const Instance& instance, const Schedule& schedule);

/// decode + evaluate projected onto the two objectives.
ObjectiveVector evaluate_perm(const Instance& instance, std::span<const JobId> perm);

/// Objectives of a partial (or full) entry sequence; the hot path used by the heuristics.
ObjectiveVector evaluate_sequence(const Instance& instance, std::span<const JobId> seq);

struct LowerBounds {
    Time cmax = 0;
    Energy tec = 0;
};

/// Makespan bound from the longest job and the most loaded stage; energy bound is the
/// sequence-independent processing energy.
LowerBounds lower_bounds(const Instance& instance);

}  // namespace bhfs
