#pragma once

#include <string_view>

namespace bhfs {

/// Constraint families of the timetable model. The tag of each family prefixes the
/// corresponding LP row names (`eqNN_...`) and InconsistentSchedule diagnostics.
enum class Constraint {
    Assignment,          // each job on exactly one machine per stage
    OrderExclusive,      // at most one of (i before j), (j before i)
    OrderLinked,         // jobs sharing a machine are ordered
    NoOverlap,           // successor enters after predecessor departs
    TimingBalance,       // completion = start + processing + blocking
    LastStageNoBlock,    // no blocking at the last stage
    StageLink,           // departure from k = entry into k+1
    MakespanBound,       // cmax >= every last-stage completion
    TotalBlocking,       // TBT aggregation
    LatestCompletion,    // machine turn-off after its last job
    FirstStartLower,     // turn-on time from the first job (lower side)
    FirstStartUpper,     // turn-on time from the first job (upper side)
    StartAfterTurnOn,    // every start after turn-on
    FirstImpliesAssigned,
    SingleFirst,
    UsedHasFirst,
    MachineBlockLower,   // per-machine blocking copy (lower side)
    MachineBlockUpper,   // per-machine blocking copy (upper side)
    MachineBlockZero,    // per-machine blocking vanishes off-machine
    MachineIdle,
    TotalIdle,
    TotalEnergy,
    NonNegativity,
    ObjectiveBound,      // epsilon-constraint rows
};

/// Short LP row prefix, e.g. "eq06".
std::string_view constraint_tag(Constraint c) noexcept;
/// Human-readable family name, e.g. "timing balance".
std::string_view constraint_name(Constraint c) noexcept;

}  // namespace bhfs
