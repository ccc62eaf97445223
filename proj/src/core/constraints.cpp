#include <bhfs/core/constraints.hpp>

namespace bhfs {

std::string_view constraint_tag(Constraint c) noexcept
{
    switch (c) {
    case Constraint::Assignment: return "eq01";
    case Constraint::OrderExclusive: return "eq02";
    case Constraint::OrderLinked: return "eq03";
    case Constraint::NoOverlap: return "eq04";
    case Constraint::TimingBalance: return "eq06";
    case Constraint::LastStageNoBlock: return "eq07";
    case Constraint::StageLink: return "eq08";
    case Constraint::MakespanBound: return "eq09";
    case Constraint::TotalBlocking: return "eq11";
    case Constraint::LatestCompletion: return "eq12";
    case Constraint::FirstStartLower: return "eq13";
    case Constraint::FirstStartUpper: return "eq14";
    case Constraint::StartAfterTurnOn: return "eq15";
    case Constraint::FirstImpliesAssigned: return "eq16";
    case Constraint::SingleFirst: return "eq17";
    case Constraint::UsedHasFirst: return "eq18";
    case Constraint::MachineBlockLower: return "eq19";
    case Constraint::MachineBlockUpper: return "eq20";
    case Constraint::MachineBlockZero: return "eq21";
    case Constraint::MachineIdle: return "eq22";
    case Constraint::TotalIdle: return "eq23";
    case Constraint::TotalEnergy: return "eq24";
    case Constraint::NonNegativity: return "eq25";
    case Constraint::ObjectiveBound: return "eps";
    }
    return "eq??";
}

std::string_view constraint_name(Constraint c) noexcept
{
    switch (c) {
    case Constraint::Assignment: return "assignment";
    case Constraint::OrderExclusive: return "order exclusivity";
    case Constraint::OrderLinked: return "order linkage";
    case Constraint::NoOverlap: return "no overlap";
    case Constraint::TimingBalance: return "timing balance";
    case Constraint::LastStageNoBlock: return "last-stage no blocking";
    case Constraint::StageLink: return "stage linking";
    case Constraint::MakespanBound: return "makespan bound";
    case Constraint::TotalBlocking: return "total blocking";
    case Constraint::LatestCompletion: return "latest completion";
    case Constraint::FirstStartLower: return "first start (lower)";
    case Constraint::FirstStartUpper: return "first start (upper)";
    case Constraint::StartAfterTurnOn: return "start after turn-on";
    case Constraint::FirstImpliesAssigned: return "first implies assigned";
    case Constraint::SingleFirst: return "single first job";
    case Constraint::UsedHasFirst: return "used machine has a first job";
    case Constraint::MachineBlockLower: return "machine blocking (lower)";
    case Constraint::MachineBlockUpper: return "machine blocking (upper)";
    case Constraint::MachineBlockZero: return "machine blocking (off-machine)";
    case Constraint::MachineIdle: return "machine idle";
    case Constraint::TotalIdle: return "total idle";
    case Constraint::TotalEnergy: return "total energy";
    case Constraint::NonNegativity: return "non-negativity";
    case Constraint::ObjectiveBound: return "objective bound";
    }
    return "unknown";
}

}  // namespace bhfs
