#pragma once

#include <bhfs/core/schedule.hpp>
#include <bhfs/exact/milp.hpp>

#include <string>
#include <vector>

namespace bhfs {

/// Assigns every model variable the value implied by `schedule`: X from the machine
/// assignment, Z from same-machine order, Q for the first job of each used machine, ES/LC
/// and idle from the machine spans (all zero on unused machines). An `eps_slack` variable
/// takes the gap to the `eps_upper` right-hand side.
std::vector<double> certificate_values(const MilpModel& model, const Instance& instance,
                                       const Schedule& schedule);

/// Names of the rows violated by `values`; exact comparison, no tolerance.
std::vector<std::string> violated_rows(const MilpModel& model, const std::vector<double>& values);

double objective_value(const MilpModel& model, const std::vector<double>& values);

}  // namespace bhfs
