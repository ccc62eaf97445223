#pragma once

#include <bhfs/core/instance.hpp>
#include <bhfs/core/schedule.hpp>

#include <iosfwd>

namespace bhfs {

/// One line per (job, stage): `job k machine S P BT C`, preceded by a header line.
void write_gantt(std::ostream& os, const Instance& instance, const Schedule& schedule);

}  // namespace bhfs
