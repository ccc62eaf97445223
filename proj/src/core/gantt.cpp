#include <bhfs/core/gantt.hpp>

#include <ostream>

namespace bhfs {

void write_gantt(std::ostream& os, const Instance& instance, const Schedule& schedule)
{
    os << "job k machine S P BT C\n";
    for (JobId j = 0; j < instance.jobs(); ++j) {
        if (schedule.machine(j, 0) < 0) continue;
        for (int k = 0; k < instance.stages(); ++k)
            os << j << ' ' << k << ' ' << schedule.machine(j, k) << ' ' << schedule.start(j, k) << ' '
               << instance.proc(j, k) << ' ' << schedule.block(j, k) << ' '
               << schedule.completion(j, k) << '\n';
    }
}

}  // namespace bhfs
