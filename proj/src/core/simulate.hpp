#pragma once

#include <bhfs/core/instance.hpp>

#include <span>
#include <vector>

namespace bhfs::detail {

/// Raw decoder output indexed by (position in the entry sequence, stage).
struct Timetable {
    int length = 0;
    int stages = 0;
    std::vector<Time> start;
    std::vector<Time> completion;
    std::vector<int> machine;  ///< flat machine index

    std::size_t at(int pos, int stage) const noexcept
    {
        return static_cast<std::size_t>(pos) * stages + stage;
    }
};

/// Event-driven list scheduling under blocking; `seq` must be a valid job sequence.
void simulate(const Instance& instance, std::span<const JobId> seq, Timetable& out);

}  // namespace bhfs::detail
