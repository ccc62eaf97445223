#pragma once

#include <bhfs/core/instance.hpp>

#include <vector>

namespace bhfs {

/// One job occupying a machine from `start` (entry) to `end` (departure, including blocking).
struct Occupation {
    JobId job = 0;
    Time start = 0;
    Time end = 0;

    bool operator==(const Occupation&) const = default;
};

/// Timetable of a full or partial job set. Matrices are indexed (job, stage); rows of jobs
/// absent from a partial schedule keep `machine == -1`.
struct Schedule {
    Matrix<Time> start;
    Matrix<Time> completion;  ///< departure from the stage; start + proc + block
    Matrix<Time> block;
    Matrix<int> machine;      ///< machine index within the stage
    /// Per flat machine index (see Instance::machine_offset), occupations ordered by start.
    std::vector<std::vector<Occupation>> timelines;

    bool operator==(const Schedule&) const = default;
};

/// Decodes a job permutation into a blocking-aware timetable.
///
/// Jobs enter stage 0 in permutation order. Later stages serve jobs first-come-first-served
/// by the instant they finished processing upstream (ties: earlier in the permutation).
/// A job takes the free machine that has been available longest (ties: lowest index) and
/// keeps its current machine blocked until such a machine exists. The last stage never blocks.
///
/// Throws InvalidInput when `perm` is not a permutation of the instance's jobs.
Schedule decode(const Instance& instance, std::span<const JobId> perm);

/// Same rules applied to a subset of the jobs, in the given entry order.
Schedule decode_sequence(const Instance& instance, std::span<const JobId> seq);

}  // namespace bhfs
