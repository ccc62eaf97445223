#pragma once

#include <bhfs/core/matrix.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bhfs {

using Time = std::int64_t;
using Energy = std::int64_t;
using JobId = int;

/// Job order entering the first stage. Partial sequences (a subset of the jobs) are
/// accepted by the sequence evaluator; `decode` requires a full permutation.
using Permutation = std::vector<JobId>;

/// Blocking hybrid flow shop instance: `jobs()` jobs visit `stages()` stages in order,
/// stage k has `machines(k)` identical parallel machines and no buffer in front of it.
/// Immutable after construction.
class Instance {
public:
    struct Options {
        /// Accept instances where every stage has a single machine.
        bool allow_pure_flowshop = false;
    };

    Instance(std::string id, std::vector<int> machines_per_stage, Matrix<Time> proc_time,
             std::vector<Energy> energy_proc, std::vector<Energy> energy_idle,
             std::vector<Energy> energy_block);
    Instance(std::string id, std::vector<int> machines_per_stage, Matrix<Time> proc_time,
             std::vector<Energy> energy_proc, std::vector<Energy> energy_idle,
             std::vector<Energy> energy_block, Options options);

    const std::string& id() const noexcept { return id_; }
    int jobs() const noexcept { return static_cast<int>(proc_time_.rows()); }
    int stages() const noexcept { return static_cast<int>(proc_time_.cols()); }
    int machines(int stage) const noexcept { return machines_per_stage_[stage]; }
    const std::vector<int>& machines_per_stage() const noexcept { return machines_per_stage_; }

    /// Machines are also addressed by a flat index: machine m of stage k is
    /// `machine_offset(k) + m`.
    int machine_offset(int stage) const noexcept { return machine_offset_[stage]; }
    int total_machines() const noexcept { return machine_offset_.back(); }

    Time proc(JobId job, int stage) const noexcept { return proc_time_(job, stage); }
    const Matrix<Time>& proc_time() const noexcept { return proc_time_; }

    Energy energy_proc(int stage) const noexcept { return energy_proc_[stage]; }
    Energy energy_idle(int stage) const noexcept { return energy_idle_[stage]; }
    Energy energy_block(int stage) const noexcept { return energy_block_[stage]; }
    const std::vector<Energy>& energy_proc() const noexcept { return energy_proc_; }
    const std::vector<Energy>& energy_idle() const noexcept { return energy_idle_; }
    const std::vector<Energy>& energy_block() const noexcept { return energy_block_; }

    /// Sum of processing times at a stage.
    Time stage_workload(int stage) const noexcept { return stage_workload_[stage]; }
    /// Sum of processing times of a job over all stages.
    Time job_workload(JobId job) const noexcept { return job_workload_[job]; }
    /// Processing energy of all jobs; identical for every feasible schedule.
    Energy processing_energy() const noexcept { return processing_energy_; }
    /// Processing energy of a subset of jobs.
    Energy processing_energy(std::span<const JobId> jobs) const noexcept;

    bool operator==(const Instance&) const = default;

private:
    std::string id_;
    std::vector<int> machines_per_stage_;
    Matrix<Time> proc_time_;
    std::vector<Energy> energy_proc_;
    std::vector<Energy> energy_idle_;
    std::vector<Energy> energy_block_;

    std::vector<int> machine_offset_;
    std::vector<Time> stage_workload_;
    std::vector<Time> job_workload_;
    Energy processing_energy_ = 0;
};

/// True iff `seq` holds distinct job indices of `instance`.
bool is_valid_sequence(const Instance& instance, std::span<const JobId> seq);
/// True iff `perm` is a bijection on the jobs of `instance`.
bool is_permutation(const Instance& instance, std::span<const JobId> perm);

/// 0, 1, ..., n-1.
Permutation identity_permutation(int n);

}  // namespace bhfs
