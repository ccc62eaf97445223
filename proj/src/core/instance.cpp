#include <bhfs/core/instance.hpp>

#include <bhfs/core/error.hpp>

#include <algorithm>
#include <numeric>

namespace bhfs {

namespace {

void require(bool condition, const std::string& message)
{
    if (!condition) throw InvalidInput("instance: " + message);
}

bool all_non_negative(const std::vector<Energy>& v)
{
    return std::all_of(v.begin(), v.end(), [](Energy e) { return e >= 0; });
}

}  // namespace

Instance::Instance(std::string id, std::vector<int> machines_per_stage, Matrix<Time> proc_time,
                   std::vector<Energy> energy_proc, std::vector<Energy> energy_idle,
                   std::vector<Energy> energy_block)
    : Instance(std::move(id), std::move(machines_per_stage), std::move(proc_time),
               std::move(energy_proc), std::move(energy_idle), std::move(energy_block), Options{})
{
}

Instance::Instance(std::string id, std::vector<int> machines_per_stage, Matrix<Time> proc_time,
                   std::vector<Energy> energy_proc, std::vector<Energy> energy_idle,
                   std::vector<Energy> energy_block, Options options)
    : id_(std::move(id)),
      machines_per_stage_(std::move(machines_per_stage)),
      proc_time_(std::move(proc_time)),
      energy_proc_(std::move(energy_proc)),
      energy_idle_(std::move(energy_idle)),
      energy_block_(std::move(energy_block))
{
    const auto n = proc_time_.rows();
    const auto stages = proc_time_.cols();
    require(n >= 1, "at least one job required");
    require(stages >= 2, "at least two stages required");
    require(machines_per_stage_.size() == stages, "machines_per_stage must have one entry per stage");
    require(std::all_of(machines_per_stage_.begin(), machines_per_stage_.end(),
                        [](int m) { return m >= 1; }),
            "every stage needs at least one machine");
    require(options.allow_pure_flowshop ||
                std::any_of(machines_per_stage_.begin(), machines_per_stage_.end(),
                            [](int m) { return m > 1; }),
            "at least one stage must have parallel machines");
    require(energy_proc_.size() == stages && energy_idle_.size() == stages &&
                energy_block_.size() == stages,
            "energy rates must have one entry per stage");
    require(all_non_negative(energy_proc_) && all_non_negative(energy_idle_) &&
                all_non_negative(energy_block_),
            "energy rates must be non-negative");
    require(std::all_of(proc_time_.data().begin(), proc_time_.data().end(),
                        [](Time p) { return p >= 0; }),
            "processing times must be non-negative");

    machine_offset_.assign(stages + 1, 0);
    for (std::size_t k = 0; k < stages; ++k)
        machine_offset_[k + 1] = machine_offset_[k] + machines_per_stage_[k];

    stage_workload_.assign(stages, 0);
    job_workload_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < stages; ++k) {
            stage_workload_[k] += proc_time_(i, k);
            job_workload_[i] += proc_time_(i, k);
        }
    }
    for (std::size_t k = 0; k < stages; ++k)
        processing_energy_ += stage_workload_[k] * energy_proc_[k];
}

Energy Instance::processing_energy(std::span<const JobId> jobs) const noexcept
{
    Energy total = 0;
    for (JobId j : jobs)
        for (int k = 0; k < stages(); ++k) total += proc(j, k) * energy_proc_[k];
    return total;
}

bool is_valid_sequence(const Instance& instance, std::span<const JobId> seq)
{
    const int n = instance.jobs();
    if (static_cast<int>(seq.size()) > n) return false;
    std::vector<char> seen(n, 0);
    for (JobId j : seq) {
        if (j < 0 || j >= n || seen[j]) return false;
        seen[j] = 1;
    }
    return true;
}

bool is_permutation(const Instance& instance, std::span<const JobId> perm)
{
    return static_cast<int>(perm.size()) == instance.jobs() && is_valid_sequence(instance, perm);
}

Permutation identity_permutation(int n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace bhfs
