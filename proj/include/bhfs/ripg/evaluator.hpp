#pragma once

#include <bhfs/core/objectives.hpp>

#include <cstdint>

namespace bhfs {

/// Sequence evaluator that counts how many schedules it has decoded.
class Evaluator {
public:
    explicit Evaluator(const Instance& instance) : instance_(&instance) {}

    ObjectiveVector operator()(std::span<const JobId> seq)
    {
        ++count_;
        return evaluate_sequence(*instance_, seq);
    }

    const Instance& instance() const noexcept { return *instance_; }
    std::uint64_t evaluations() const noexcept { return count_; }

private:
    const Instance* instance_;
    std::uint64_t count_ = 0;
};

}  // namespace bhfs
