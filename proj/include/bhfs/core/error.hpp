#pragma once

#include <stdexcept>
#include <string>

namespace bhfs {

/// Malformed or dimensionally inconsistent input (instance data, permutations, files).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Algorithm parameters that cannot be honoured for the given instance.
class InvalidConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A schedule that violates one of the timetable constraints. `constraint()` names
/// the violated constraint family using the same tag as the exported LP rows.
class InconsistentSchedule : public std::runtime_error {
public:
    InconsistentSchedule(std::string constraint, const std::string& detail)
        : std::runtime_error(constraint + ": " + detail), constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// An enumeration that would exceed its configured size limit.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bhfs
