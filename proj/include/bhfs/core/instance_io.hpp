#pragma once

#include <bhfs/core/instance.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace bhfs {

/// Text format, first line `bhfs-instance v1`, then `key = value` lines:
///
///     bhfs-instance v1
///     id = example
///     n = 2
///     K = 2
///     machines_per_stage = 1 2
///     energy_proc = 4 2
///     energy_idle = 3 1
///     energy_block = 2 3
///     proc_time =
///       2 5
///       3 1
///
/// `proc_time` is row-major, one job per line. Lines starting with '#' are comments.
void write_instance(std::ostream& os, const Instance& instance);
void save_instance(const std::filesystem::path& path, const Instance& instance);

Instance read_instance(std::istream& is, Instance::Options options = {});
Instance load_instance(const std::filesystem::path& path, Instance::Options options = {});

}  // namespace bhfs
