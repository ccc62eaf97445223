#pragma once

#include <bhfs/core/objectives.hpp>

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace bhfs {

/// CSV with header `cmax,tec`; rows written in ascending makespan order.
void write_front_csv(std::ostream& os, std::vector<ObjectiveVector> front);
void save_front_csv(const std::filesystem::path& path, std::vector<ObjectiveVector> front);

std::vector<ObjectiveVector> read_front_csv(std::istream& is);
std::vector<ObjectiveVector> load_front_csv(const std::filesystem::path& path);

}  // namespace bhfs
