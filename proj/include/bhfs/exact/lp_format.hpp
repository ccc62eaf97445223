#pragma once

#include <bhfs/exact/milp.hpp>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

namespace bhfs {

/// CPLEX-LP text: comment header, `Minimize`, `Subject To`, `Bounds` (every continuous
/// variable, declaration order), `Binaries` (declaration order), `End`. Long rows wrap onto
/// indented continuation lines. Output is a pure function of the model.
void write_lp(std::ostream& os, const MilpModel& model);
void save_lp(const std::filesystem::path& path, const MilpModel& model);

/// Reads the subset of the LP format produced by `write_lp`.
MilpModel read_lp(std::istream& is);
MilpModel load_lp(const std::filesystem::path& path);

/// Solver output in the `<variable> <value>` line layout. Lines that do not match (headers,
/// status lines, comments) are ignored.
std::map<std::string, double> read_solution(std::istream& is);

/// Shortest decimal text that reads back as exactly `value`.
std::string format_number(double value);

}  // namespace bhfs
