#pragma once

#include <bhfs/core/objectives.hpp>
#include <bhfs/exact/milp.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bhfs {

struct EpsilonConfig {
    int cells = 20;
    /// Command template; `{lp}` and `{sol}` are replaced by file paths (appended when absent).
    /// The command must write `<variable> <value>` lines to `{sol}`.
    std::optional<std::string> solver_cmd;
    std::int64_t cell_timeout_ms = 180'000;
    std::int64_t payoff_timeout_ms = 180'000;  ///< per lexicographic solve
    /// Minimised objective; the other one is bounded cell by cell.
    Criterion primary = Criterion::Makespan;
    std::filesystem::path work_dir = "epsilon";

    void validate() const;
};

enum class CellStatus { Solved, Unsolved, Empty, NotRun };

const char* to_string(CellStatus status);

/// Integer bounds lower <= objective <= upper of one grid cell.
struct EpsilonCell {
    int index = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    CellStatus status = CellStatus::NotRun;
    std::optional<ObjectiveVector> point;
    std::filesystem::path lp_file;
};

/// Splits [low, high] into `cells` equal-width cells, half-open except the last one, and
/// rounds each to the integers it contains. A cell with no integer gets lower > upper.
std::vector<EpsilonCell> epsilon_cells(std::int64_t low, std::int64_t high, int cells);

/// Augmentation weight for a bounded objective spanning `range`; keeps the augmentation
/// term below one unit of the minimised objective.
double augmentation_weight(std::int64_t range);

struct EpsilonResult {
    std::vector<ObjectiveVector> front;  ///< non-dominated, sorted
    std::int64_t range_low = 0;
    std::int64_t range_high = 0;
    bool payoff_solved = false;
    std::vector<ObjectiveVector> payoff;  ///< lexicographic optima found
    std::vector<EpsilonCell> cells;
    std::vector<std::filesystem::path> lp_files;  ///< in emission order
};

/// Augmented epsilon-constraint sweep. Without a solver only the two single-objective payoff
/// models and one model per cell are written; the gridded range then runs from the
/// objective's lower bound to the worst value among the NEH seeds.
EpsilonResult run_epsilon(const Instance& instance, const EpsilonConfig& config);

/// Rebuilds a schedule from solver values (rounded times, argmax assignment) and returns its
/// exact objectives; nullopt if the values do not describe a consistent schedule.
std::optional<ObjectiveVector> objectives_from_solution(const Instance& instance,
                                                        const std::map<std::string, double>& values);

}  // namespace bhfs
