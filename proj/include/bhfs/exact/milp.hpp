#pragma once

#include <bhfs/core/constraints.hpp>
#include <bhfs/core/instance.hpp>
#include <bhfs/core/objectives.hpp>

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace bhfs {

enum class VarKind { Continuous, Binary };
enum class Sense { LessEqual, GreaterEqual, Equal };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lower = 0.0;
    std::optional<double> upper;  ///< none = +infinity; binaries are implicitly [0, 1]

    bool operator==(const Variable&) const = default;
};

struct Term {
    int var = 0;
    double coef = 0.0;

    bool operator==(const Term&) const = default;
};

struct Row {
    std::string name;
    Constraint family = Constraint::Assignment;
    std::vector<Term> terms;
    Sense sense = Sense::Equal;
    double rhs = 0.0;

    bool operator==(const Row&) const = default;
};

/// What to optimise. `primary` is minimised; optional bounds restrict the other objective.
/// With an upper bound and a positive `augmentation`, the bound is written as an equality with
/// a non-negative slack and the objective becomes `primary - augmentation * slack`.
struct ObjectiveSpec {
    Criterion primary = Criterion::Energy;
    std::optional<double> other_lower;
    std::optional<double> other_upper;
    double augmentation = 0.0;

    static ObjectiveSpec minimize(Criterion c) { return {c, {}, {}, 0.0}; }
};

/// Linear model of the blocking hybrid flow shop. Continuous variables are declared before
/// binaries; within each group the order is fixed by (family, job, stage, machine).
struct MilpModel {
    std::string instance_id;
    std::int64_t big_m = 0;
    std::vector<Variable> variables;
    std::vector<Row> rows;
    std::vector<Term> objective;  ///< minimised

    /// Index of a variable by name; throws InvalidInput when absent.
    int var(const std::string& name) const;
    std::optional<int> find_var(const std::string& name) const;

    /// Rebuilds the name index; needed after editing `variables` directly.
    void reindex();

    bool operator==(const MilpModel& other) const
    {
        return instance_id == other.instance_id && big_m == other.big_m &&
               variables == other.variables && rows == other.rows && objective == other.objective;
    }

private:
    std::unordered_map<std::string, int> index_;
};

/// Variable names: S_i_k, C_i_k, BT_i_k, BTM_i_k_m, Idle_k_m, LC_k_m, ES_k_m, Cmax, TEC, TBT,
/// Tidle, [eps_slack], X_i_k_m, Q_i_k_m, Z_i_j_k (0-based indices).
/// Row names: `<tag>_<indices>` with the tags of `constraint_tag`.
/// big-M = 1 + sum of all processing times.
MilpModel build_milp(const Instance& instance, const ObjectiveSpec& objective);

struct MilpSize {
    std::size_t continuous = 0;
    std::size_t binary = 0;
    std::size_t rows = 0;
};

/// Closed-form variable and row counts of `build_milp` without objective-bound rows.
MilpSize milp_size(int jobs, int stages, int total_machines);

}  // namespace bhfs
