#pragma once

#include <bhfs/baselines/moig.hpp>
#include <bhfs/baselines/nsga2.hpp>
#include <bhfs/ripg/run.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bhfs {

enum class Method { Ripg, Nsga2, Moig };

const char* to_string(Method method);
Method parse_method(std::string_view name);

struct ExperimentPlan {
    std::vector<Instance> instances;
    std::vector<Method> methods{Method::Ripg, Method::Nsga2, Method::Moig};
    /// Parameter templates; seed, budget and cap are set per run.
    RipgConfig ripg;
    Nsga2Config nsga2;
    MoigConfig moig;
    int replications = 10;
    std::uint64_t master_seed = 0;
    std::int64_t budget_factor_ms = 200;  ///< budget = n * stages * factor
    std::optional<std::uint64_t> iteration_cap;
    int workers = 1;
    bool write_traces = true;
    std::filesystem::path output_dir = "results";
    /// Extra fronts per instance id (e.g. epsilon-constraint output) added to the reference.
    std::map<std::string, std::vector<ObjectiveVector>> extra_fronts;

    void validate() const;
    std::int64_t budget_ms(const Instance& instance) const;
};

/// Seed of one (instance, method, replication) run.
std::uint64_t run_seed(std::uint64_t master_seed, const std::string& instance_id, Method method, int rep);

struct RunRecord {
    std::string instance;
    Method method = Method::Ripg;
    int rep = 0;
    std::uint64_t seed = 0;
    std::int64_t budget_ms = 0;
    double elapsed_ms = 0.0;
    std::uint64_t iterations = 0;
    std::uint64_t evaluations = 0;
    std::vector<ObjectiveVector> front;
    std::optional<std::string> error;
};

struct MetricRow {
    std::string instance;
    std::string method;
    int rep = 0;
    double hv = 0.0;
    double gd = 0.0;
};

struct InstanceShape {
    int jobs = 0;
    int stages = 0;
    int machines = 0;  ///< machines at stage 0
};

struct ExperimentResults {
    std::vector<RunRecord> runs;  ///< plan order: instance, method, rep
    std::vector<MetricRow> metrics;
    std::map<std::string, std::vector<ObjectiveVector>> reference;
    std::map<std::string, InstanceShape> shapes;
};

/// Runs every (instance, method, rep) on `workers` threads and writes under `output_dir`:
/// fronts/<instance>/<method>_rep<r>.csv, traces/<instance>/<method>_rep<r>.jsonl,
/// reference/<instance>.csv, runs.csv, metrics.csv and instances.csv.
ExperimentResults run_experiment(const ExperimentPlan& plan);

/// I_h and GD of each front against the union reference of its instance (plus `extra`).
/// `fronts` maps instance id -> (method name, rep, front).
struct StoredFront {
    std::string method;
    int rep = 0;
    std::vector<ObjectiveVector> front;
};
std::vector<MetricRow> compute_metrics(const std::map<std::string, std::vector<StoredFront>>& fronts,
                                       const std::map<std::string, std::vector<ObjectiveVector>>& extra,
                                       std::map<std::string, std::vector<ObjectiveVector>>* reference = nullptr);

/// Reads the fronts/ tree written by run_experiment.
std::map<std::string, std::vector<StoredFront>> load_fronts(const std::filesystem::path& output_dir);

void write_metrics_csv(std::ostream& os, const std::vector<MetricRow>& rows);
std::vector<MetricRow> read_metrics_csv(std::istream& is);
std::vector<MetricRow> load_metrics_csv(const std::filesystem::path& path);

void write_shapes_csv(std::ostream& os, const std::map<std::string, InstanceShape>& shapes);
std::map<std::string, InstanceShape> load_shapes_csv(const std::filesystem::path& path);

}  // namespace bhfs
