#pragma once

#include <bhfs/bench/experiment.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace bhfs {

struct ReportRow {
    std::string label;  ///< "n g m" for groups, "Average" for the last row
    int jobs = 0, stages = 0, machines = 0;
    std::vector<double> hv;  ///< per method, same order as ReportTable::methods
    std::vector<double> gd;
    std::vector<std::string> best_hv;  ///< methods attaining the maximum mean I_h
    std::vector<std::string> best_gd;  ///< methods attaining the minimum mean GD
};

struct ReportTable {
    std::vector<std::string> methods;  ///< sorted by name
    std::vector<ReportRow> rows;       ///< groups ascending by (n, g, m), then the average row
};

/// Means of I_h and GD per (n, g, m) group and method over instances and replications, with
/// best markers and a final row averaging the group means. Throws InvalidInput on empty input
/// or on an instance missing from `shapes`.
ReportTable build_report(const std::vector<MetricRow>& metrics, const std::map<std::string, InstanceShape>& shapes);

/// Columns: n,g,m,hv_<method>...,gd_<method>...,best_hv,best_gd (ties joined by '|').
void write_report_csv(std::ostream& os, const ReportTable& table);
void write_report_text(std::ostream& os, const ReportTable& table);

}  // namespace bhfs
