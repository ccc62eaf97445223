#include <bhfs/bench/report.hpp>

#include <bhfs/core/error.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

namespace bhfs {

namespace {

std::string join(const std::vector<std::string>& items, char sep)
{
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string number(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

void mark_best(ReportRow& row, const std::vector<std::string>& methods)
{
    const double hv = *std::max_element(row.hv.begin(), row.hv.end());
    const double gd = *std::min_element(row.gd.begin(), row.gd.end());
    for (std::size_t i = 0; i < methods.size(); ++i) {
        if (row.hv[i] == hv) row.best_hv.push_back(methods[i]);
        if (row.gd[i] == gd) row.best_gd.push_back(methods[i]);
    }
}

}  // namespace

ReportTable build_report(const std::vector<MetricRow>& metrics, const std::map<std::string, InstanceShape>& shapes)
{
    if (metrics.empty()) throw InvalidInput("report needs at least one metric row");
    ReportTable table;
    std::set<std::string> methods;
    using Key = std::tuple<int, int, int>;
    struct Sum {
        double hv = 0.0, gd = 0.0;
        int count = 0;
    };
    std::map<Key, std::map<std::string, Sum>> groups;
    for (const auto& r : metrics) {
        auto it = shapes.find(r.instance);
        if (it == shapes.end()) throw InvalidInput("no shape for instance " + r.instance);
        methods.insert(r.method);
        Sum& s = groups[{it->second.jobs, it->second.stages, it->second.machines}][r.method];
        s.hv += r.hv;
        s.gd += r.gd;
        ++s.count;
    }
    table.methods.assign(methods.begin(), methods.end());

    ReportRow average{"Average", 0, 0, 0, std::vector<double>(methods.size(), 0.0),
                      std::vector<double>(methods.size(), 0.0), {}, {}};
    std::vector<int> groups_with(methods.size(), 0);
    for (const auto& [key, per_method] : groups) {
        ReportRow row;
        std::tie(row.jobs, row.stages, row.machines) = key;
        row.label = std::to_string(row.jobs) + " " + std::to_string(row.stages) + " " + std::to_string(row.machines);
        std::vector<std::string> present;
        for (std::size_t i = 0; i < table.methods.size(); ++i) {
            auto it = per_method.find(table.methods[i]);
            if (it == per_method.end()) {
                row.hv.push_back(std::numeric_limits<double>::quiet_NaN());
                row.gd.push_back(std::numeric_limits<double>::quiet_NaN());
                continue;
            }
            row.hv.push_back(it->second.hv / it->second.count);
            row.gd.push_back(it->second.gd / it->second.count);
            average.hv[i] += row.hv.back();
            average.gd[i] += row.gd.back();
            ++groups_with[i];
        }
        // NaN never compares equal, so absent methods are never marked.
        const double hv = *std::max_element(row.hv.begin(), row.hv.end(),
                                            [](double a, double b) { return std::isnan(a) || (!std::isnan(b) && a < b); });
        const double gd = *std::min_element(row.gd.begin(), row.gd.end(),
                                            [](double a, double b) { return !std::isnan(a) && (std::isnan(b) || a < b); });
        for (std::size_t i = 0; i < table.methods.size(); ++i) {
            if (row.hv[i] == hv) row.best_hv.push_back(table.methods[i]);
            if (row.gd[i] == gd) row.best_gd.push_back(table.methods[i]);
        }
        table.rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < table.methods.size(); ++i) {
        average.hv[i] /= groups_with[i];
        average.gd[i] /= groups_with[i];
    }
    mark_best(average, table.methods);
    table.rows.push_back(std::move(average));
    return table;
}

void write_report_csv(std::ostream& os, const ReportTable& table)
{
    os << "n,g,m";
    for (const auto& m : table.methods) os << ",hv_" << m;
    for (const auto& m : table.methods) os << ",gd_" << m;
    os << ",best_hv,best_gd\n";
    for (const auto& row : table.rows) {
        if (row.label == "Average")
            os << "Average,,";
        else
            os << row.jobs << ',' << row.stages << ',' << row.machines;
        for (double v : row.hv) os << ',' << number(v);
        for (double v : row.gd) os << ',' << number(v);
        os << ',' << join(row.best_hv, '|') << ',' << join(row.best_gd, '|') << '\n';
    }
}

void write_report_text(std::ostream& os, const ReportTable& table)
{
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"n", "g", "m"};
    for (const auto& m : table.methods) header.push_back("I_h " + m);
    for (const auto& m : table.methods) header.push_back("GD " + m);
    cells.push_back(header);
    auto fixed = [](double v) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(4) << v;
        return s.str();
    };
    for (const auto& row : table.rows) {
        std::vector<std::string> line;
        if (row.label == "Average")
            line = {"Average", "", ""};
        else
            line = {std::to_string(row.jobs), std::to_string(row.stages), std::to_string(row.machines)};
        for (std::size_t i = 0; i < table.methods.size(); ++i) {
            const bool best = std::find(row.best_hv.begin(), row.best_hv.end(), table.methods[i]) != row.best_hv.end();
            line.push_back(fixed(row.hv[i]) + (best ? "*" : " "));
        }
        for (std::size_t i = 0; i < table.methods.size(); ++i) {
            const bool best = std::find(row.best_gd.begin(), row.best_gd.end(), table.methods[i]) != row.best_gd.end();
            line.push_back(fixed(row.gd[i]) + (best ? "*" : " "));
        }
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c)
            os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << line[c];
        os << '\n';
    }
    os << "* best value in the row (max I_h, min GD)\n";
}

}  // namespace bhfs
