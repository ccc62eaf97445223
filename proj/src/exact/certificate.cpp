#include <bhfs/exact/certificate.hpp>

#include <bhfs/core/error.hpp>
#include <bhfs/core/objectives.hpp>

#include <algorithm>
#include <cmath>

namespace bhfs {

namespace {

std::string name(std::string_view base, std::initializer_list<int> indices)
{
    std::string out(base);
    for (int i : indices) out += '_' + std::to_string(i);
    return out;
}

}  // namespace

std::vector<double> certificate_values(const MilpModel& model, const Instance& instance,
                                       const Schedule& schedule)
{
    const ObjectiveReport report = evaluate(instance, schedule);
    std::vector<double> v(model.variables.size(), 0.0);
    auto set = [&](const std::string& var, double value) { v[model.var(var)] = value; };

    const int n = instance.jobs();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < instance.stages(); ++k) {
            const int m = schedule.machine(i, k);
            if (m < 0) throw InvalidInput("certificate needs a complete schedule");
            set(name("S", {i, k}), static_cast<double>(schedule.start(i, k)));
            set(name("C", {i, k}), static_cast<double>(schedule.completion(i, k)));
            set(name("BT", {i, k}), static_cast<double>(schedule.block(i, k)));
            set(name("BTM", {i, k, m}), static_cast<double>(schedule.block(i, k)));
            set(name("X", {i, k, m}), 1.0);
        }
    for (int k = 0; k < instance.stages(); ++k)
        for (int m = 0; m < instance.machines(k); ++m) {
            const int flat = instance.machine_offset(k) + m;
            const auto& line = schedule.timelines[flat];
            const MachineStats& stats = report.machines[flat];
            if (!line.empty()) set(name("Q", {line.front().job, k, m}), 1.0);
            for (std::size_t a = 0; a < line.size(); ++a)
                for (std::size_t b = a + 1; b < line.size(); ++b)
                    set(name("Z", {line[a].job, line[b].job, k}), 1.0);
            set(name("ES", {k, m}), static_cast<double>(stats.earliest_start));
            set(name("LC", {k, m}), static_cast<double>(stats.latest_completion));
            set(name("Idle", {k, m}), static_cast<double>(stats.idle));
        }
    set("Cmax", static_cast<double>(report.cmax));
    set("TEC", static_cast<double>(report.tec));
    set("TBT", static_cast<double>(report.total_blocking));
    set("Tidle", static_cast<double>(report.total_idle));

    if (auto slack = model.find_var("eps_slack")) {
        auto row = std::find_if(model.rows.begin(), model.rows.end(),
                                [](const Row& r) { return r.name == "eps_upper"; });
        if (row != model.rows.end()) {
            double other = 0.0;
            for (const Term& t : row->terms)
                if (t.var != *slack) other += t.coef * v[t.var];
            v[*slack] = row->rhs - other;
        }
    }
    return v;
}

std::vector<std::string> violated_rows(const MilpModel& model, const std::vector<double>& values)
{
    if (values.size() != model.variables.size())
        throw InvalidInput("value vector does not match the model's variables");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Variable& var = model.variables[i];
        const double upper = var.kind == VarKind::Binary ? 1.0 : var.upper.value_or(HUGE_VAL);
        if (values[i] < var.lower || values[i] > upper) out.push_back("bound:" + var.name);
    }
    for (const Row& row : model.rows) {
        double lhs = 0.0;
        for (const Term& t : row.terms) lhs += t.coef * values[t.var];
        const bool ok = row.sense == Sense::LessEqual      ? lhs <= row.rhs
                        : row.sense == Sense::GreaterEqual ? lhs >= row.rhs
                                                           : lhs == row.rhs;
        if (!ok) out.push_back(row.name);
    }
    return out;
}

double objective_value(const MilpModel& model, const std::vector<double>& values)
{
    double z = 0.0;
    for (const Term& t : model.objective) z += t.coef * values[t.var];
    return z;
}

}  // namespace bhfs
