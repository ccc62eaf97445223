#include <bhfs/exact/epsilon.hpp>

#include <bhfs/core/error.hpp>
#include <bhfs/exact/lp_format.hpp>
#include <bhfs/pareto/archive.hpp>
#include <bhfs/ripg/neh.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>

namespace bhfs {

void EpsilonConfig::validate() const
{
    if (cells < 1) throw InvalidConfig("epsilon grid needs at least one cell");
    if (cell_timeout_ms <= 0 || payoff_timeout_ms <= 0) throw InvalidConfig("solver timeouts must be positive");
    if (solver_cmd && solver_cmd->empty()) throw InvalidConfig("empty solver command");
}

const char* to_string(CellStatus status)
{
    switch (status) {
    case CellStatus::Solved: return "solved";
    case CellStatus::Unsolved: return "unsolved";
    case CellStatus::Empty: return "empty";
    case CellStatus::NotRun: return "not-run";
    }
    return "?";
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a / b + (a % b != 0 && (a < 0) == (b < 0)); }

std::int64_t pick(const ObjectiveVector& v, Criterion c) { return c == Criterion::Makespan ? v.cmax : v.tec; }

Criterion other(Criterion c) { return c == Criterion::Makespan ? Criterion::Energy : Criterion::Makespan; }

std::string shell_quote(const std::string& s)
{
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    return out + "'";
}

std::string replace_all(std::string s, const std::string& from, const std::string& to)
{
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
        s.replace(pos, from.size(), to);
    return s;
}

class Solver {
public:
    Solver(std::string command, std::filesystem::path dir) : command_(std::move(command)), dir_(std::move(dir)) {}

    std::optional<ObjectiveVector> solve(const Instance& instance, const std::filesystem::path& lp,
                                         std::int64_t timeout_ms) const
    {
        auto sol = lp;
        sol.replace_extension(".sol");
        std::filesystem::remove(sol);
        std::string cmd = command_;
        if (cmd.find("{lp}") == std::string::npos && cmd.find("{sol}") == std::string::npos)
            cmd += " {lp} {sol}";
        cmd = replace_all(cmd, "{lp}", shell_quote(lp.string()));
        cmd = replace_all(cmd, "{sol}", shell_quote(sol.string()));
        const double seconds = static_cast<double>(timeout_ms) / 1000.0;
        const std::string full = "timeout -k 5 " + std::to_string(seconds) + " sh -c " + shell_quote(cmd) +
                                 " > " + shell_quote((dir_ / "solver.log").string()) + " 2>&1";
        if (std::system(full.c_str()) != 0) return std::nullopt;
        std::ifstream in(sol);
        if (!in) return std::nullopt;
        return objectives_from_solution(instance, read_solution(in));
    }

private:
    std::string command_;
    std::filesystem::path dir_;
};

}  // namespace

std::vector<EpsilonCell> epsilon_cells(std::int64_t low, std::int64_t high, int cells)
{
    if (cells < 1) throw InvalidConfig("epsilon grid needs at least one cell");
    if (high < low) throw InvalidInput("epsilon grid range is empty");
    const std::int64_t width = high - low;
    std::vector<EpsilonCell> out(cells);
    for (int c = 0; c < cells; ++c) {
        out[c].index = c;
        out[c].lower = low + ceil_div(c * width, cells);
        out[c].upper = c + 1 == cells ? high : low + ceil_div((c + 1) * width, cells) - 1;
    }
    return out;
}

double augmentation_weight(std::int64_t range) { return 1e-3 / static_cast<double>(std::max<std::int64_t>(range, 1)); }

std::optional<ObjectiveVector> objectives_from_solution(const Instance& instance,
                                                        const std::map<std::string, double>& values)
{
    auto value = [&](const std::string& name) -> std::optional<double> {
        auto it = values.find(name);
        if (it == values.end()) return std::nullopt;
        return it->second;
    };
    const int n = instance.jobs(), stages = instance.stages();
    Schedule s{Matrix<Time>(n, stages), Matrix<Time>(n, stages), Matrix<Time>(n, stages), Matrix<int>(n, stages, -1),
               std::vector<std::vector<Occupation>>(instance.total_machines())};
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < stages; ++k) {
            const std::string ik = "_" + std::to_string(i) + "_" + std::to_string(k);
            auto start = value("S" + ik), completion = value("C" + ik);
            if (!start || !completion) return std::nullopt;
            s.start(i, k) = std::llround(*start);
            s.completion(i, k) = std::llround(*completion);
            s.block(i, k) = s.completion(i, k) - s.start(i, k) - instance.proc(i, k);
            double best = -1.0;
            for (int m = 0; m < instance.machines(k); ++m) {
                const double x = value("X" + ik + "_" + std::to_string(m)).value_or(0.0);
                if (x > best) {
                    best = x;
                    s.machine(i, k) = m;
                }
            }
            if (best < 0.5) return std::nullopt;
            s.timelines[instance.machine_offset(k) + s.machine(i, k)].push_back({i, s.start(i, k), s.completion(i, k)});
        }
    for (auto& line : s.timelines)
        std::sort(line.begin(), line.end(),
                  [](const Occupation& a, const Occupation& b) { return std::tie(a.start, a.end) < std::tie(b.start, b.end); });
    try {
        return evaluate(instance, s).objectives();
    } catch (const InconsistentSchedule&) {
        return std::nullopt;
    }
}

EpsilonResult run_epsilon(const Instance& instance, const EpsilonConfig& config)
{
    config.validate();
    std::filesystem::create_directories(config.work_dir);
    const Criterion primary = config.primary;
    const Criterion bounded = other(primary);
    EpsilonResult result;
    std::optional<Solver> solver;
    if (config.solver_cmd) solver.emplace(*config.solver_cmd, config.work_dir);

    auto emit = [&](const std::string& file, const ObjectiveSpec& spec) {
        const auto path = config.work_dir / file;
        save_lp(path, build_milp(instance, spec));
        result.lp_files.push_back(path);
        return path;
    };

    // Lexicographic payoff: each objective at its optimum, then the other one under it.
    const auto cmax_lp = emit("payoff_cmax.lp", ObjectiveSpec::minimize(Criterion::Makespan));
    const auto tec_lp = emit("payoff_tec.lp", ObjectiveSpec::minimize(Criterion::Energy));
    if (solver) {
        auto best_cmax = solver->solve(instance, cmax_lp, config.payoff_timeout_ms);
        auto best_tec = solver->solve(instance, tec_lp, config.payoff_timeout_ms);
        if (best_cmax && best_tec) {
            ObjectiveSpec lex_c{Criterion::Energy, {}, static_cast<double>(best_cmax->cmax), 0.0};
            ObjectiveSpec lex_t{Criterion::Makespan, {}, static_cast<double>(best_tec->tec), 0.0};
            auto a = solver->solve(instance, emit("payoff_cmax_lex.lp", lex_c), config.payoff_timeout_ms);
            auto b = solver->solve(instance, emit("payoff_tec_lex.lp", lex_t), config.payoff_timeout_ms);
            if (a && b) {
                result.payoff_solved = true;
                result.payoff = {*a, *b};
                const auto& at_primary_opt = primary == Criterion::Makespan ? *a : *b;
                const auto& at_bounded_opt = primary == Criterion::Makespan ? *b : *a;
                result.range_low = pick(at_bounded_opt, bounded);
                result.range_high = pick(at_primary_opt, bounded);
            }
        }
    }
    if (!result.payoff_solved) {
        const LowerBounds lb = lower_bounds(instance);
        result.range_low = bounded == Criterion::Makespan ? lb.cmax : lb.tec;
        const ObjectiveVector seeds[] = {evaluate_sequence(instance, neh_makespan(instance)),
                                         evaluate_sequence(instance, neh_tec(instance))};
        result.range_high = std::max(pick(seeds[0], bounded), pick(seeds[1], bounded));
    }

    const double delta = augmentation_weight(result.range_high - result.range_low);
    result.cells = epsilon_cells(result.range_low, result.range_high, config.cells);
    std::vector<ObjectiveVector> points = result.payoff;
    for (auto& cell : result.cells) {
        ObjectiveSpec spec{primary, static_cast<double>(cell.lower), static_cast<double>(cell.upper), delta};
        cell.lp_file = emit("cell_" + std::string(cell.index < 10 ? "0" : "") + std::to_string(cell.index) + ".lp", spec);
        if (cell.lower > cell.upper) {
            cell.status = CellStatus::Empty;
            continue;
        }
        if (!solver) continue;
        cell.point = solver->solve(instance, cell.lp_file, config.cell_timeout_ms);
        cell.status = cell.point ? CellStatus::Solved : CellStatus::Unsolved;
        if (cell.point) points.push_back(*cell.point);
    }
    result.front = nondominated(std::span<const ObjectiveVector>(points));
    std::sort(result.front.begin(), result.front.end());
    return result;
}

}  // namespace bhfs
