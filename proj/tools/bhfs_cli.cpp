// Command-line front end: instance generation, single runs, experiments, reports, MILP export,
// epsilon-constraint sweeps, brute-force fronts and Gantt dumps.

#include <bhfs/bench/experiment.hpp>
#include <bhfs/bench/generator.hpp>
#include <bhfs/bench/report.hpp>
#include <bhfs/core/error.hpp>
#include <bhfs/core/gantt.hpp>
#include <bhfs/core/instance_io.hpp>
#include <bhfs/exact/epsilon.hpp>
#include <bhfs/exact/lp_format.hpp>
#include <bhfs/exact/oracle.hpp>
#include <bhfs/pareto/front_io.hpp>
#include <bhfs/ripg/neh.hpp>
#include <bhfs/ripg/trace.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bhfs;

namespace {

struct SearchOptions {
    std::string method = "ripg";
    int d = 3;
    int loop_size = 10;
    std::int64_t budget_ms = 1000;
    std::uint64_t seed = 0;
    std::uint64_t iter_cap = 0;
    bool use_cap = false;
    int population = 50;
    double pc = 0.9;
    double pm = 0.2;
};

void add_search_options(CLI::App* cmd, SearchOptions& o)
{
    cmd->add_option("--d", o.d, "destruction size")->capture_default_str();
    cmd->add_option("--loop-size", o.loop_size, "refining loops per solution")->capture_default_str();
    cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
    cmd->add_option("--iter-cap", o.iter_cap, "stop after this many iterations instead of the clock")
        ->each([&o](const std::string&) { o.use_cap = true; });
    cmd->add_option("--population", o.population, "NSGA-II population size")->capture_default_str();
    cmd->add_option("--crossover-prob", o.pc, "NSGA-II crossover probability")->capture_default_str();
    cmd->add_option("--mutation-prob", o.pm, "NSGA-II mutation probability")->capture_default_str();
}

std::optional<std::uint64_t> cap_of(const SearchOptions& o)
{
    return o.use_cap ? std::optional<std::uint64_t>(o.iter_cap) : std::nullopt;
}

void apply(const SearchOptions& o, ExperimentPlan& plan)
{
    plan.ripg.destruction_size = o.d;
    plan.ripg.loop_size = o.loop_size;
    plan.moig.destruction_size = o.d;
    plan.nsga2.population_size = o.population;
    plan.nsga2.crossover_prob = o.pc;
    plan.nsga2.mutation_prob = o.pm;
    plan.iteration_cap = cap_of(o);
}

RunResult solve(const Instance& instance, const SearchOptions& o, TraceOptions trace)
{
    switch (parse_method(o.method)) {
    case Method::Ripg:
        return run_ripg(instance, {o.d, o.loop_size, o.budget_ms, o.seed, cap_of(o), trace});
    case Method::Nsga2: {
        Nsga2Config c;
        c.population_size = o.population;
        c.crossover_prob = o.pc;
        c.mutation_prob = o.pm;
        c.time_budget_ms = o.budget_ms;
        c.rng_seed = o.seed;
        c.iteration_cap = cap_of(o);
        c.trace = trace;
        return run_nsga2(instance, c);
    }
    case Method::Moig:
        return run_moig(instance, {o.d, o.budget_ms, o.seed, cap_of(o), trace});
    }
    throw InvalidConfig("unknown method");
}

Criterion parse_criterion(const std::string& s)
{
    if (s == "cmax") return Criterion::Makespan;
    if (s == "tec") return Criterion::Energy;
    throw InvalidConfig("objective must be cmax or tec, got '" + s + "'");
}

Permutation parse_perm(const std::string& text)
{
    Permutation p;
    std::stringstream ss(text);
    for (std::string cell; std::getline(ss, cell, ',');) p.push_back(std::stoi(cell));
    return p;
}

void print_front(const std::vector<ObjectiveVector>& front, const std::string& path)
{
    if (path.empty() || path == "-")
        write_front_csv(std::cout, front);
    else
        save_front_csv(path, front);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bi-objective blocking hybrid flow shop scheduling"};
    app.set_config("--config", "", "read options from a TOML/INI file");
    app.require_subcommand(1);

    // generate
    std::string gen_out = "instances";
    std::uint64_t gen_seed = kDefaultMasterSeed;
    auto* gen = app.add_subcommand("generate", "write the 54 test and 27 calibration instances");
    gen->add_option("--out", gen_out, "output directory")->capture_default_str();
    gen->add_option("--seed", gen_seed, "master seed")->capture_default_str();

    // solve
    SearchOptions so;
    std::string solve_instance, solve_front, solve_trace;
    std::uint64_t trace_interval = 1;
    auto* solve_cmd = app.add_subcommand("solve", "run one method on one instance");
    solve_cmd->add_option("--instance", solve_instance, "instance file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--method", so.method, "ripg | nsga2 | moig")->capture_default_str();
    solve_cmd->add_option("--budget-ms", so.budget_ms, "wall-clock budget")->capture_default_str();
    add_search_options(solve_cmd, so);
    solve_cmd->add_option("--front", solve_front, "front CSV (default: stdout)");
    solve_cmd->add_option("--trace", solve_trace, "trace JSON-lines file");
    solve_cmd->add_option("--trace-interval", trace_interval, "snapshot every k iterations")->capture_default_str();

    // experiment
    SearchOptions eo;
    eo.seed = kDefaultMasterSeed;
    std::string exp_instances, exp_out = "results", exp_methods = "ripg,nsga2,moig", exp_eps;
    int exp_reps = 10, exp_workers = 1, exp_max_jobs = 0;
    std::int64_t exp_factor = 200;
    bool exp_no_traces = false;
    auto* exp = app.add_subcommand("experiment", "run every method on every instance");
    exp->add_option("--instances", exp_instances, "directory of instance files")->required()->check(CLI::ExistingDirectory);
    exp->add_option("--out", exp_out, "output directory")->capture_default_str();
    exp->add_option("--methods", exp_methods, "comma-separated methods")->capture_default_str();
    exp->add_option("--reps", exp_reps, "replications")->capture_default_str();
    exp->add_option("--workers", exp_workers, "parallel runs")->capture_default_str();
    exp->add_option("--budget-factor-ms", exp_factor, "budget = n * g * factor")->capture_default_str();
    exp->add_option("--max-jobs", exp_max_jobs, "skip instances with more jobs (0 = keep all)");
    exp->add_option("--epsilon-fronts", exp_eps, "directory of <instance>.csv fronts added to the reference");
    exp->add_flag("--no-traces", exp_no_traces, "do not write trace files");
    add_search_options(exp, eo);
    exp->get_option("--seed")->description("master seed");

    // report
    std::string rep_results = "results", rep_csv;
    auto* rep = app.add_subcommand("report", "group means by (n, g, m) with best markers");
    rep->add_option("--results", rep_results, "experiment output directory")->capture_default_str();
    rep->add_option("--csv", rep_csv, "also write the table as CSV");

    // export-milp
    std::string mx_instance, mx_out = "-", mx_objective = "tec";
    auto* mx = app.add_subcommand("export-milp", "write the MILP model in LP format");
    mx->add_option("--instance", mx_instance, "instance file")->required()->check(CLI::ExistingFile);
    mx->add_option("--out", mx_out, "LP file (default: stdout)");
    mx->add_option("--objective", mx_objective, "cmax | tec")->capture_default_str();

    // epsilon-run
    EpsilonConfig ec;
    std::string eps_instance, eps_front, eps_primary = "cmax", eps_solver, eps_dir = "epsilon";
    auto* eps = app.add_subcommand("epsilon-run", "augmented epsilon-constraint sweep");
    eps->add_option("--instance", eps_instance, "instance file")->required()->check(CLI::ExistingFile);
    eps->add_option("--cells", ec.cells, "grid cells")->capture_default_str();
    eps->add_option("--cell-timeout-ms", ec.cell_timeout_ms, "solver limit per cell")->capture_default_str();
    eps->add_option("--payoff-timeout-ms", ec.payoff_timeout_ms, "solver limit per payoff solve")->capture_default_str();
    eps->add_option("--solver-cmd", eps_solver, "command with {lp} and {sol} placeholders");
    eps->add_option("--primary", eps_primary, "minimised objective: cmax | tec")->capture_default_str();
    eps->add_option("--work-dir", eps_dir, "directory for LP and solution files")->capture_default_str();
    eps->add_option("--front", eps_front, "front CSV (default: stdout)");

    // oracle
    std::string or_instance, or_mode = "permutation", or_front;
    std::uint64_t or_cap = 50'000'000;
    auto* orc = app.add_subcommand("oracle", "brute-force front of a small instance");
    orc->add_option("--instance", or_instance, "instance file")->required()->check(CLI::ExistingFile);
    orc->add_option("--mode", or_mode, "permutation | full")->capture_default_str();
    orc->add_option("--cap", or_cap, "refuse larger search spaces")->capture_default_str();
    orc->add_option("--front", or_front, "front CSV (default: stdout)");

    // gantt
    std::string gt_instance, gt_perm, gt_neh, gt_out;
    auto* gt = app.add_subcommand("gantt", "dump the decoded schedule of a sequence");
    gt->add_option("--instance", gt_instance, "instance file")->required()->check(CLI::ExistingFile);
    auto* perm_opt = gt->add_option("--perm", gt_perm, "comma-separated job order");
    gt->add_option("--neh", gt_neh, "use the NEH sequence for cmax | tec")->excludes(perm_opt);
    gt->add_option("--out", gt_out, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const auto files = write_benchmark(generate_benchmark(gen_seed), gen_out);
            std::cout << "wrote " << files.size() << " instances under " << gen_out << '\n';
        } else if (*solve_cmd) {
            const Instance instance = load_instance(solve_instance);
            RunResult r = solve(instance, so, {trace_interval, false});
            print_front(r.archive.sorted_points(), solve_front);
            if (!solve_trace.empty()) save_trace_jsonl(solve_trace, r.trace);
            std::cerr << so.method << ": " << r.trace.iterations << " iterations, " << r.trace.evaluations
                      << " evaluations, " << r.archive.size() << " points, " << r.trace.elapsed_ms << " ms\n";
        } else if (*exp) {
            ExperimentPlan plan;
            for (auto& inst : load_instances(exp_instances))
                if (exp_max_jobs <= 0 || inst.jobs() <= exp_max_jobs) plan.instances.push_back(std::move(inst));
            plan.methods.clear();
            std::stringstream ms(exp_methods);
            for (std::string m; std::getline(ms, m, ',');) plan.methods.push_back(parse_method(m));
            plan.replications = exp_reps;
            plan.workers = exp_workers;
            plan.budget_factor_ms = exp_factor;
            plan.master_seed = eo.seed;
            plan.output_dir = exp_out;
            plan.write_traces = !exp_no_traces;
            apply(eo, plan);
            if (!exp_eps.empty())
                for (const auto& inst : plan.instances) {
                    const auto f = std::filesystem::path(exp_eps) / (inst.id() + ".csv");
                    if (std::filesystem::exists(f)) plan.extra_fronts[inst.id()] = load_front_csv(f);
                }
            const auto results = run_experiment(plan);
            std::size_t failed = 0;
            for (const auto& r : results.runs)
                if (r.error) {
                    ++failed;
                    std::cerr << "run failed: " << r.instance << ' ' << to_string(r.method) << ' ' << r.rep << ": "
                              << *r.error << '\n';
                }
            std::cout << results.runs.size() << " runs, " << failed << " failed; results in " << exp_out << '\n';
            write_report_text(std::cout, build_report(results.metrics, results.shapes));
        } else if (*rep) {
            const std::filesystem::path dir = rep_results;
            const auto table = build_report(load_metrics_csv(dir / "metrics.csv"), load_shapes_csv(dir / "instances.csv"));
            write_report_text(std::cout, table);
            if (!rep_csv.empty()) {
                std::ofstream out(rep_csv);
                write_report_csv(out, table);
            }
        } else if (*mx) {
            const auto model = build_milp(load_instance(mx_instance), ObjectiveSpec::minimize(parse_criterion(mx_objective)));
            if (mx_out == "-")
                write_lp(std::cout, model);
            else
                save_lp(mx_out, model);
        } else if (*eps) {
            ec.primary = parse_criterion(eps_primary);
            ec.work_dir = eps_dir;
            if (!eps_solver.empty()) ec.solver_cmd = eps_solver;
            const auto result = run_epsilon(load_instance(eps_instance), ec);
            std::cerr << "range [" << result.range_low << ", " << result.range_high << "], payoff "
                      << (result.payoff_solved ? "solved" : "not solved") << ", " << result.lp_files.size()
                      << " LP files in " << eps_dir << '\n';
            for (const auto& c : result.cells)
                std::cerr << "cell " << c.index << " [" << c.lower << ", " << c.upper << "] " << to_string(c.status)
                          << '\n';
            print_front(result.front, eps_front);
        } else if (*orc) {
            const auto mode = or_mode == "full" ? OracleMode::Full : OracleMode::Permutation;
            if (or_mode != "full" && or_mode != "permutation") throw InvalidConfig("mode must be permutation or full");
            const auto result = exhaustive_front(load_instance(or_instance), mode, or_cap);
            std::cerr << result.enumerated << " candidates, " << result.deadlocked << " deadlocked\n";
            print_front(result.front, or_front);
        } else if (*gt) {
            const Instance instance = load_instance(gt_instance);
            Permutation perm = !gt_neh.empty() ? (parse_criterion(gt_neh) == Criterion::Makespan ? neh_makespan(instance)
                                                                                                 : neh_tec(instance))
                               : !gt_perm.empty() ? parse_perm(gt_perm)
                                                  : identity_permutation(instance.jobs());
            const Schedule schedule = decode(instance, perm);
            if (gt_out.empty()) {
                write_gantt(std::cout, instance, schedule);
            } else {
                std::ofstream out(gt_out);
                write_gantt(out, instance, schedule);
            }
            const auto report = evaluate(instance, schedule);
            std::cerr << "Cmax " << report.cmax << " TEC " << report.tec << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
