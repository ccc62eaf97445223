#include <doctest.h>

#include "oracles/oracles.hpp"

#include <bhfs/bench/experiment.hpp>
#include <bhfs/bench/generator.hpp>
#include <bhfs/bench/report.hpp>
#include <bhfs/core/error.hpp>
#include <bhfs/pareto/front_io.hpp>
#include <bhfs/pareto/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

using namespace bhfs;
namespace fs = std::filesystem;

namespace {

bool same(const Instance& a, const Instance& b)
{
    return a.id() == b.id() && a.machines_per_stage() == b.machines_per_stage() && a.proc_time() == b.proc_time() &&
           a.energy_proc() == b.energy_proc() && a.energy_idle() == b.energy_idle() &&
           a.energy_block() == b.energy_block();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("bhfs_test_" + name))
    {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

ExperimentPlan tiny_plan(const fs::path& out)
{
    ExperimentPlan plan;
    plan.instances.push_back(generate_instance({"a", 6, 2, 2, {1, 99}, {1, 3}, {5, 7}, {3, 5}, 11}));
    plan.instances.push_back(generate_instance({"b", 8, 3, 2, {1, 99}, {1, 3}, {5, 7}, {3, 5}, 12}));
    plan.replications = 2;
    plan.iteration_cap = 20;
    plan.master_seed = 99;
    plan.output_dir = out;
    return plan;
}

}  // namespace

TEST_CASE("seed derivation")
{
    CHECK(derive_seed(1, {"a"}) == derive_seed(1, {"a"}));
    CHECK(derive_seed(1, {"a"}) != derive_seed(2, {"a"}));
    CHECK(derive_seed(1, {"ab", "c"}) != derive_seed(1, {"a", "bc"}));
    std::set<std::uint64_t> seen;
    for (int r = 0; r < 10; ++r)
        for (Method m : {Method::Ripg, Method::Nsga2, Method::Moig}) seen.insert(run_seed(5, "n6_g2_m2", m, r));
    CHECK(seen.size() == 30);
}

TEST_CASE("instance generator")
{
    const GeneratorSpec spec{"x", 30, 4, 3, {1, 99}, {1, 3}, {5, 7}, {3, 5}, 1234};
    const Instance a = generate_instance(spec), b = generate_instance(spec);
    CHECK(same(a, b));
    CHECK(a.jobs() == 30);
    CHECK(a.machines_per_stage() == std::vector<int>{3, 3, 3, 3});
    std::set<Time> values;
    for (int i = 0; i < 30; ++i)
        for (int k = 0; k < 4; ++k) {
            CHECK(a.proc(i, k) >= 1);
            CHECK(a.proc(i, k) <= 99);
            values.insert(a.proc(i, k));
        }
    CHECK(values.size() > 40);
    for (int k = 0; k < 4; ++k) {
        CHECK((a.energy_proc()[k] >= 1 && a.energy_proc()[k] <= 3));
        CHECK((a.energy_block()[k] >= 5 && a.energy_block()[k] <= 7));
        CHECK((a.energy_idle()[k] >= 3 && a.energy_idle()[k] <= 5));
    }
    auto other = spec;
    other.seed = 1235;
    CHECK_FALSE(same(a, generate_instance(other)));
    other = spec;
    other.proc = {5, 2};
    CHECK_THROWS_AS(generate_instance(other), InvalidConfig);
}

TEST_CASE("benchmark layout")
{
    const Benchmark bm = generate_benchmark(kDefaultMasterSeed);
    REQUIRE(bm.test.size() == 54);
    REQUIRE(bm.calibration.size() == 27);
    std::set<std::string> ids;
    std::set<std::tuple<int, int, int>> classes;
    for (const auto& inst : bm.test) {
        ids.insert(inst.id());
        const int m = inst.machines_per_stage().front();
        classes.emplace(inst.jobs(), inst.stages(), m);
        CHECK(inst.id() == "n" + std::to_string(inst.jobs()) + "_g" + std::to_string(inst.stages()) + "_m" +
                               std::to_string(m));
    }
    CHECK(classes.size() == 54);
    std::set<std::pair<int, int>> cal;
    for (const auto& inst : bm.calibration) {
        ids.insert(inst.id());
        cal.emplace(inst.jobs(), inst.stages());
        const int m = inst.machines_per_stage().front();
        CHECK((m == 2 || m == 3));
    }
    CHECK(cal.size() == 27);
    CHECK(ids.size() == 81);

    const Benchmark again = generate_benchmark(kDefaultMasterSeed);
    for (std::size_t i = 0; i < 54; ++i) CHECK(same(bm.test[i], again.test[i]));
    // Calibration data must differ from the test data of the same class.
    const Benchmark other = generate_benchmark(kDefaultMasterSeed + 1);
    CHECK_FALSE(same(bm.test[0], other.test[0]));

    TempDir dir("bench_files");
    const auto written = write_benchmark(bm, dir.path);
    CHECK(written.size() == 81);
    const auto loaded = load_instances(dir.path / "test");
    REQUIRE(loaded.size() == 54);
    for (const auto& inst : loaded) {
        const auto it = std::find_if(bm.test.begin(), bm.test.end(), [&](const Instance& x) { return x.id() == inst.id(); });
        REQUIRE(it != bm.test.end());
        CHECK(same(*it, inst));
    }
}

TEST_CASE("plan validation")
{
    ExperimentPlan plan;
    CHECK_THROWS_AS(plan.validate(), InvalidConfig);
    plan = tiny_plan("unused");
    plan.replications = 0;
    CHECK_THROWS_AS(plan.validate(), InvalidConfig);
    plan = tiny_plan("unused");
    plan.workers = 0;
    CHECK_THROWS_AS(plan.validate(), InvalidConfig);
    plan = tiny_plan("unused");
    CHECK(plan.budget_ms(plan.instances[1]) == 8 * 3 * 200);
    CHECK(parse_method("ripg") == Method::Ripg);
    CHECK(parse_method("nsga2") == Method::Nsga2);
    CHECK(parse_method("moig") == Method::Moig);
    CHECK_THROWS_AS(parse_method("sa"), InvalidConfig);
}

TEST_CASE("single run experiment")
{
    TempDir dir("one_run");
    ExperimentPlan plan = tiny_plan(dir.path);
    plan.instances.pop_back();
    plan.methods = {Method::Ripg};
    plan.replications = 1;
    const auto r = run_experiment(plan);
    REQUIRE(r.runs.size() == 1);
    REQUIRE(r.metrics.size() == 1);
    CHECK_FALSE(r.runs[0].error.has_value());
    CHECK(r.runs[0].seed == run_seed(99, "a", Method::Ripg, 0));
    // The run is its own reference, so its HV is that of the reference front.
    const NormalizationContext ctx = NormalizationContext::from_points(r.runs[0].front);
    CHECK(r.metrics[0].hv == doctest::Approx(oracle::hv_rectangles(r.reference.at("a"), ctx)).epsilon(1e-12));
    CHECK(r.metrics[0].gd == 0.0);
    CHECK(fs::exists(dir.path / "fronts" / "a" / "ripg_rep0.csv"));
    CHECK(fs::exists(dir.path / "traces" / "a" / "ripg_rep0.jsonl"));
    CHECK(fs::exists(dir.path / "metrics.csv"));
    CHECK(fs::exists(dir.path / "runs.csv"));
    CHECK(fs::exists(dir.path / "reference" / "a.csv"));
}

TEST_CASE("experiment outputs are reproducible and recomputable")
{
    TempDir one("exp_a"), two("exp_b");
    auto plan = tiny_plan(one.path);
    plan.workers = 2;
    const auto a = run_experiment(plan);
    plan.output_dir = two.path;
    plan.workers = 1;
    const auto b = run_experiment(plan);
    REQUIRE(a.runs.size() == 12);
    for (std::size_t i = 0; i < a.runs.size(); ++i) {
        CHECK(a.runs[i].front == b.runs[i].front);
        CHECK(a.runs[i].instance == b.runs[i].instance);
        CHECK(a.runs[i].rep == b.runs[i].rep);
    }
    for (const auto& entry : fs::recursive_directory_iterator(one.path / "fronts")) {
        if (!entry.is_regular_file()) continue;
        const auto rel = fs::relative(entry.path(), one.path);
        CHECK(fs::file_size(entry.path()) == fs::file_size(two.path / rel));
        CHECK(load_front_csv(entry.path()) == load_front_csv(two.path / rel));
    }

    // The reference front is the non-dominated union of every run.
    for (const auto& [id, ref] : a.reference) {
        std::vector<ObjectiveVector> all;
        for (const auto& run : a.runs)
            if (run.instance == id) all.insert(all.end(), run.front.begin(), run.front.end());
        auto expected = oracle::pairwise_filter(all);
        std::sort(expected.begin(), expected.end());
        CHECK(ref == expected);
    }

    // Offline recomputation from the files on disk gives the inline values.
    const auto loaded = load_fronts(one.path);
    auto offline = compute_metrics(loaded, {});
    auto inline_rows = load_metrics_csv(one.path / "metrics.csv");
    auto key = [](const MetricRow& m) { return std::tie(m.instance, m.method, m.rep); };
    auto by_key = [&](const MetricRow& x, const MetricRow& y) { return key(x) < key(y); };
    std::sort(offline.begin(), offline.end(), by_key);
    std::sort(inline_rows.begin(), inline_rows.end(), by_key);
    REQUIRE(offline.size() == inline_rows.size());
    for (std::size_t i = 0; i < offline.size(); ++i) {
        CHECK(key(offline[i]) == key(inline_rows[i]));
        CHECK(offline[i].hv == inline_rows[i].hv);
        CHECK(offline[i].gd == inline_rows[i].gd);
    }

    // And they agree with the independent metric oracles.
    for (const auto& row : a.metrics) {
        const auto& ref = a.reference.at(row.instance);
        const auto run = std::find_if(a.runs.begin(), a.runs.end(), [&](const RunRecord& r) {
            return r.instance == row.instance && to_string(r.method) == row.method && r.rep == row.rep;
        });
        REQUIRE(run != a.runs.end());
        std::vector<std::vector<ObjectiveVector>> fronts;
        for (const auto& r : a.runs)
            if (r.instance == row.instance) fronts.push_back(r.front);
        const auto ctx = NormalizationContext::from_fronts(fronts);
        CHECK(row.hv == doctest::Approx(oracle::hv_rectangles(run->front, ctx)).epsilon(1e-9));
        CHECK(row.hv <= oracle::hv_rectangles(ref, ctx) + 1e-12);
        CHECK(row.gd == doctest::Approx(oracle::gd_pairwise(run->front, ref, ctx)).epsilon(1e-9));
    }
}

TEST_CASE("metrics CSV round trip")
{
    std::vector<MetricRow> rows{{"a", "ripg", 0, 0.1 + 0.2, 1.0 / 3.0}, {"b", "moig", 3, 1.0, 0.0}};
    std::ostringstream os;
    write_metrics_csv(os, rows);
    std::istringstream is(os.str());
    const auto back = read_metrics_csv(is);
    REQUIRE(back.size() == 2);
    CHECK(back[0].hv == rows[0].hv);
    CHECK(back[0].gd == rows[0].gd);
    CHECK(back[1].method == "moig");
    CHECK(back[1].rep == 3);
}

TEST_CASE("report table")
{
    const std::map<std::string, InstanceShape> shapes{
        {"i1", {6, 2, 2}}, {"i2", {6, 2, 2}}, {"i3", {10, 3, 3}}};
    CHECK_THROWS_AS(build_report({}, shapes), InvalidInput);
    CHECK_THROWS_AS(build_report({{"zz", "ripg", 0, 1, 0}}, shapes), InvalidInput);

    const std::vector<MetricRow> single{{"i1", "ripg", 0, 0.5, 0.2}, {"i3", "ripg", 0, 0.7, 0.1}};
    const auto t1 = build_report(single, shapes);
    for (const auto& row : t1.rows) {
        CHECK(row.best_hv == std::vector<std::string>{"ripg"});
        CHECK(row.best_gd == std::vector<std::string>{"ripg"});
    }

    const std::vector<MetricRow> rows{
        {"i1", "ripg", 0, 0.9, 0.1},  {"i1", "ripg", 1, 0.7, 0.3},  {"i2", "ripg", 0, 0.8, 0.2},
        {"i1", "nsga2", 0, 0.6, 0.5}, {"i2", "nsga2", 0, 0.8, 0.1}, {"i3", "nsga2", 0, 0.5, 0.4},
        {"i3", "ripg", 0, 0.5, 0.4},  {"i3", "moig", 0, 0.2, 0.9},
    };
    const auto t = build_report(rows, shapes);
    CHECK(t.methods == std::vector<std::string>{"moig", "nsga2", "ripg"});
    REQUIRE(t.rows.size() == 3);
    // Group (6, 2, 2): ripg over three runs, nsga2 over two; moig absent.
    CHECK(t.rows[0].label == "6 2 2");
    CHECK(std::isnan(t.rows[0].hv[0]));
    CHECK(t.rows[0].hv[1] == doctest::Approx(0.7));
    CHECK(t.rows[0].hv[2] == doctest::Approx(0.8));
    CHECK(t.rows[0].gd[1] == doctest::Approx(0.3));
    CHECK(t.rows[0].gd[2] == doctest::Approx(0.2));
    CHECK(t.rows[0].best_hv == std::vector<std::string>{"ripg"});
    CHECK(t.rows[0].best_gd == std::vector<std::string>{"ripg"});
    CHECK(t.rows[1].best_hv == std::vector<std::string>{"nsga2", "ripg"});
    CHECK(t.rows[2].label == "Average");
    CHECK(t.rows[2].hv[2] == doctest::Approx((0.8 + 0.5) / 2));
    CHECK(t.rows[2].hv[1] == doctest::Approx((0.7 + 0.5) / 2));

    std::ostringstream csv;
    write_report_csv(csv, t);
    std::istringstream lines(csv.str());
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "n,g,m,hv_moig,hv_nsga2,hv_ripg,gd_moig,gd_nsga2,gd_ripg,best_hv,best_gd");
    CHECK(first.rfind("6,2,2,", 0) == 0);
    CHECK(first.substr(first.size() - 10) == ",ripg,ripg");

    std::ostringstream text;
    write_report_text(text, t);
    CHECK(text.str().find("Average") != std::string::npos);
    CHECK(text.str().find('*') != std::string::npos);
}
