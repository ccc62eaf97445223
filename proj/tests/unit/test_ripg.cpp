#include <doctest.h>

#include "fixtures.hpp"
#include "oracles/oracles.hpp"

#include <bhfs/core/error.hpp>
#include <bhfs/exact/oracle.hpp>
#include <bhfs/pareto/metrics.hpp>
#include <bhfs/ripg/neh.hpp>
#include <bhfs/ripg/operators.hpp>
#include <bhfs/ripg/run.hpp>
#include <bhfs/ripg/trace.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

using namespace bhfs;

namespace {

Permutation shuffled(int n, Rng& rng)
{
    Permutation p = identity_permutation(n);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Instance random_hybrid(Rng& rng, int n, int stages = 2)
{
    std::uniform_int_distribution<Time> proc(1, 30);
    std::uniform_int_distribution<Energy> rate(1, 7);
    Matrix<Time> p(n, stages);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < stages; ++k) p(i, k) = proc(rng);
    std::vector<Energy> ep(stages), ei(stages), eb(stages);
    for (int k = 0; k < stages; ++k) ep[k] = rate(rng), ei[k] = rate(rng), eb[k] = rate(rng);
    return Instance("r", std::vector<int>(stages, 2), p, ep, ei, eb);
}

Solution solution_of(const Instance& inst, Permutation p)
{
    const auto obj = evaluate_sequence(inst, p);
    return {std::move(p), obj};
}

bool weakly_covered(const std::vector<Solution>& out, const ObjectiveVector& v)
{
    return std::any_of(out.begin(), out.end(), [&](const Solution& s) { return weakly_dominates(s.objectives, v); });
}

bool mutually_nondominated(const std::vector<Solution>& out)
{
    for (const auto& a : out)
        for (const auto& b : out)
            if (dominates(a.objectives, b.objectives)) return false;
    return true;
}

std::vector<Solution> sorted(std::vector<Solution> v)
{
    std::sort(v.begin(), v.end(), [](const Solution& a, const Solution& b) {
        return std::tie(a.objectives, a.sequence) < std::tie(b.objectives, b.sequence);
    });
    return v;
}

}  // namespace

TEST_CASE("NEH on trivial instances")
{
    const Instance one = fixtures::from_rows("one", {2, 1}, {{3, 4}}, {1, 1}, {1, 1}, {1, 1});
    CHECK(neh_makespan(one) == Permutation{0});
    CHECK(neh_tec(one) == Permutation{0});

    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        const Instance two = random_hybrid(rng, 2);
        const auto best = std::min(evaluate_perm(two, Permutation{0, 1}).cmax, evaluate_perm(two, Permutation{1, 0}).cmax);
        CHECK(evaluate_perm(two, neh_makespan(two)).cmax == best);
        const auto best_tec = std::min(evaluate_perm(two, Permutation{0, 1}).tec, evaluate_perm(two, Permutation{1, 0}).tec);
        CHECK(evaluate_perm(two, neh_tec(two)).tec == best_tec);
    }
}

TEST_CASE("NEH-TEC with only processing energy keeps the first tie")
{
    // Equal TEC everywhere: every job goes to the front of the partial sequence.
    const Instance inst = fixtures::from_rows("flat", {2, 2}, {{3, 4}, {9, 9}, {1, 2}, {5, 5}, {4, 3}}, {1, 2},
                                              {0, 0}, {0, 0});
    // Workloads 7, 18, 3, 10, 7 -> order 1, 3, 0, 4, 2 (stable), inserted at position 0 each time.
    CHECK(neh_tec(inst) == Permutation{2, 4, 0, 3, 1});
}

TEST_CASE("NEH beats the median of random permutations")
{
    Rng rng(606);
    int cmax_wins = 0, tec_wins = 0;
    const int instances = 40;
    for (int t = 0; t < instances; ++t) {
        const Instance inst = random_hybrid(rng, 6, 3);
        std::vector<Time> cm;
        std::vector<Energy> te;
        for (int s = 0; s < 100; ++s) {
            const auto v = evaluate_perm(inst, shuffled(6, rng));
            cm.push_back(v.cmax);
            te.push_back(v.tec);
        }
        std::nth_element(cm.begin(), cm.begin() + 50, cm.end());
        std::nth_element(te.begin(), te.begin() + 50, te.end());
        cmax_wins += evaluate_perm(inst, neh_makespan(inst)).cmax <= cm[50];
        tec_wins += evaluate_perm(inst, neh_tec(inst)).tec <= te[50];
    }
    CHECK(cmax_wins >= instances * 95 / 100);
    CHECK(tec_wins >= instances * 95 / 100);
}

TEST_CASE("initial archive")
{
    const Instance t1 = fixtures::seven_jobs();
    const ParetoArchive a = initialize(t1);
    CHECK(a.sorted_points() == std::vector<ObjectiveVector>{{18, 186}, {23, 183}});
    // Both seeds are realised by their permutations and lie behind the exhaustive front.
    const auto front = exhaustive_front(t1, OracleMode::Permutation).front;
    for (const auto& e : a.entries()) {
        CHECK(evaluate_perm(t1, e.sequence) == e.objectives);
        CHECK(std::any_of(front.begin(), front.end(), [&](auto p) { return weakly_dominates(p, e.objectives); }));
    }

    Rng rng(1);
    bool saw_one = false, saw_two = false;
    for (int t = 0; t < 200 && !(saw_one && saw_two); ++t) {
        const Instance inst = random_hybrid(rng, 5);
        const auto c = evaluate_perm(inst, neh_makespan(inst)), e = evaluate_perm(inst, neh_tec(inst));
        const auto size = initialize(inst).size();
        if (weakly_dominates(c, e) || weakly_dominates(e, c)) {
            CHECK(size == 1);
            saw_one = true;
        } else {
            CHECK(size == 2);
            saw_two = true;
        }
    }
    CHECK(saw_one);
    CHECK(saw_two);
}

TEST_CASE("selection")
{
    ParetoArchive one;
    one.insert({{0, 1}, {3, 3}});
    Rng rng(5), untouched(5);
    CHECK(&select(one, true, rng) == &one.entries().front());
    CHECK(&select(one, false, rng) == &one.entries().front());
    CHECK(rng == untouched);

    ParetoArchive three;
    three.insert({{0}, {1, 5}});
    three.insert({{1}, {2, 3}});
    three.insert({{2}, {4, 1}});
    std::map<Time, int> changed, unchanged;
    for (int i = 0; i < 2000; ++i) {
        ++changed[select(three, true, rng).objectives.cmax];
        ++unchanged[select(three, false, rng).objectives.cmax];
    }
    CHECK(changed.count(2) == 0);
    CHECK(changed[1] > 800);
    CHECK(changed[4] > 800);
    for (Time c : {1, 2, 4}) CHECK(unchanged[c] > 550);
}

TEST_CASE("greedy phase")
{
    Rng rng(9);
    const Instance inst = random_hybrid(rng, 5);
    Evaluator eval(inst);
    const Solution input = solution_of(inst, shuffled(5, rng));
    CHECK_THROWS_AS(greedy_phase(eval, input, 5, rng), InvalidConfig);
    CHECK_THROWS_AS(greedy_phase(eval, input, 0, rng), InvalidConfig);

    for (int trial = 0; trial < 200; ++trial) {
        const Instance in = random_hybrid(rng, trial % 2 ? 5 : 7, 2 + trial % 3);
        Evaluator ev(in);
        const Solution s = solution_of(in, shuffled(in.jobs(), rng));
        const int d = 1 + trial % 3;
        Rng a(trial), b(trial);
        const auto out = greedy_phase(ev, s, d, a);
        CHECK(out == oracle::greedy_tree(in, s, d, b));
        CHECK(a == b);
        CHECK(mutually_nondominated(out));
        CHECK(weakly_covered(out, s.objectives));
        for (const auto& e : out) {
            CHECK(is_permutation(in, e.sequence));
            CHECK(evaluate_sequence(in, e.sequence) == e.objectives);
        }
    }
}

TEST_CASE("greedy phase with one removed job scans every position")
{
    Rng rng(10);
    const Instance inst = random_hybrid(rng, 6);
    Evaluator eval(inst);
    const Solution s = solution_of(inst, shuffled(6, rng));
    Rng a(42), b(42);
    const auto out = greedy_phase(eval, s, 1, a);
    const auto job_at = std::uniform_int_distribution<std::size_t>(0, 5)(b);
    Permutation rest = s.sequence;
    const JobId job = rest[job_at];
    rest.erase(rest.begin() + static_cast<long>(job_at));
    std::vector<Solution> all;
    for (std::size_t pos = 0; pos <= rest.size(); ++pos) {
        Permutation p = rest;
        p.insert(p.begin() + static_cast<long>(pos), job);
        all.push_back(solution_of(inst, p));
    }
    all.push_back(s);
    CHECK(sorted(out) == sorted(oracle::pairwise_filter(all)));
}

TEST_CASE("local search")
{
    Rng rng(12);
    const Instance two = random_hybrid(rng, 2);
    Evaluator e2(two);
    const auto out2 = local_search(e2, solution_of(two, {0, 1}), rng);
    std::vector<Solution> both{solution_of(two, {0, 1}), solution_of(two, {1, 0})};
    std::vector<ObjectiveVector> got, want;
    for (const auto& s : out2) got.push_back(s.objectives);
    for (const auto& s : oracle::pairwise_filter(both)) want.push_back(s.objectives);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    const Instance one = fixtures::from_rows("one", {2, 1}, {{3, 4}}, {1, 1}, {1, 1}, {1, 1});
    Evaluator e1(one);
    CHECK_THROWS_AS(local_search(e1, solution_of(one, {0}), rng), InvalidConfig);

    for (int trial = 0; trial < 200; ++trial) {
        const Instance inst = random_hybrid(rng, 6, 2 + trial % 2);
        Evaluator ev(inst);
        const Solution s = solution_of(inst, shuffled(6, rng));
        Rng a(trial), b(trial);
        const auto out = local_search(ev, s, a);
        CHECK(out == oracle::reinsertion_scan(inst, s, b));
        CHECK(weakly_covered(out, s.objectives));
        CHECK(mutually_nondominated(out));
        CHECK(ev.evaluations() == 6);
    }
}

TEST_CASE("refinement")
{
    Rng rng(13);
    const Instance inst = random_hybrid(rng, 6);
    Evaluator eval(inst);
    std::vector<Solution> front{solution_of(inst, shuffled(6, rng)), solution_of(inst, shuffled(6, rng)),
                                solution_of(inst, shuffled(6, rng))};
    CHECK(refine(eval, front, 0, rng) == nondominated(front));

    for (int trial = 0; trial < 100; ++trial) {
        const Instance in = random_hybrid(rng, 6, 2 + trial % 3);
        Evaluator ev(in);
        std::vector<Solution> f;
        for (int i = 0; i < 3; ++i) f.push_back(solution_of(in, shuffled(6, rng)));
        Rng a(trial), b(trial);
        const auto out = refine(ev, f, 5, a);
        CHECK(out == oracle::refine_trace(in, f, 5, b));
        CHECK(a == b);

        Rng c(trial);
        const auto single = refine(ev, {f.front()}, 5, c);
        REQUIRE(single.size() == 1);
        CHECK(weakly_dominates(single.front().objectives, f.front().objectives));
    }
}

TEST_CASE("moves keep permutations valid")
{
    Rng rng(14);
    for (int t = 0; t < 500; ++t) {
        const int n = 2 + t % 9;
        const Permutation p = shuffled(n, rng);
        const Permutation a = insertion_move(p, rng), b = interchange_move(p, rng);
        CHECK(std::is_permutation(a.begin(), a.end(), p.begin()));
        CHECK(std::is_permutation(b.begin(), b.end(), p.begin()));
        CHECK(a != p);
        CHECK(b != p);
    }
    Rng r(1);
    CHECK(insertion_move({4}, r) == Permutation{4});
}

TEST_CASE("run: configuration and the zero-iteration case")
{
    Rng rng(15);
    const Instance inst = random_hybrid(rng, 6);
    CHECK_THROWS_AS(run_ripg(inst, {6, 10, 100, 0, 5, {}}), InvalidConfig);
    CHECK_THROWS_AS(run_ripg(inst, {3, 0, 100, 0, 5, {}}), InvalidConfig);
    CHECK_THROWS_AS(run_ripg(inst, {3, 10, 0, 0, std::nullopt, {}}), InvalidConfig);

    const auto r = run_ripg(inst, {3, 10, 0, 1, 0, {}});
    CHECK(r.archive.sorted_points() == initialize(inst).sorted_points());
    CHECK(r.trace.iterations == 0);
}

TEST_CASE("run: reproducible, monotone, close to the exhaustive front")
{
    Rng rng(16);
    for (int trial = 0; trial < 4; ++trial) {
        const Instance inst = random_hybrid(rng, 6);
        RipgConfig cfg{3, 10, 1000, 77, 150, {1, true}};
        const auto a = run_ripg(inst, cfg);
        const auto b = run_ripg(inst, cfg);
        CHECK(a.archive.entries() == b.archive.entries());
        CHECK(a.trace.evaluations == b.trace.evaluations);

        std::vector<std::vector<ObjectiveVector>> fronts;
        for (const auto& s : a.trace.snapshots) fronts.push_back(s.front);
        const auto exhaustive = exhaustive_front(inst, OracleMode::Permutation).front;
        fronts.push_back(exhaustive);
        const auto ctx = NormalizationContext::from_fronts(fronts);
        double previous = 0.0;
        std::uint64_t evals = 0;
        for (const auto& s : a.trace.snapshots) {
            const double hv = hypervolume(s.front, ctx);
            CHECK(hv >= previous - 1e-12);
            CHECK(s.evaluations >= evals);
            previous = hv;
            evals = s.evaluations;
        }
        CHECK(a.trace.snapshots.back().iteration == 150);
        CHECK(hypervolume(a.archive.sorted_points(), ctx) >= 0.99 * hypervolume(exhaustive, ctx));
    }
}

TEST_CASE("run: wall-clock budget")
{
    Rng rng(17);
    const Instance inst = random_hybrid(rng, 20, 3);
    const auto r = run_ripg(inst, {3, 10, 200, 3, std::nullopt, {}});
    CHECK(r.trace.elapsed_ms >= 200.0);
    CHECK(r.trace.elapsed_ms < 2000.0);
    CHECK(r.trace.iterations > 0);
}

TEST_CASE("trace JSON lines")
{
    RunTrace t;
    t.snapshots.push_back({0, 1.5, 2, 10, 0.75, {}});
    t.snapshots.push_back({3, 4.0, 1, 40, 1.44, {{5, 9}}});
    std::ostringstream os;
    write_trace_jsonl(os, t);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    auto j = nlohmann::json::parse(line);
    CHECK(j["iteration"] == 0);
    CHECK(j["archive_size"] == 2);
    CHECK(j["evaluations"] == 10);
    CHECK(j["hv"] == 0.75);
    CHECK_FALSE(j.contains("front"));
    CHECK(line.rfind("{\"iteration\":0,\"elapsed_ms\":1.5", 0) == 0);
    std::getline(in, line);
    j = nlohmann::json::parse(line);
    CHECK(j["front"] == nlohmann::json::array({{5, 9}}));
}
