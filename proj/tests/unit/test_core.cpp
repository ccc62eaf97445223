#include <doctest.h>

#include "fixtures.hpp"
#include "oracles/oracles.hpp"

#include <bhfs/core/error.hpp>
#include <bhfs/core/gantt.hpp>
#include <bhfs/core/instance_io.hpp>
#include <bhfs/core/objectives.hpp>
#include <bhfs/core/schedule.hpp>

#include <algorithm>
#include <sstream>

using namespace bhfs;

namespace {

Permutation shuffled(int n, Rng& rng)
{
    Permutation p = identity_permutation(n);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("instance validation")
{
    Matrix<Time> p(2, 2, 1);
    CHECK_NOTHROW(Instance("ok", {2, 1}, p, {1, 1}, {1, 1}, {1, 1}));
    CHECK_THROWS_AS(Instance("flow", {1, 1}, p, {1, 1}, {1, 1}, {1, 1}), InvalidInput);
    CHECK_NOTHROW(Instance("flow", {1, 1}, p, {1, 1}, {1, 1}, {1, 1}, {.allow_pure_flowshop = true}));
    CHECK_THROWS_AS(Instance("m", {2, 0}, p, {1, 1}, {1, 1}, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(Instance("m", {2}, p, {1, 1}, {1, 1}, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(Instance("e", {2, 2}, p, {1, -1}, {1, 1}, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(Instance("e", {2, 2}, p, {1, 1}, {1}, {1, 1}), InvalidInput);
    Matrix<Time> neg(2, 2, 1);
    neg(1, 1) = -1;
    CHECK_THROWS_AS(Instance("p", {2, 2}, neg, {1, 1}, {1, 1}, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(Instance("k", {2}, Matrix<Time>(2, 1, 1), {1}, {1}, {1}), InvalidInput);
}

TEST_CASE("single job never blocks")
{
    const Instance inst = fixtures::from_rows("one", {1, 1}, {{3, 4}}, {2, 5}, {1, 1}, {1, 1});
    const Schedule s = decode(inst, Permutation{0});
    CHECK(s.start(0, 0) == 0);
    CHECK(s.start(0, 1) == 3);
    CHECK(s.completion(0, 0) == 3);
    CHECK(s.completion(0, 1) == 7);
    CHECK(s.block(0, 0) == 0);
    CHECK(s.block(0, 1) == 0);
    const auto r = evaluate(inst, s);
    CHECK(r.cmax == 7);
    const auto lb = lower_bounds(inst);
    CHECK(lb.cmax == 7);
    CHECK(lb.tec == 3 * 2 + 4 * 5);
}

TEST_CASE("two-job blocking example")
{
    const Instance inst = fixtures::two_job();
    const Schedule s = decode(inst, Permutation{0, 1});
    CHECK(s.start(1, 0) == 2);
    CHECK(s.block(1, 0) == 3);
    CHECK(s.completion(1, 0) == 7);
    CHECK(s.start(1, 1) == 7);
    CHECK(s.completion(1, 1) == 9);

    const auto r = evaluate(inst, s);
    CHECK(r.cmax == 9);
    CHECK(r.total_blocking == 3);
    CHECK(r.energy_blocking == 3);
    CHECK(r.energy_processing == 11);
    CHECK(r.energy_idle == 0);
    CHECK(r.tec == 14);
    REQUIRE(r.machines.size() == 2);
    CHECK(r.machines[0].earliest_start == 0);
    CHECK(r.machines[0].latest_completion == 7);
    CHECK(r.machines[0].busy == 4);
    CHECK(r.machines[0].blocked == 3);
    CHECK(r.machines[0].idle == 0);
    CHECK(r.machines[1].earliest_start == 2);
    CHECK(r.machines[1].latest_completion == 9);
    CHECK(r.machines[1].idle == 0);

    const auto oracle = oracle::interval_account(inst, s.start, s.completion, s.machine);
    CHECK(oracle.tec == 14);
    CHECK(evaluate_perm(inst, Permutation{0, 1}) == ObjectiveVector{9, 14});
}

TEST_CASE("decode rejects sequences that are not permutations")
{
    const Instance inst = fixtures::two_job();
    CHECK_THROWS_AS(decode(inst, Permutation{0}), InvalidInput);
    CHECK_THROWS_AS(decode(inst, Permutation{0, 0}), InvalidInput);
    CHECK_THROWS_AS(decode(inst, Permutation{0, 2}), InvalidInput);
    CHECK_THROWS_AS(evaluate_perm(inst, Permutation{1, 0, 1}), InvalidInput);
    CHECK_NOTHROW(decode_sequence(inst, Permutation{1}));
}

TEST_CASE("partial sequences schedule only their jobs")
{
    Rng rng(11);
    const Instance inst = oracle::random_instance(rng, 8, 2, 3, 3);
    if (inst.jobs() < 2) return;
    Permutation seq = shuffled(inst.jobs(), rng);
    const JobId dropped = seq.back();
    seq.pop_back();
    const Schedule s = decode_sequence(inst, seq);
    const auto r = evaluate(inst, s);
    CHECK(r.energy_processing == inst.processing_energy(seq));
    CHECK(evaluate_sequence(inst, seq) == r.objectives());
    for (int k = 0; k < inst.stages(); ++k) CHECK(s.machine(dropped, k) == -1);
}

TEST_CASE("decoder matches the unit-time replay and keeps every invariant")
{
    Rng rng(20240601);
    for (int trial = 0; trial < 300; ++trial) {
        const Instance inst = oracle::random_instance(rng, 9, 2, 4, 3);
        const Permutation perm = shuffled(inst.jobs(), rng);
        const Schedule s = decode(inst, perm);
        const auto replay = oracle::unit_time_decode(inst, perm);
        REQUIRE(s.start == replay.start);
        REQUIRE(s.completion == replay.completion);
        REQUIRE(s.machine == replay.machine);

        const int last = inst.stages() - 1;
        for (int j = 0; j < inst.jobs(); ++j) {
            REQUIRE(s.block(j, last) == 0);
            REQUIRE(s.start(j, 0) >= 0);
            for (int k = 0; k < inst.stages(); ++k) {
                REQUIRE(s.block(j, k) >= 0);
                REQUIRE(s.completion(j, k) == s.start(j, k) + inst.proc(j, k) + s.block(j, k));
                if (k < last) REQUIRE(s.start(j, k + 1) == s.completion(j, k));
            }
        }
        for (const auto& line : s.timelines)
            for (std::size_t a = 1; a < line.size(); ++a) REQUIRE(line[a - 1].end <= line[a].start);

        // Blocking only while every downstream machine is occupied.
        for (int j = 0; j < inst.jobs(); ++j)
            for (int k = 0; k < last; ++k) {
                if (s.block(j, k) == 0) continue;
                const Time t = s.start(j, k) + inst.proc(j, k);
                for (int m = 0; m < inst.machines(k + 1); ++m) {
                    const auto& line = s.timelines[inst.machine_offset(k + 1) + m];
                    const bool busy = std::any_of(line.begin(), line.end(),
                                                  [&](const Occupation& o) { return o.start <= t && t < o.end; });
                    REQUIRE(busy);
                }
            }
    }
}

TEST_CASE("stage-1 order follows the permutation")
{
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Instance inst = oracle::random_instance(rng, 10, 2, 3, 3);
        const Permutation perm = shuffled(inst.jobs(), rng);
        const Schedule s = decode(inst, perm);
        for (std::size_t p = 1; p < perm.size(); ++p) REQUIRE(s.start(perm[p - 1], 0) <= s.start(perm[p], 0));
    }
}

TEST_CASE("energy accounting equals the interval oracle")
{
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Instance inst = oracle::random_instance(rng, 8, 2, 4, 3);
        const Permutation perm = shuffled(inst.jobs(), rng);
        const Schedule s = decode(inst, perm);
        const auto r = evaluate(inst, s);
        const auto o = oracle::interval_account(inst, s.start, s.completion, s.machine);
        REQUIRE(r.tec == o.tec);
        REQUIRE(r.cmax == o.cmax);
        REQUIRE(r.energy_processing == o.processing);
        REQUIRE(r.energy_blocking == o.blocking);
        REQUIRE(r.energy_idle == o.idle);
        REQUIRE(r.tec == r.energy_processing + r.energy_blocking + r.energy_idle);
        REQUIRE(r.energy_processing == inst.processing_energy());
        Time idle = 0;
        for (std::size_t f = 0; f < r.machines.size(); ++f) {
            const auto& m = r.machines[f];
            REQUIRE(m.idle == o.idle_per_machine[f]);
            if (m.used) REQUIRE(m.idle == m.latest_completion - m.earliest_start - m.busy - m.blocked);
            else REQUIRE(m.idle == 0);
            REQUIRE(m.idle >= 0);
            idle += m.idle;
        }
        REQUIRE(r.total_idle == idle);
        const auto lb = lower_bounds(inst);
        REQUIRE(r.cmax >= lb.cmax);
        REQUIRE(r.tec >= lb.tec);
    }
}

TEST_CASE("determinism and symmetry")
{
    Rng rng(5);
    const Instance inst = oracle::random_instance(rng, 10, 2, 4, 3);
    const Permutation perm = shuffled(inst.jobs(), rng);
    CHECK(decode(inst, perm) == decode(inst, perm));
    CHECK(evaluate_perm(inst, perm) == evaluate_perm(inst, perm));

    const Instance same(
        "same", {2, 3, 1}, Matrix<Time>(6, 3, 4), {1, 2, 3}, {2, 2, 2}, {5, 5, 5});
    const auto base = evaluate_perm(same, identity_permutation(6));
    for (int t = 0; t < 20; ++t) CHECK(evaluate_perm(same, shuffled(6, rng)) == base);
}

TEST_CASE("evaluate names the violated constraint")
{
    const Instance inst = fixtures::two_job();
    const Schedule good = decode(inst, Permutation{0, 1});

    auto expect_violation = [&](Schedule s, const std::string& tag) {
        try {
            evaluate(inst, s);
            FAIL("expected InconsistentSchedule for " << tag);
        } catch (const InconsistentSchedule& e) {
            CHECK(e.constraint().rfind(tag, 0) == 0);
        }
    };
    Schedule s = good;
    s.completion(1, 0) += 1;
    expect_violation(s, "eq06");

    s = good;
    s.block(0, 1) = 1;
    s.completion(0, 1) += 1;
    for (auto& o : s.timelines[1])
        if (o.job == 0) o.end += 1;
    expect_violation(s, "eq07");

    s = good;  // job 1 waits between stages without holding a machine
    s.start(1, 1) += 1;
    s.completion(1, 1) += 1;
    for (auto& o : s.timelines[1])
        if (o.job == 1) o.start += 1, o.end += 1;
    expect_violation(s, "eq08");

    s = good;  // job 1 enters stage 0 while job 0 still occupies it
    s.start(1, 0) = 1;
    s.block(1, 0) = 4;
    for (auto& o : s.timelines[0])
        if (o.job == 1) o.start = 1;
    expect_violation(s, "eq04");
}

TEST_CASE("lower bounds")
{
    const Instance t1 = fixtures::seven_jobs();
    const auto lb = lower_bounds(t1);
    CHECK(lb.tec == 30 * 4 + 30 * 2);
    CHECK(lb.tec == 180);
    // Longest job 14 (7+7), busiest stage ceil(30/2)=15.
    CHECK(lb.cmax == 15);
    CHECK(t1.processing_energy() == 180);
}

TEST_CASE("instance file round trip")
{
    Rng rng(3);
    const Instance inst = oracle::random_instance(rng, 12, 2, 4, 3);
    std::stringstream ss;
    write_instance(ss, inst);
    const std::string text = ss.str();
    CHECK(text.rfind("bhfs-instance v1\n", 0) == 0);
    const Instance back = read_instance(ss, {.allow_pure_flowshop = true});
    CHECK(back == inst);

    std::stringstream again;
    write_instance(again, back);
    CHECK(again.str() == text);
}

TEST_CASE("instance file errors")
{
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_instance(in);
    };
    const std::string body =
        "id = x\nn = 2\nK = 2\nmachines_per_stage = 2 1\nenergy_proc = 1 1\nenergy_idle = 1 1\n"
        "energy_block = 1 1\nproc_time =\n  1 2\n  3 4\n";
    CHECK_NOTHROW(parse("bhfs-instance v1\n" + body));
    CHECK_THROWS_AS(parse(body), InvalidInput);
    CHECK_THROWS_AS(parse("bhfs-instance v1\n" + body + "n = 3\n"), InvalidInput);
    CHECK_THROWS_AS(parse("bhfs-instance v1\nid = x\nn = 2\n"), InvalidInput);
    std::string bad = "bhfs-instance v1\n" + body;
    bad.replace(bad.find("3 4"), 3, "3 x");
    CHECK_THROWS_AS(parse(bad), InvalidInput);
    std::string short_row = "bhfs-instance v1\n" + body;
    short_row.replace(short_row.find("3 4"), 3, "3");
    CHECK_THROWS_AS(parse(short_row), InvalidInput);
}

TEST_CASE("gantt dump")
{
    const Instance inst = fixtures::two_job();
    std::ostringstream os;
    write_gantt(os, inst, decode(inst, Permutation{0, 1}));
    CHECK(os.str() ==
          "job k machine S P BT C\n"
          "0 0 0 0 2 0 2\n"
          "0 1 0 2 5 0 7\n"
          "1 0 0 2 2 3 7\n"
          "1 1 0 7 2 0 9\n");
}
