#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "balance/signed_graph.hpp"
#include "balance/triadic_dual.hpp"
#include "balance/walks.hpp"

using namespace balance;

TEST_CASE("two balls on K2 meet in one step") {
    Graph k2(2, {{0, 1}});
    Rng rng(3);
    auto arw = run_arw(k2, {0, 1}, 1000, rng);
    CHECK(arw.steps == 1);
    CHECK(arw.survivors.empty());
    auto crw = run_crw(k2, {0, 1}, 1000, rng);
    CHECK(crw.steps == 1);
    REQUIRE(crw.survivors.size() == 1);
}

TEST_CASE("coincident starts collapse before any step") {
    Graph k2(2, {{0, 1}});
    Rng rng(3);
    auto arw = run_arw(k2, {0, 0}, 1000, rng);
    CHECK(arw.steps == 0);
    CHECK(arw.survivors.empty());

    auto arw3 = run_arw(k2, {0, 0, 0}, 1000, rng);  // odd multiplicity: one ball left
    CHECK(arw3.steps == 0);
    CHECK(arw3.survivors == std::vector<int>{0});

    auto crw = run_crw(k2, {0, 0}, 1000, rng);
    CHECK(crw.steps == 0);
    CHECK(crw.survivors == std::vector<int>{0});
}

TEST_CASE("antipodal pair on C6: expected time 9 from the hitting-time system") {
    // Asynchronous two-walker distance chain on C6: E1=5, E2=8, E3=9.
    Graph c6 = cycle_graph(6);
    const int reps = 20000;
    double sum = 0, sumsq = 0;
    Rng rng(4711);
    for (int i = 0; i < reps; ++i) {
        auto r = run_crw(c6, {0, 3}, 100000, rng);
        REQUIRE(!r.censored);
        sum += static_cast<double>(r.steps);
        sumsq += static_cast<double>(r.steps) * static_cast<double>(r.steps);
    }
    double mean = sum / reps;
    double sd = std::sqrt((sumsq - reps * mean * mean) / (reps - 1));
    CHECK(std::abs(mean - 9.0) <= 3 * sd / std::sqrt(double(reps)));

    // Two balls: the ARW is the same process, annihilating at the meet.
    double sum_a = 0;
    Rng rng2(4711);
    for (int i = 0; i < reps; ++i) {
        auto r = run_arw(c6, {0, 3}, 100000, rng2);
        REQUIRE(!r.censored);
        CHECK(r.survivors.empty());
        sum_a += static_cast<double>(r.steps);
    }
    // Identical seed: ARW and CRW consume randomness identically until the
    // meet, so the step sequences agree exactly.
    CHECK(sum_a == sum);
}

TEST_CASE("meeting time estimate on C6: antipodal pairs dominate") {
    Graph c6 = cycle_graph(6);
    WalkParams params;
    params.seed = 99;
    params.trials = 2000;
    auto rep = estimate_meeting_time(c6, params);
    CHECK(rep.censored == 0);
    CHECK(std::abs(rep.max_mean - 9.0) < 0.6);
    int d = std::abs(rep.argmax_u - rep.argmax_v);
    CHECK(std::min(d, 6 - d) == 3);
    // Hitting-time system values for distances 1 and 2.
    CHECK(std::abs(rep.pair_means[0][1] - 5.0) < 0.6);
    CHECK(std::abs(rep.pair_means[0][2] - 8.0) < 0.6);
}

TEST_CASE("coupled walk: domination, parity, ghosts") {
    Graph c8 = cycle_graph(8);
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        auto r = run_coupled(c8, {0, 2, 4, 6}, 1000000, rng);
        REQUIRE(!r.censored);
        CHECK(r.domination_ok);
        CHECK(r.parity_ok);
        CHECK(r.t_arw <= r.t_crw);
        CHECK(r.all_ghosts_at_coalescence);  // even start: every ball dies
    }
    for (int i = 0; i < 300; ++i) {
        auto r = run_coupled(c8, {0, 3, 6}, 1000000, rng);
        REQUIRE(!r.censored);
        CHECK(r.domination_ok);
        CHECK(r.parity_ok);
        CHECK(!r.all_ghosts_at_coalescence);  // odd start: one ball survives
    }
    // Two balls: the ARW dies exactly at the coalescence merge.
    for (int i = 0; i < 100; ++i) {
        auto r = run_coupled(c8, {1, 5}, 1000000, rng);
        REQUIRE(!r.censored);
        CHECK(r.t_arw == r.t_crw);
    }
}

TEST_CASE("walk kernel ignores loops, throws on stranded balls") {
    Graph loopy(2, {{0, 0}, {0, 1}});
    CHECK(loopy.degree(0) == 1);  // loop not in adjacency
    Rng rng(5);
    auto r = run_crw(loopy, {0, 1}, 1000, rng);
    CHECK(!r.censored);

    Graph isolated(2, {});
    CHECK_THROWS_AS(run_arw(isolated, {0, 1}, 10, rng), std::runtime_error);
}

TEST_CASE("switching step: single ball on a triadic-cycle dual") {
    // Each dual vertex carries two cycle edges and one self-loop; scheduling
    // the loop annihilates the ball, a cycle edge moves it.
    auto d = build_triadic_dual(generate_triadic_cycle(9));
    const int reps = 9000;
    int died = 0, moved = 0;
    Rng rng(31);
    for (int i = 0; i < reps; ++i) {
        ParticleConfig w(d.h.n, 0);
        w[4] = 1;
        auto st = switching_step(d.h, w, Scheduler::UniformEligible, rng);
        REQUIRE(!st.halted);
        int balls = 0;
        for (int x : w) balls += x;
        if (balls == 0)
            ++died;
        else {
            REQUIRE(balls == 1);
            CHECK(w[4] == 0);
            ++moved;
        }
    }
    CHECK(std::abs(died / double(reps) - 1.0 / 3) < 0.02);
    CHECK(std::abs(moved / double(reps) - 2.0 / 3) < 0.02);
}

TEST_CASE("schedulers differ on multi-ball configurations") {
    // Two balls on adjacent K4-dual vertices: five eligible hyperedges, one
    // shared. UniformEligible picks it w.p. 1/5, VertexFirst w.p. 1/3.
    auto d = build_triadic_dual(complete_signed_graph(4));
    int shared = -1;
    for (int e = 0; e < d.h.edge_count(); ++e)
        if (d.h.edges[e] == std::vector<int>{0, 1}) shared = e;
    REQUIRE(shared >= 0);
    const int reps = 20000;
    for (auto sched : {Scheduler::UniformEligible, Scheduler::VertexFirst}) {
        int hits = 0;
        Rng rng(7);
        for (int i = 0; i < reps; ++i) {
            ParticleConfig w(4, 0);
            w[0] = w[1] = 1;
            auto st = switching_step(d.h, w, sched, rng);
            if (st.edge == shared) ++hits;
        }
        double expect = sched == Scheduler::UniformEligible ? 1.0 / 5 : 1.0 / 3;
        CHECK(std::abs(hits / double(reps) - expect) < 0.015);
    }
}

TEST_CASE("switching halts on the empty configuration") {
    Hypergraph h{3, {{0, 1, 2}}};
    ParticleConfig w(3, 0);
    Rng rng(1);
    auto st = switching_step(h, w, Scheduler::UniformEligible, rng);
    CHECK(st.halted);
    CHECK(st.edge == -1);
    auto st2 = switching_step(h, w, Scheduler::VertexFirst, rng);
    CHECK(st2.halted);
}
