#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "balance/dynamics.hpp"
#include "balance/signed_graph.hpp"

using namespace balance;

TEST_CASE("parameter validation") {
    DynamicsParams bad;
    bad.p = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.p = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.p = 0.5;
    bad.trials = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    DynamicsParams ok;
    CHECK(ok.effective_max_steps(10) == 100000);
    ok.max_steps = 7;
    CHECK(ok.effective_max_steps(10) == 7);

    DynamicsParams high;
    high.p = 0.8;
    CHECK(high.p_minus() == doctest::Approx(0.5));
    high.p = 0.3;
    CHECK(high.p_minus() == doctest::Approx(0.3));
}

TEST_CASE("single-negative-edge rule: negative flips with probability p") {
    SignedGraph k3(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    EdgeState s0 = k3.all_positive_state();
    s0[1] = -1;
    const double p = 0.7;
    const int reps = 20000;
    int neg = 0, pos0 = 0, pos2 = 0;
    Rng rng(1234);
    for (int i = 0; i < reps; ++i) {
        DynamicsState st(k3, s0);
        REQUIRE(st.imbalanced_count() == 1);
        auto rec = st.step(p, rng);
        CHECK(rec.triangle == 0);
        if (rec.edge == 1)
            ++neg;
        else if (rec.edge == 0)
            ++pos0;
        else
            ++pos2;
        // Either flip balances the lone triangle: removing the negative edge
        // or adding a second negative both restore a positive product.
        CHECK(rec.potential_after == 0);
    }
    CHECK(std::abs(neg / double(reps) - p) < 0.02);
    CHECK(std::abs(pos0 / double(reps) - (1 - p) / 2) < 0.02);
    CHECK(std::abs(pos2 / double(reps) - (1 - p) / 2) < 0.02);
}

TEST_CASE("all-negative triangle: uniform edge choice") {
    SignedGraph k3(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    EdgeState s0 = k3.all_negative_state();
    const int reps = 18000;
    int counts[3] = {0, 0, 0};
    Rng rng(99);
    for (int i = 0; i < reps; ++i) {
        DynamicsState st(k3, s0);
        auto rec = st.step(0.5, rng);
        ++counts[rec.edge];
    }
    for (int c : counts) CHECK(std::abs(c / double(reps) - 1.0 / 3) < 0.02);
}

TEST_CASE("incremental imbalanced set matches recount after random flips") {
    Rng rng(5);
    auto g = generate_triadic_cycle(9);
    DynamicsState st(g, g.all_negative_state());
    for (int i = 0; i < 500; ++i) {
        st.flip(static_cast<int>(rng.index(g.edge_count())));
        CHECK(st.imbalanced_count() == g.count_imbalanced(st.state()));
    }
}

TEST_CASE("potential never increases and drops by at most 2") {
    Rng rng(77);
    auto g = generate_triadic_cycle(11);
    DynamicsParams params;
    params.p = 0.5;
    std::vector<Trajectory> trajs;
    for (int i = 0; i < 40; ++i) {
        EdgeState s0(g.edge_count());
        for (auto& x : s0) x = rng.bernoulli(0.5) ? 1 : -1;
        auto traj = run_until_recurrent(g, s0, params, rng, true);
        CHECK(!traj.censored);
        auto rep = drift_check(g, s0, {traj});
        CHECK(rep.never_increased);
        CHECK(rep.steps_in_range);
        trajs.push_back(traj);
    }
    // Each step decreases the potential with probability >= min(p, 1/2).
    long long total = 0, dec = 0;
    for (int i = 0; i < 40; ++i) {
        auto traj = run_until_recurrent(g, g.all_negative_state(), params, rng, true);
        auto r = drift_check(g, g.all_negative_state(), {traj});
        total += r.steps;
        dec += r.decreases;
    }
    double freq = double(dec) / double(total);
    double sigma = std::sqrt(0.25 / double(total));
    CHECK(freq >= params.p_minus() - 4 * sigma);
}

TEST_CASE("all-negative start converges to a balanced state") {
    DynamicsParams params;
    params.p = 0.5;
    Rng rng(31);
    for (int n : {8, 12}) {
        auto g = generate_triadic_cycle(n);
        auto traj = run_until_recurrent(g, g.all_negative_state(), params, rng);
        CHECK(!traj.censored);
        CHECK(traj.terminal_imbalance == 0);
        CHECK(g.count_imbalanced(traj.terminal_state) == 0);
    }
}

TEST_CASE("censoring at max_steps") {
    auto g = generate_triadic_cycle(8);
    DynamicsParams params;
    params.max_steps = 0;
    Rng rng(1);
    auto traj = run_until_recurrent(g, g.all_negative_state(), params, rng);
    CHECK(traj.censored);
    CHECK(traj.steps == 0);
    CHECK(traj.terminal_imbalance > 0);
}

TEST_CASE("estimate_tau_sb is deterministic and thread-count invariant") {
    auto g = generate_triadic_cycle(9);
    DynamicsParams params;
    params.p = 0.4;
    params.seed = 2024;
    params.trials = 24;
    auto serial = estimate_tau_sb(g, params, InitialStateStrategy::AllNegative, nullptr, 1);
    auto parallel = estimate_tau_sb(g, params, InitialStateStrategy::AllNegative, nullptr, 4);
    auto again = estimate_tau_sb(g, params, InitialStateStrategy::AllNegative, nullptr, 1);
    REQUIRE(serial.times == parallel.times);
    REQUIRE(serial.times == again.times);
    CHECK(serial.censored == 0);
    CHECK(serial.mean > 0.0);

    EdgeState s0 = g.all_negative_state();
    auto expl = estimate_tau_sb(g, params, InitialStateStrategy::Explicit, &s0, 2);
    CHECK(expl.times == serial.times);
    CHECK_THROWS_AS(estimate_tau_sb(g, params, InitialStateStrategy::Explicit, nullptr, 1),
                    std::invalid_argument);
}

TEST_CASE("summarize statistics") {
    Trajectory a, b, c;
    a.steps = 2;
    b.steps = 6;
    c.steps = 10;
    c.censored = true;
    auto stats = summarize({a, b, c});
    CHECK(stats.censored == 1);
    REQUIRE(stats.times.size() == 2);
    CHECK(stats.mean == doctest::Approx(4.0));
    CHECK(stats.variance == doctest::Approx(8.0));
    CHECK(stats.max == 6);
}

TEST_CASE("attempt_time matches a direct random-update simulation") {
    // Direct simulation of the random-update convention: each tick picks a
    // uniform triangle; a balanced pick is a no-op that still costs a tick.
    auto g = generate_triadic_cycle(8);
    const int T = g.triangle_count();
    const double p = 0.5;
    const int trials = 4000;

    double direct = 0;
    for (int i = 0; i < trials; ++i) {
        Rng rng(sub_seed(91, i));
        DynamicsState st(g, g.all_negative_state());
        long long ticks = 0;
        while (st.imbalanced_count() > 0) {
            int tri = static_cast<int>(rng.index(static_cast<std::size_t>(T)));
            ++ticks;
            if (g.is_balanced(st.state(), tri)) continue;
            const auto& te = g.triangle_edges(tri);
            int negs[3], nn = 0;
            for (int e : te)
                if (st.state()[e] < 0) negs[nn++] = e;
            int e;
            if (nn == 1) {
                if (rng.bernoulli(p)) {
                    e = negs[0];
                } else {
                    int pos[2], np = 0;
                    for (int x : te)
                        if (st.state()[x] > 0) pos[np++] = x;
                    e = pos[rng.index(2)];
                }
            } else {
                e = te[rng.index(3)];
            }
            st.flip(e);
        }
        direct += double(ticks);
    }
    direct /= trials;

    DynamicsParams params;
    params.p = p;
    double est = 0;
    for (int i = 0; i < trials; ++i) {
        Rng rng(sub_seed(92, i));
        auto traj = run_until_recurrent(g, g.all_negative_state(), params, rng, true);
        est += attempt_time(g, g.all_negative_state(), traj);
    }
    est /= trials;
    CHECK(std::abs(est - direct) / direct < 0.05);

    // Unrecorded trajectories with steps cannot be converted.
    Rng rng(93);
    auto bare = run_until_recurrent(g, g.all_negative_state(), params, rng, false);
    if (bare.steps > 0) CHECK_THROWS_AS(attempt_time(g, g.all_negative_state(), bare),
                                        std::invalid_argument);
}
