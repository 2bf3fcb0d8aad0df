#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "balance/reach.hpp"
#include "balance/rng.hpp"
#include "oracles.hpp"

using namespace balance;

TEST_CASE("is_reachable basics") {
    Hypergraph h{3, {{0, 1, 2}}};
    ParticleConfig a{1, 0, 0};
    CHECK(is_reachable(h, a, a));
    // All-zero component may not become nonzero.
    CHECK(!is_reachable(h, ParticleConfig{0, 0, 0}, ParticleConfig{1, 1, 1}));
    CHECK(is_reachable(h, a, ParticleConfig{0, 1, 1}));

    Hypergraph graphish{3, {{0, 1}, {0, 1, 2}}};
    CHECK_THROWS_AS(is_reachable(graphish, a, a), std::invalid_argument);
}

TEST_CASE("is_reachable matches BFS on small connected families") {
    for (auto [n, maxe] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}}) {
        auto family = oracle::connected_family(n, maxe);
        REQUIRE(!family.empty());
        for (const auto& h : family) {
            oracle::ReachOracle orc(h);
            for (oracle::Mask w1 = 1; w1 < (oracle::Mask(1) << n); ++w1) {
                auto c1 = oracle::to_config(w1, n);
                for (oracle::Mask w2 = 0; w2 < (oracle::Mask(1) << n); ++w2) {
                    bool got = is_reachable(h, c1, oracle::to_config(w2, n));
                    bool want = orc.reachable(w1, w2);
                    REQUIRE(got == want);
                }
            }
        }
    }
}

TEST_CASE("is_recurrent preconditions") {
    Hypergraph h{3, {{0, 1, 2}}};
    CHECK_THROWS_AS(is_recurrent(h, ParticleConfig{0, 0, 0}, ParticleConfig{1, 0, 0}),
                    std::invalid_argument);
    Hypergraph disc{6, {{0, 1, 2}, {3, 4, 5}}};
    CHECK_THROWS_AS(is_recurrent(disc, ParticleConfig{1, 0, 0, 0, 0, 0}, ParticleConfig(6, 0)),
                    std::invalid_argument);
}

TEST_CASE("is_recurrent matches terminal-SCC membership") {
    auto family = oracle::connected_family(5, 2);
    for (const auto& h : family) {
        oracle::ReachOracle orc(h);
        for (oracle::Mask w1 = 1; w1 < (oracle::Mask(1) << h.n); ++w1) {
            auto c1 = oracle::to_config(w1, h.n);
            bool zero_reachable = orc.reachable(w1, 0);
            for (oracle::Mask w2 = 0; w2 < (oracle::Mask(1) << h.n); ++w2) {
                bool got = is_recurrent(h, c1, oracle::to_config(w2, h.n));
                REQUIRE(got == orc.recurrent(w1, w2));
                // One-sided structure: when the empty configuration is
                // reachable it is the unique recurrent state.
                if (zero_reachable) REQUIRE(got == (w2 == 0));
            }
        }
    }
}

TEST_CASE("reachable states need not be recurrent when zero is unreachable") {
    // Two triples sharing a pair: the fully occupied state can only leave by
    // annihilating a full hyperedge, and nothing below can rebuild it.
    Hypergraph h{4, {{0, 1, 2}, {0, 1, 3}}};
    ParticleConfig full{1, 1, 1, 1};
    CHECK(!is_reachable(h, full, ParticleConfig{0, 0, 0, 0}));
    CHECK(is_reachable(h, full, full));
    CHECK(!is_recurrent(h, full, full));
    CHECK(is_recurrent(h, full, ParticleConfig{0, 0, 1, 0}));
}

TEST_CASE("the algebraic screen is necessary but not sufficient") {
    // The switch-count system is solvable (schedule both hyperedges once)
    // and the component condition holds, yet climbing from {0,1} to the full
    // state would need a move that removes no ball from a scheduled edge.
    Hypergraph h{4, {{0, 1, 2}, {0, 1, 3}}};
    ParticleConfig w1{1, 1, 0, 0}, w2{1, 1, 1, 1};
    auto res = solve_gf2(build_system(h, w1, w2));
    REQUIRE(res.sat);
    CHECK(!is_reachable(h, w1, w2));
    CHECK(!witness_path(h, w1, w2).has_value());
}

namespace {

void check_witness(const Hypergraph& h, const ParticleConfig& w1, const ParticleConfig& w2) {
    auto path = witness_path(h, w1, w2);
    REQUIRE(path.has_value());
    ParticleConfig cur = w1;
    for (int e : *path) {
        REQUIRE(switch_is_legal(h, cur, e));
        apply_switch(h, cur, e);
    }
    REQUIRE(cur == w2);
    long long bound = static_cast<long long>(h.n) * h.edge_count();
    REQUIRE(static_cast<long long>(path->size()) <= bound * bound);
}

}  // namespace

TEST_CASE("witness_path basics") {
    Hypergraph h{3, {{0, 1, 2}}};
    auto empty = witness_path(h, ParticleConfig{1, 0, 0}, ParticleConfig{1, 0, 0});
    REQUIRE(empty.has_value());
    CHECK(empty->empty());

    auto one = witness_path(h, ParticleConfig{1, 0, 0}, ParticleConfig{0, 1, 1});
    REQUIRE(one.has_value());
    CHECK(*one == std::vector<int>{0});

    CHECK(!witness_path(h, ParticleConfig{0, 0, 0}, ParticleConfig{1, 1, 1}).has_value());
}

TEST_CASE("witness_path replays legally on the exhaustive small family") {
    auto family = oracle::connected_family(4, 3);
    for (const auto& h : family) {
        oracle::ReachOracle orc(h);
        for (oracle::Mask w1 = 1; w1 < (oracle::Mask(1) << h.n); ++w1) {
            for (oracle::Mask w2 = 0; w2 < (oracle::Mask(1) << h.n); ++w2) {
                if (!orc.reachable(w1, w2)) continue;
                check_witness(h, oracle::to_config(w1, h.n), oracle::to_config(w2, h.n));
            }
        }
    }
}

TEST_CASE("witness_path on random larger hypergraphs") {
    Rng rng(4242);
    int done = 0;
    while (done < 300) {
        int n = 5 + static_cast<int>(rng.index(4));  // 5..8 vertices
        int m = 2 + static_cast<int>(rng.index(4));  // 2..5 hyperedges
        Hypergraph h;
        h.n = n;
        for (int i = 0; i < m; ++i) {
            int sz = 3 + static_cast<int>(rng.index(static_cast<std::size_t>(n) - 2));
            std::vector<int> pool(n);
            for (int v = 0; v < n; ++v) pool[v] = v;
            for (int k = 0; k < sz; ++k)
                std::swap(pool[k], pool[k + rng.index(static_cast<std::size_t>(n - k))]);
            std::vector<int> e(pool.begin(), pool.begin() + sz);
            std::sort(e.begin(), e.end());
            h.edges.push_back(std::move(e));
        }
        if (!h.is_connected()) continue;
        oracle::Mask w1 = 1 + static_cast<oracle::Mask>(rng.index((1u << n) - 1));
        auto reachable = oracle::reachable_states(h, w1);
        oracle::Mask w2 = reachable[rng.index(reachable.size())];
        check_witness(h, oracle::to_config(w1, n), oracle::to_config(w2, n));
        ++done;
    }
}

TEST_CASE("recurrent-state classification for graph duals") {
    auto tc = generate_triadic_cycle(8);
    auto c1 = classify_recurrent_graphdual(tc, tc.all_negative_state());
    CHECK(c1.theorem_case == 1);
    CHECK(c1.cls == RecurrentClass::BalancedReachable);

    auto k4 = complete_signed_graph(4);
    EdgeState even = k4.all_positive_state();
    even[0] = -1;  // two imbalanced triangles
    REQUIRE(k4.count_imbalanced(even) == 2);
    auto c2 = classify_recurrent_graphdual(k4, even);
    CHECK(c2.theorem_case == 2);
    CHECK(c2.cls == RecurrentClass::BalancedReachable);

    // On a 2-regular simplex the product of all triangle signs is the
    // product of every edge label squared, i.e. +1: the imbalance count is
    // even in every state, so the odd case never arises from an edge state.
    for (unsigned m = 0; m < 64; ++m) {
        EdgeState s(6);
        for (int e = 0; e < 6; ++e) s[e] = (m >> e) & 1 ? -1 : 1;
        CHECK(k4.count_imbalanced(s) % 2 == 0);
        CHECK(classify_recurrent_graphdual(k4, s).theorem_case == 2);
    }

    // Another 2-regular simplex (the n=6 circulant degeneration).
    auto c6 = generate_triadic_cycle(6);
    REQUIRE(c6.is_2_regular_simplex());
    auto c4 = classify_recurrent_graphdual(c6, c6.all_negative_state());
    CHECK(c4.theorem_case == 2);
    CHECK(c4.cls == RecurrentClass::BalancedReachable);

    // K5: edges in three triangles, the dual is not a graph.
    auto k5 = complete_signed_graph(5);
    CHECK_THROWS_AS(classify_recurrent_graphdual(k5, k5.all_positive_state()),
                    std::invalid_argument);
    // Disconnected dual.
    SignedGraph two(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}});
    CHECK_THROWS_AS(classify_recurrent_graphdual(two, two.all_positive_state()),
                    std::invalid_argument);
}
