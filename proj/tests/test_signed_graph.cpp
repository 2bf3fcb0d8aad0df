#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "balance/rng.hpp"
#include "balance/signed_graph.hpp"

using namespace balance;

namespace {

SignedGraph k3() {
    return SignedGraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
}

SignedGraph two_triangles_shared_edge() {
    // Triangles {0,1,2} and {1,2,3} sharing edge {1,2}.
    return SignedGraph(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}

}  // namespace

TEST_CASE("triangle enumeration on standard graphs") {
    CHECK(k3().triangle_count() == 1);
    CHECK(complete_signed_graph(4).triangle_count() == 4);
    CHECK(generate_triadic_cycle(18).triangle_count() == 18);
    // Construction-time list equals brute-force 3-clique enumeration.
    auto g = generate_triadic_cycle(9);
    CHECK(g.triangles() == enumerate_triangles(g));
    auto k4 = complete_signed_graph(4);
    CHECK(k4.triangles() == enumerate_triangles(k4));
}

TEST_CASE("is_balanced follows the label product") {
    auto g = k3();
    EdgeState s = g.all_positive_state();
    CHECK(g.is_balanced(s, 0));
    s[2] = -1;  // (+1, +1, -1)
    CHECK(!g.is_balanced(s, 0));
    s[1] = -1;  // (+1, -1, -1)
    CHECK(g.is_balanced(s, 0));
    CHECK_THROWS_AS(g.is_balanced(s, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.is_balanced(s, -1), std::invalid_argument);
}

TEST_CASE("count_imbalanced") {
    auto tc = generate_triadic_cycle(8);
    CHECK(tc.count_imbalanced(tc.all_positive_state()) == 0);

    auto g = k3();
    EdgeState s = g.all_positive_state();
    s[0] = -1;
    CHECK(g.count_imbalanced(s) == 1);

    // One negative private (chord) edge per triangle: every triangle has
    // exactly one negative edge, so all 8 are imbalanced.
    EdgeState ts = tc.all_positive_state();
    for (int e = 0; e < tc.edge_count(); ++e)
        if (tc.edge_triangles(e).size() == 1) ts[e] = -1;
    CHECK(tc.count_imbalanced(ts) == 8);
}

TEST_CASE("flip_edge involution and effects") {
    auto g = k3();
    EdgeState s = g.all_positive_state();
    CHECK(flip_edge(flip_edge(s, 1), 1) == s);
    CHECK(g.count_imbalanced(flip_edge(s, 1)) == 1);

    auto h = two_triangles_shared_edge();
    EdgeState t = h.all_positive_state();
    int shared = h.edge_id(1, 2);
    t[shared] = -1;
    CHECK(h.count_imbalanced(t) == 2);
    CHECK(h.count_imbalanced(flip_edge(t, shared)) == 0);
}

TEST_CASE("generate_triadic_cycle structure") {
    CHECK_THROWS_AS(generate_triadic_cycle(2), std::invalid_argument);
    for (int n : {7, 8, 11, 18}) {
        auto g = generate_triadic_cycle(n);
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == 2 * n);
        CHECK(g.triangle_count() == n);
        int private_total = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            CHECK(g.edge_triangles(e).size() <= 2);
            if (g.edge_triangles(e).size() == 1) ++private_total;
        }
        // Each triangle keeps exactly one private edge.
        CHECK(private_total == n);
        for (int t = 0; t < g.triangle_count(); ++t) {
            int private_here = 0;
            for (int e : g.triangle_edges(t))
                if (g.edge_triangles(e).size() == 1) ++private_here;
            CHECK(private_here == 1);
        }
        CHECK(g.is_triadic_simplex());
    }
    // Small n degenerate to dense circulants: the wrap-around chords overlap,
    // so the triangle count deviates from n below 7.
    CHECK(generate_triadic_cycle(3).triangle_count() == 1);   // K3
    CHECK(generate_triadic_cycle(4).triangle_count() == 4);   // K4
    CHECK(generate_triadic_cycle(5).triangle_count() == 10);  // K5
    CHECK(generate_triadic_cycle(6).triangle_count() == 8);   // C6(1,2)
    CHECK(generate_triadic_cycle(4).is_triadic_simplex());
}

TEST_CASE("simplex predicates") {
    CHECK(k3().is_triadic_simplex());
    SignedGraph p3(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(!p3.is_triadic_simplex());
    CHECK(generate_triadic_cycle(10).is_triadic_simplex());

    CHECK(complete_signed_graph(4).is_2_regular_simplex());
    CHECK(!generate_triadic_cycle(10).is_2_regular_simplex());
    CHECK(!k3().is_2_regular_simplex());
}

TEST_CASE("construction rejects bad inputs") {
    CHECK_THROWS(SignedGraph(3, {{0, 0, 1}}));
    CHECK_THROWS(SignedGraph(3, {{0, 1, 1}, {1, 0, 1}}));
    CHECK_THROWS(SignedGraph(3, {{0, 1, 2}}));
    CHECK_THROWS(SignedGraph(2, {{0, 3, 1}}));
}

TEST_CASE("flip locality: only incident triangles change balance") {
    Rng rng(7);
    auto g = generate_triadic_cycle(11);
    for (int rep = 0; rep < 50; ++rep) {
        EdgeState s(g.edge_count());
        for (auto& x : s) x = rng.bernoulli(0.5) ? 1 : -1;
        int e = static_cast<int>(rng.index(g.edge_count()));
        EdgeState s2 = flip_edge(s, e);
        std::set<int> incident(g.edge_triangles(e).begin(), g.edge_triangles(e).end());
        for (int t = 0; t < g.triangle_count(); ++t) {
            if (incident.count(t))
                CHECK(g.is_balanced(s, t) != g.is_balanced(s2, t));
            else
                CHECK(g.is_balanced(s, t) == g.is_balanced(s2, t));
        }
    }
}

TEST_CASE("parity law on 2-regular simplexes") {
    Rng rng(13);
    auto g = complete_signed_graph(4);
    REQUIRE(g.is_2_regular_simplex());
    EdgeState s(g.edge_count());
    for (auto& x : s) x = rng.bernoulli(0.5) ? 1 : -1;
    for (int rep = 0; rep < 200; ++rep) {
        int before = g.count_imbalanced(s) % 2;
        s = flip_edge(s, static_cast<int>(rng.index(g.edge_count())));
        CHECK(g.count_imbalanced(s) % 2 == before);
    }
}

TEST_CASE("triangular lattice sections") {
    auto g1 = triangular_lattice_section(1);
    CHECK(g1.vertex_count() == 4);
    CHECK(g1.triangle_count() == 2);
    auto g3 = triangular_lattice_section(3);
    CHECK(g3.vertex_count() == 16);
    CHECK(g3.triangle_count() == 18);
    CHECK(g3.is_triadic_simplex());
    for (int e = 0; e < g3.edge_count(); ++e) CHECK(g3.edge_triangles(e).size() <= 2);
}

TEST_CASE("edge-list IO round trip") {
    auto g = generate_triadic_cycle(7);
    EdgeState s = g.all_positive_state();
    s[3] = -1;
    std::ostringstream out;
    write_signed_graph(out, g, s);
    std::istringstream in(out.str());
    auto h = read_signed_graph(in);
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
    CHECK(h.initial_state() == s);
    for (int e = 0; e < g.edge_count(); ++e) CHECK(h.edge(e) == g.edge(e));
}
