#pragma once

#include <optional>
#include <vector>

#include "balance/gf2.hpp"
#include "balance/signed_graph.hpp"
#include "balance/triadic_dual.hpp"

namespace balance {

// Exact reachability for the hyperedge switching process on hypergraphs with
// no graph edges (every hyperedge size >= 3). Solvability of the boolean
// switch-count system plus the component condition (an all-zero component
// stays all-zero) is necessary but not sufficient: scheduling a fully
// occupied hyperedge annihilates all its balls and cannot be undone, so the
// state digraph is directed. Candidate pairs passing the algebraic screen
// are confirmed by per-component search; components larger than 24 vertices
// raise std::runtime_error. Throws std::invalid_argument if a hyperedge of
// size <= 2 is present.
bool is_reachable(const Hypergraph& h, const ParticleConfig& w1, const ParticleConfig& w2);

// w2 is recurrent for the process started at w1 iff it is reachable from w1
// and lies in a terminal strongly connected component of the state digraph.
// Requires h connected, no graph edges, and w1 not all-zero; n > 24 raises
// std::runtime_error.
bool is_recurrent(const Hypergraph& h, const ParticleConfig& w1, const ParticleConfig& w2);

// A legal hyperedge schedule transforming w1 into w2, or nullopt when w2 is
// unreachable. Every scheduled hyperedge contains a ball at its scheduling
// instant; length is bounded by (|V|*|E|)^2.
std::optional<std::vector<int>> witness_path(const Hypergraph& h, const ParticleConfig& w1,
                                             const ParticleConfig& w2);

// Recurrent-state classification for graphs whose triadic dual is a
// connected graph with loops (every edge in at most two triangles).
enum class RecurrentClass {
    BalancedReachable,  // cases 1-2: the balanced states reachable from s0
    OneImbalanced,      // case 3: states with exactly one imbalanced triangle
};

struct RecurrentClassification {
    RecurrentClass cls;
    int theorem_case;  // 1, 2 or 3
};

RecurrentClassification classify_recurrent_graphdual(const SignedGraph& g, const EdgeState& s0);

}  // namespace balance
