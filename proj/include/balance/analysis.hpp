#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "balance/graph.hpp"
#include "balance/rational.hpp"

namespace balance {

// Cheeger time of a connected graph:
//   tau_c = sup_A pi[A] pi[A^c] / Q(A, A^c),
// pi uniform and Q(A, A^c) = (1/n) sum_{i in A} cross(i) deg(i), so that on
// an r-regular graph the value is sup_A |A||A^c| / (r n |E(A, A^c)|).
// Computed in exact rational arithmetic.
struct CheegerReport {
    Rat value;
    std::vector<int> witness;  // a subset attaining (exact) or achieving (sampled) the value
    std::string method;        // "exact" or "sampled"
    int n = 0;
};

// Exhaustive enumeration over all ordered cuts; throws if the graph is
// disconnected, has fewer than 2 vertices, or has more than max_exact_n
// vertices.
CheegerReport cheeger_time_exact(const Graph& g, int max_exact_n = 24);

// Convenience form for r-regular graphs (identical value, checked input).
CheegerReport cheeger_time_regular(const Graph& g);

// Monte-Carlo lower bound for large graphs: random subsets plus BFS balls.
CheegerReport cheeger_time_sampled(const Graph& g, int samples, std::uint64_t seed);

// Minimum number of edges whose removal disconnects the graph (global edge
// connectivity, Edmonds-Karp; self-loops ignored).
int edge_connectivity(const Graph& g);

struct ConvergenceBound {
    Rat tau_c;
    double exponent = 0.0;       // min{3, 2 + log2 tau_c}
    double bound_value = 0.0;    // n^exponent (constant factor not pinned)
    bool exponent_below_two = false;  // tau_c < 1: the 2 + log2 term went under 2
    int n = 0;
};

// Mean-convergence exponent for the balance dynamics read through the dual
// walk comparison; requires the dual graph connected, loop-free and
// 3-regular.
ConvergenceBound convergence_bound(const Graph& dual);

}  // namespace balance
