#include "balance/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "balance/rng.hpp"

namespace balance {

namespace {

// ratio(A) = |A| |A^c| / (n * S) with S = sum_{i in A} cross(i) * deg(i);
// (1/n) S is the cut flow, normalized so that on an r-regular graph the
// value reduces to |A||A^c| / (r n |E(A, A^c)|).
Rat cut_ratio(long long a_size, long long n, long long S) {
    if (S == 0) throw std::runtime_error("cheeger: empty cut on a connected graph");
    return Rat(a_size * (n - a_size), n * S);
}

void check_degrees(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("cheeger: isolated vertex");
}

Rat ratio_of_subset(const Graph& g, const std::vector<std::uint8_t>& in_a) {
    const int n = g.vertex_count();
    long long a_size = 0, S = 0;
    for (int v = 0; v < n; ++v) {
        if (!in_a[v]) continue;
        ++a_size;
        long long cross = 0;
        for (int u : g.neighbors(v))
            if (!in_a[u]) ++cross;
        S += cross * g.degree(v);
    }
    return cut_ratio(a_size, n, S);
}

}  // namespace

CheegerReport cheeger_time_exact(const Graph& g, int max_exact_n) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("cheeger: need at least 2 vertices");
    if (n > max_exact_n) throw std::invalid_argument("cheeger: graph too large for exact mode");
    if (!g.is_connected()) throw std::invalid_argument("cheeger: graph must be connected");

    check_degrees(g);
    std::vector<long long> w(n);  // deg(v)
    for (int v = 0; v < n; ++v) w[v] = g.degree(v);

    // Gray-code walk over all subsets; cross[v] = neighbors of v outside A.
    std::vector<std::uint8_t> in_a(n, 0);
    std::vector<long long> cross(n);
    for (int v = 0; v < n; ++v) cross[v] = g.degree(v);
    long long a_size = 0, S = 0;

    Rat best(0);
    std::uint32_t best_mask = 0;
    const std::uint64_t total = std::uint64_t(1) << n;
    std::uint32_t mask = 0;
    for (std::uint64_t k = 1; k < total; ++k) {
        int v = std::countr_zero(k);
        if (!in_a[v]) {
            in_a[v] = 1;
            ++a_size;
            S += cross[v] * w[v];
            for (int u : g.neighbors(v)) {
                --cross[u];
                if (in_a[u]) S -= w[u];
            }
        } else {
            in_a[v] = 0;
            --a_size;
            S -= cross[v] * w[v];
            for (int u : g.neighbors(v)) {
                ++cross[u];
                if (in_a[u]) S += w[u];
            }
        }
        mask ^= std::uint32_t(1) << v;
        if (a_size == 0 || a_size == n) continue;
        Rat r = cut_ratio(a_size, n, S);
        if (r > best) {
            best = r;
            best_mask = mask;
        }
    }

    CheegerReport rep;
    rep.value = best;
    rep.method = "exact";
    rep.n = n;
    for (int v = 0; v < n; ++v)
        if (best_mask & (std::uint32_t(1) << v)) rep.witness.push_back(v);
    return rep;
}

CheegerReport cheeger_time_regular(const Graph& g) {
    int r = 0;
    if (!g.is_regular(&r)) throw std::invalid_argument("cheeger: graph is not regular");
    return cheeger_time_exact(g);
}

CheegerReport cheeger_time_sampled(const Graph& g, int samples, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("cheeger: need at least 2 vertices");
    if (!g.is_connected()) throw std::invalid_argument("cheeger: graph must be connected");
    check_degrees(g);

    Rng rng(seed);
    Rat best(0);
    std::vector<int> best_set;

    auto consider = [&](const std::vector<std::uint8_t>& in_a) {
        long long a_size = std::count(in_a.begin(), in_a.end(), std::uint8_t(1));
        if (a_size == 0 || a_size == n) return;
        Rat r = ratio_of_subset(g, in_a);
        if (r > best) {
            best = r;
            best_set.clear();
            for (int v = 0; v < n; ++v)
                if (in_a[v]) best_set.push_back(v);
        }
    };

    // BFS balls around every vertex capture the bottleneck cuts of sparse
    // graphs; random subsets cover the rest.
    for (int src = 0; src < n; ++src) {
        std::vector<int> order;
        std::vector<std::uint8_t> seen(n, 0);
        std::queue<int> q;
        q.push(src);
        seen[src] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
        std::vector<std::uint8_t> in_a(n, 0);
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            in_a[order[i]] = 1;
            consider(in_a);
        }
    }
    for (int s = 0; s < samples; ++s) {
        std::vector<std::uint8_t> in_a(n, 0);
        for (int v = 0; v < n; ++v) in_a[v] = rng.bernoulli(0.5) ? 1 : 0;
        consider(in_a);
    }

    CheegerReport rep;
    rep.value = best;
    rep.witness = best_set;
    rep.method = "sampled";
    rep.n = n;
    return rep;
}

namespace {

// Unit-capacity max flow between s and t (Edmonds-Karp on an adjacency-matrix
// residual network; graphs here are small).
int max_flow(const Graph& g, int s, int t) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) {
        if (u == v) continue;
        cap[u][v] += 1;
        cap[v][u] += 1;
    }
    int flow = 0;
    while (true) {
        std::vector<int> prev(n, -1);
        prev[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && prev[t] < 0) {
            int v = q.front();
            q.pop();
            for (int u = 0; u < n; ++u)
                if (prev[u] < 0 && cap[v][u] > 0) {
                    prev[u] = v;
                    q.push(u);
                }
        }
        if (prev[t] < 0) break;
        for (int v = t; v != s; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int edge_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("edge_connectivity: need at least 2 vertices");
    if (!g.is_connected()) return 0;
    int best = g.edge_count() + 1;
    for (int t = 1; t < n; ++t) best = std::min(best, max_flow(g, 0, t));
    return best;
}

ConvergenceBound convergence_bound(const Graph& dual) {
    int r = 0;
    if (dual.has_loops())
        throw std::invalid_argument("convergence_bound: dual graph must be loop-free");
    if (!dual.is_regular(&r) || r != 3)
        throw std::invalid_argument("convergence_bound: dual graph must be 3-regular");
    if (!dual.is_connected())
        throw std::invalid_argument("convergence_bound: dual graph must be connected");

    ConvergenceBound b;
    b.n = dual.vertex_count();
    b.tau_c = cheeger_time_exact(dual).value;
    double lg = std::log2(b.tau_c.to_double());
    b.exponent = std::min(3.0, 2.0 + lg);
    b.exponent_below_two = b.exponent < 2.0;
    b.bound_value = std::pow(static_cast<double>(b.n), b.exponent);
    return b;
}

}  // namespace balance
