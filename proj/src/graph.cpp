#include "balance/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "balance/rng.hpp"

namespace balance {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list)
    : n_(n), edges_(std::move(edge_list)), adj_(n), loops_(n, 0) {
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex index out of range");
        if (u == v) {
            ++loops_[u];
            ++total_loops_;
        } else {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
    }
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

bool Graph::is_regular(int* r) const {
    if (n_ == 0) return true;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return false;
    if (r) *r = d;
    return true;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(edges));
}

Graph circulant_cycle_chords(int n) {
    if (n < 6 || n % 2 != 0)
        throw std::invalid_argument("circulant_cycle_chords: even n >= 6 required");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    for (int u = 0; u < n / 2; ++u) edges.emplace_back(u, u + n / 2);
    return Graph(n, std::move(edges));
}

Graph random_regular_graph(int n, int r, std::uint64_t seed) {
    if (r >= n || (static_cast<long long>(n) * r) % 2 != 0)
        throw std::invalid_argument("random_regular_graph: infeasible (n, r)");
    Rng rng(seed);
    // Configuration model with restarts until the pairing is simple.
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * r);
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < r; ++k) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.index(i)]);
        std::vector<std::pair<int, int>> edges;
        std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen[u][v]) {
                ok = false;
                break;
            }
            seen[u][v] = seen[v][u] = 1;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (ok) return Graph(n, std::move(edges));
    }
    throw std::runtime_error("random_regular_graph: rejection sampling failed");
}

Graph random_cubic_graph(int n, std::uint64_t seed) { return random_regular_graph(n, 3, seed); }

}  // namespace balance
