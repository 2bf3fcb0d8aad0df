#include "balance/signed_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace balance {

SignedGraph::SignedGraph(int n_vertices, const std::vector<SignedEdge>& edges) : n_(n_vertices) {
    if (n_ < 0) throw std::invalid_argument("SignedGraph: negative vertex count");
    adj_.resize(n_);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
        if (u < 0 || v >= n_) throw std::invalid_argument("SignedGraph: vertex out of range");
        if (u == v) throw std::invalid_argument("SignedGraph: self-loop edge rejected");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("SignedGraph: duplicate edge rejected");
        if (e.sign != 1 && e.sign != -1)
            throw std::invalid_argument("SignedGraph: edge sign must be +1 or -1");
        int id = static_cast<int>(edge_u_.size());
        edge_u_.push_back(u);
        edge_v_.push_back(v);
        initial_state_.push_back(static_cast<std::int8_t>(e.sign));
        adj_[u].push_back(id);
        adj_[v].push_back(id);
    }
    // Triangle enumeration: for each edge (u,v), common neighbors w > v give
    // the canonical sorted triple exactly once.
    std::vector<std::vector<char>> am(n_, std::vector<char>(n_, 0));
    for (int e = 0; e < edge_count(); ++e) am[edge_u_[e]][edge_v_[e]] = am[edge_v_[e]][edge_u_[e]] = 1;
    for (int e = 0; e < edge_count(); ++e) {
        int u = edge_u_[e], v = edge_v_[e];
        for (int w = v + 1; w < n_; ++w) {
            if (am[u][w] && am[v][w]) triangles_.push_back({u, v, w});
        }
    }
    std::sort(triangles_.begin(), triangles_.end());
    edge_triangles_.resize(edge_count());
    triangle_edges_.resize(triangles_.size());
    for (int t = 0; t < triangle_count(); ++t) {
        const auto& [a, b, c] = triangles_[t];
        triangle_edges_[t] = {edge_id(a, b), edge_id(a, c), edge_id(b, c)};
        for (int e : triangle_edges_[t]) edge_triangles_[e].push_back(t);
    }
}

int SignedGraph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int e : adj_[u])
        if (edge_u_[e] == u && edge_v_[e] == v) return e;
    return -1;
}

bool SignedGraph::is_balanced(const EdgeState& s, int t) const {
    if (t < 0 || t >= triangle_count()) throw std::invalid_argument("is_balanced: unknown triangle");
    const auto& te = triangle_edges_[t];
    return s[te[0]] * s[te[1]] * s[te[2]] == 1;
}

int SignedGraph::count_imbalanced(const EdgeState& s) const {
    int count = 0;
    for (int t = 0; t < triangle_count(); ++t)
        if (!is_balanced(s, t)) ++count;
    return count;
}

bool SignedGraph::is_triadic_simplex() const {
    for (const auto& ts : edge_triangles_)
        if (ts.empty()) return false;
    return true;
}

bool SignedGraph::is_2_regular_simplex() const {
    for (const auto& ts : edge_triangles_)
        if (ts.size() != 2) return false;
    return true;
}

EdgeState flip_edge(const EdgeState& s, int e) {
    if (e < 0 || e >= static_cast<int>(s.size()))
        throw std::invalid_argument("flip_edge: edge id out of range");
    EdgeState out = s;
    out[e] = static_cast<std::int8_t>(-out[e]);
    return out;
}

std::vector<std::array<int, 3>> enumerate_triangles(const SignedGraph& g) { return g.triangles(); }

SignedGraph generate_triadic_cycle(int n, int sign) {
    if (n < 3) throw std::invalid_argument("generate_triadic_cycle: n >= 3 required");
    std::set<std::pair<int, int>> dedup;
    std::vector<SignedEdge> edges;
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (u != v && dedup.insert({u, v}).second) edges.push_back({u, v, sign});
    };
    for (int i = 0; i < n; ++i) {
        add(i, (i + 1) % n);
        add(i, (i + 2) % n);
    }
    return SignedGraph(n, edges);
}

SignedGraph complete_signed_graph(int n, int sign) {
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, sign});
    return SignedGraph(n, edges);
}

SignedGraph triangular_lattice_section(int k, int sign) {
    if (k < 1) throw std::invalid_argument("triangular_lattice_section: k >= 1 required");
    auto vid = [k](int i, int j) { return i * (k + 1) + j; };
    std::vector<SignedEdge> edges;
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; j <= k; ++j) {
            if (i < k) edges.push_back({vid(i, j), vid(i + 1, j), sign});
            if (j < k) edges.push_back({vid(i, j), vid(i, j + 1), sign});
            if (i < k && j < k) edges.push_back({vid(i + 1, j), vid(i, j + 1), sign});
        }
    }
    return SignedGraph((k + 1) * (k + 1), edges);
}

SignedGraph read_signed_graph(std::istream& in) {
    std::vector<SignedEdge> edges;
    int max_vertex = -1;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int u, v, s;
        if (!(ls >> u >> v >> s)) {
            std::string rest;
            std::istringstream check(line);
            if (check >> rest) throw std::invalid_argument("edge list: malformed line: " + line);
            continue;
        }
        if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative vertex id");
        edges.push_back({u, v, s});
        max_vertex = std::max({max_vertex, u, v});
    }
    return SignedGraph(max_vertex + 1, edges);
}

SignedGraph read_signed_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_signed_graph(in);
}

void write_signed_graph(std::ostream& out, const SignedGraph& g, const EdgeState& s) {
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out << u << ' ' << v << ' ' << (s[e] > 0 ? "+1" : "-1") << '\n';
    }
}

}  // namespace balance
