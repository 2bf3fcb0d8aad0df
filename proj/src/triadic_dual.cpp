#include "balance/triadic_dual.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace balance {

std::vector<std::vector<int>> Hypergraph::incidence() const {
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < edge_count(); ++e)
        for (int v : edges[e]) inc[v].push_back(e);
    return inc;
}

std::vector<std::vector<int>> Hypergraph::components() const {
    auto inc = incidence();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int e : inc[v])
                for (int w : edges[e])
                    if (comp[w] < 0) {
                        comp[w] = id;
                        stack.push_back(w);
                    }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool Hypergraph::is_connected() const { return components().size() <= 1; }

TriadicDual build_triadic_dual(const SignedGraph& g) {
    TriadicDual d;
    d.h.n = g.triangle_count();
    d.h.edges.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ts = g.edge_triangles(e);
        if (ts.empty()) {
            auto [u, v] = g.edge(e);
            throw std::invalid_argument("build_triadic_dual: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") belongs to no triangle");
        }
        d.h.edges[e] = ts;  // already sorted by construction
    }
    return d;
}

bool dual_is_graph(const Hypergraph& h) {
    return std::all_of(h.edges.begin(), h.edges.end(),
                       [](const auto& e) { return e.size() <= 2; });
}

bool has_no_graph_edges(const Hypergraph& h) {
    return std::all_of(h.edges.begin(), h.edges.end(),
                       [](const auto& e) { return e.size() >= 3; });
}

ParticleConfig state_to_particles(const SignedGraph& g, const EdgeState& s) {
    ParticleConfig w(g.triangle_count(), 0);
    for (int t = 0; t < g.triangle_count(); ++t)
        if (!g.is_balanced(s, t)) w[t] = 1;
    return w;
}

bool switch_is_legal(const Hypergraph& h, const ParticleConfig& w, int e) {
    for (int v : h.edges[e])
        if (w[v]) return true;
    return false;
}

void apply_switch(const Hypergraph& h, ParticleConfig& w, int e, bool check_legal) {
    if (e < 0 || e >= h.edge_count()) throw std::invalid_argument("apply_switch: bad hyperedge id");
    if (check_legal && !switch_is_legal(h, w, e))
        throw std::invalid_argument("apply_switch: hyperedge " + std::to_string(e) +
                                    " contains no ball");
    for (int v : h.edges[e]) w[v] ^= 1;
}

Graph dual_as_graph(const Hypergraph& h) {
    if (!dual_is_graph(h)) throw std::invalid_argument("dual_as_graph: hyperedge of size > 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        if (e.size() == 1)
            edges.emplace_back(e[0], e[0]);
        else
            edges.emplace_back(e[0], e[1]);
    }
    return Graph(h.n, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    for (int e = 0; e < h.edge_count(); ++e) {
        out << e << " :";
        for (int v : h.edges[e]) out << ' ' << v;
        out << '\n';
    }
}

Hypergraph read_hypergraph(std::istream& in) {
    Hypergraph h;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            std::istringstream check(line);
            std::string rest;
            if (check >> rest) throw std::invalid_argument("hypergraph: malformed line: " + line);
            continue;
        }
        std::istringstream vs(line.substr(colon + 1));
        std::vector<int> verts;
        int v;
        while (vs >> v) {
            if (v < 0) throw std::invalid_argument("hypergraph: negative vertex id");
            verts.push_back(v);
            h.n = std::max(h.n, v + 1);
        }
        if (verts.empty()) throw std::invalid_argument("hypergraph: empty hyperedge: " + line);
        std::sort(verts.begin(), verts.end());
        h.edges.push_back(std::move(verts));
    }
    return h;
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open hypergraph file: " + path);
    return read_hypergraph(in);
}

ParticleConfig read_config(std::istream& in) {
    ParticleConfig w;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int b;
        if (ls >> b) {
            if (b != 0 && b != 1) throw std::invalid_argument("config: values must be 0 or 1");
            w.push_back(static_cast<std::uint8_t>(b));
        }
    }
    return w;
}

ParticleConfig read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return read_config(in);
}

void write_config(std::ostream& out, const ParticleConfig& w) {
    for (auto b : w) out << static_cast<int>(b) << '\n';
}

}  // namespace balance
