#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "balance/graph.hpp"
#include "balance/signed_graph.hpp"

namespace balance {

// 0/1 ball occupation indexed by hypergraph vertex.
using ParticleConfig = std::vector<std::uint8_t>;

// Undirected hypergraph with self-loops (size-1 hyperedges). Hyperedges are
// stored with sorted vertex ids; self-loop multiplicity is kept through
// distinct hyperedge ids.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    // Hyperedge ids incident to each vertex.
    std::vector<std::vector<int>> incidence() const;
    // Connected components as vertex lists; connectivity through shared
    // hyperedges, self-loops contribute nothing.
    std::vector<std::vector<int>> components() const;
    bool is_connected() const;
};

// Dual of a signed graph: one vertex per triangle, one hyperedge per source
// edge. Hyperedge i corresponds to source edge i.
struct TriadicDual {
    Hypergraph h;
};

// Errors if some edge of g lies in no triangle (names the edge).
TriadicDual build_triadic_dual(const SignedGraph& g);

bool dual_is_graph(const Hypergraph& h);       // every hyperedge size <= 2
bool has_no_graph_edges(const Hypergraph& h);  // every hyperedge size >= 3

inline bool dual_is_graph(const TriadicDual& d) { return dual_is_graph(d.h); }
inline bool dual_is_connected(const TriadicDual& d) { return d.h.is_connected(); }
inline bool has_no_graph_edges(const TriadicDual& d) { return has_no_graph_edges(d.h); }

// occupation(t) = 1 iff triangle t is imbalanced in the given state.
ParticleConfig state_to_particles(const SignedGraph& g, const EdgeState& s);

// Complement occupation on the hyperedge's vertices. With check_legal the
// hyperedge must contain at least one ball.
void apply_switch(const Hypergraph& h, ParticleConfig& w, int e, bool check_legal = true);
bool switch_is_legal(const Hypergraph& h, const ParticleConfig& w, int e);

// View of a dual whose hyperedges all have size <= 2 as a plain graph
// (size-1 hyperedges become loops, size-2 become edges; edge ids preserved).
Graph dual_as_graph(const Hypergraph& h);

// Export format: one line per hyperedge, "edge_id : t1 t2 ...".
void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);

// Config files: one 0/1 value per vertex line.
ParticleConfig read_config(std::istream& in);
ParticleConfig read_config_file(const std::string& path);
void write_config(std::ostream& out, const ParticleConfig& w);

}  // namespace balance
