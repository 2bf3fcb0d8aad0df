#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace balance {

// Mutable +/-1 edge-label state, separate from the immutable topology.
using EdgeState = std::vector<std::int8_t>;

struct SignedEdge {
    int u;
    int v;
    int sign;  // +1 or -1
};

// Undirected graph with +/-1 edge labels and a precomputed triangle list.
// Topology (vertices, edges, triangles, incidences) is immutable after
// construction and safe to share across threads; states are values.
class SignedGraph {
  public:
    SignedGraph(int n_vertices, const std::vector<SignedEdge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edge_u_.size()); }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }

    std::pair<int, int> edge(int e) const { return {edge_u_[e], edge_v_[e]}; }
    // Sorted canonical vertex triple.
    const std::array<int, 3>& triangle(int t) const { return triangles_[t]; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    // Edge ids of triangle t.
    const std::array<int, 3>& triangle_edges(int t) const { return triangle_edges_[t]; }
    // Triangle ids containing edge e.
    const std::vector<int>& edge_triangles(int e) const { return edge_triangles_[e]; }
    int edge_id(int u, int v) const;  // -1 if absent

    // The +/-1 labels given at construction, as a state vector.
    EdgeState initial_state() const { return initial_state_; }
    EdgeState all_positive_state() const { return EdgeState(edge_count(), 1); }
    EdgeState all_negative_state() const { return EdgeState(edge_count(), -1); }

    bool is_balanced(const EdgeState& s, int t) const;
    int count_imbalanced(const EdgeState& s) const;
    bool is_triadic_simplex() const;
    bool is_2_regular_simplex() const;

  private:
    int n_;
    std::vector<int> edge_u_, edge_v_;
    EdgeState initial_state_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::array<int, 3>> triangle_edges_;
    std::vector<std::vector<int>> edge_triangles_;
    std::vector<std::vector<int>> adj_;
};

// Pure flip: returns a copy with the label of e negated.
EdgeState flip_edge(const EdgeState& s, int e);

// Exhaustive 3-clique enumeration (the construction-time list equals this).
std::vector<std::array<int, 3>> enumerate_triangles(const SignedGraph& g);

// The circular chain of n triangles in which consecutive triangles share an
// edge and each triangle keeps one private edge (vertices Z_n, edges {i,i+1}
// and {i,i+2}). For n >= 7 this has exactly n triangles and matches the
// n-cycle-with-self-loops dual; for n in {3..6} the wrap-around chords
// coincide or overlap and the graph degenerates (K3, K4, K5, C6(1,2)).
SignedGraph generate_triadic_cycle(int n, int sign = 1);

SignedGraph complete_signed_graph(int n, int sign = 1);

// Triangles of a k x k triangular grid section, open boundary; 2*k*k triangles.
SignedGraph triangular_lattice_section(int k, int sign = 1);

// Text edge-list format: one line per edge, "u v sign", '#' comments.
SignedGraph read_signed_graph(std::istream& in);
SignedGraph read_signed_graph_file(const std::string& path);
void write_signed_graph(std::ostream& out, const SignedGraph& g, const EdgeState& s);

}  // namespace balance
