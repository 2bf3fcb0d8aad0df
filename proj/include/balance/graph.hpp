#pragma once

#include <string>
#include <utility>
#include <vector>

namespace balance {

// Plain undirected graph. Self-loops are stored in the edge list (u == v)
// but never appear in adjacency lists: the walk kernel and all cut
// computations ignore them, matching the 1/deg transition convention.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int loop_count(int v) const { return loops_[v]; }
    bool has_loops() const { return total_loops_ > 0; }

    bool is_connected() const;
    // Returns true and sets r if every vertex has the same (loopless) degree.
    bool is_regular(int* r = nullptr) const;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> loops_;
    int total_loops_ = 0;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
// Cubic circulant: n-cycle plus antipodal chords (n even, n >= 6).
Graph circulant_cycle_chords(int n);
// Random 3-regular simple graph via the configuration model (rejection).
Graph random_cubic_graph(int n, std::uint64_t seed);
// Random r-regular simple graph (rejection sampling; r*n must be even).
Graph random_regular_graph(int n, int r, std::uint64_t seed);

}  // namespace balance
