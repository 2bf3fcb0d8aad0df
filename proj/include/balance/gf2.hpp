#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "balance/triadic_dual.hpp"

namespace balance {

// Boolean linear system: one variable z_e per hyperedge, one row per vertex.
// Rows with no variables (empty left-hand sums) are allowed.
struct Gf2System {
    struct Row {
        std::vector<int> vars;
        std::uint8_t rhs = 0;
    };
    int num_vars = 0;
    std::vector<Row> rows;
};

struct Gf2Solution {
    std::vector<std::uint8_t> assignment;
    // Basis of the homogeneous solution space.
    std::vector<std::vector<std::uint8_t>> kernel;
};

struct Gf2Result {
    bool sat = false;
    Gf2Solution solution;
    // On UNSAT: indices of input rows whose sum reads 0 = 1.
    std::vector<int> certificate;
};

// Row for vertex v: sum of z_e over hyperedges containing v = w2(v) - w1(v).
Gf2System build_system(const Hypergraph& h, const ParticleConfig& w1, const ParticleConfig& w2);

Gf2Result solve_gf2(const Gf2System& sys);

// Value of var in all solutions, or nullopt if both values occur.
std::optional<int> forced_value(const Gf2Result& r, int var);

// x^(e): occupation toggled exactly on the vertices of hyperedge e.
ParticleConfig flip_config(const Hypergraph& h, const ParticleConfig& w, int e);

}  // namespace balance
