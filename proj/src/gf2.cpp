#include "balance/gf2.hpp"

#include <stdexcept>

namespace balance {

namespace {

// Bit-packed row: variable coefficients, then one rhs bit, then one history
// bit per input row (which original rows were xor-ed into this one).
struct PackedRow {
    std::vector<std::uint64_t> bits;

    static std::size_t words(int nbits) { return (static_cast<std::size_t>(nbits) + 63) / 64; }
    bool get(int i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { bits[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void operator^=(const PackedRow& o) {
        for (std::size_t w = 0; w < bits.size(); ++w) bits[w] ^= o.bits[w];
    }
};

}  // namespace

Gf2System build_system(const Hypergraph& h, const ParticleConfig& w1, const ParticleConfig& w2) {
    if (static_cast<int>(w1.size()) != h.n || static_cast<int>(w2.size()) != h.n)
        throw std::invalid_argument("build_system: config size mismatch");
    Gf2System sys;
    sys.num_vars = h.edge_count();
    sys.rows.resize(h.n);
    auto inc = h.incidence();
    for (int v = 0; v < h.n; ++v) {
        sys.rows[v].vars = inc[v];
        sys.rows[v].rhs = static_cast<std::uint8_t>((w2[v] ^ w1[v]) & 1);
    }
    return sys;
}

Gf2Result solve_gf2(const Gf2System& sys) {
    const int n = sys.num_vars;
    const int m = static_cast<int>(sys.rows.size());
    const int total_bits = n + 1 + m;
    std::vector<PackedRow> rows(m);
    for (int r = 0; r < m; ++r) {
        rows[r].bits.assign(PackedRow::words(total_bits), 0);
        for (int v : sys.rows[r].vars) {
            if (v < 0 || v >= n) throw std::invalid_argument("solve_gf2: variable out of range");
            // Repeated mentions of the same variable cancel mod 2.
            rows[r].bits[v >> 6] ^= std::uint64_t(1) << (v & 63);
        }
        if (sys.rows[r].rhs) rows[r].set(n);
        rows[r].set(n + 1 + r);
    }

    std::vector<int> pivot_row_of_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (rows[r].get(col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < m; ++r)
            if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
        pivot_row_of_col[col] = rank;
        ++rank;
    }

    Gf2Result res;
    // A contradiction row has empty lhs and rhs 1; its history bits name the
    // combination of input rows summing to 0 = 1.
    for (int r = rank; r < m; ++r) {
        if (rows[r].get(n)) {
            res.sat = false;
            for (int i = 0; i < m; ++i)
                if (rows[r].get(n + 1 + i)) res.certificate.push_back(i);
            return res;
        }
    }
    res.sat = true;
    res.solution.assignment.assign(n, 0);
    for (int col = 0; col < n; ++col)
        if (pivot_row_of_col[col] >= 0 && rows[pivot_row_of_col[col]].get(n))
            res.solution.assignment[col] = 1;
    // One kernel vector per free column.
    for (int col = 0; col < n; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        std::vector<std::uint8_t> k(n, 0);
        k[col] = 1;
        for (int c = 0; c < n; ++c)
            if (pivot_row_of_col[c] >= 0 && rows[pivot_row_of_col[c]].get(col)) k[c] = 1;
        res.solution.kernel.push_back(std::move(k));
    }
    return res;
}

std::optional<int> forced_value(const Gf2Result& r, int var) {
    if (!r.sat) throw std::invalid_argument("forced_value: system is UNSAT");
    for (const auto& k : r.solution.kernel)
        if (k[var]) return std::nullopt;
    return static_cast<int>(r.solution.assignment[var]);
}

ParticleConfig flip_config(const Hypergraph& h, const ParticleConfig& w, int e) {
    ParticleConfig out = w;
    apply_switch(h, out, e, /*check_legal=*/false);
    return out;
}

}  // namespace balance
