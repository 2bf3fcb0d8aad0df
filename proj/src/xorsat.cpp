#include "balance/xorsat.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "balance/analysis.hpp"
#include "balance/gf2.hpp"

namespace balance {

void XorFormula::validate() const {
    if (n < 0) throw std::invalid_argument("xor formula: negative variable count");
    for (const auto& c : clauses) {
        for (int k = 0; k < 3; ++k)
            if (c.v[k] < 0 || c.v[k] >= n)
                throw std::invalid_argument("xor formula: variable index out of range");
        if (c.v[0] == c.v[1] || c.v[0] == c.v[2] || c.v[1] == c.v[2])
            throw std::invalid_argument("xor formula: repeated variable in clause");
        if (c.rhs > 1) throw std::invalid_argument("xor formula: rhs must be 0 or 1");
    }
}

bool clause_satisfied(const XorClause& c, const Assignment& a) {
    return ((a[c.v[0]] ^ a[c.v[1]] ^ a[c.v[2]]) & 1) == c.rhs;
}

int count_unsatisfied(const XorFormula& f, const Assignment& a) {
    int k = 0;
    for (const auto& c : f.clauses)
        if (!clause_satisfied(c, a)) ++k;
    return k;
}

ParticleConfig unsat_indicator(const XorFormula& f, const Assignment& a) {
    ParticleConfig w(f.m(), 0);
    for (int i = 0; i < f.m(); ++i)
        if (!clause_satisfied(f.clauses[i], a)) w[i] = 1;
    return w;
}

namespace {

// Working constraint during reduction: sorted distinct variables, any arity.
struct Constraint {
    std::vector<int> vars;
    std::uint8_t rhs = 0;
    bool alive = true;
};

bool contains(const std::vector<int>& vars, int x) {
    return std::binary_search(vars.begin(), vars.end(), x);
}

void toggle(std::vector<int>& vars, int x) {
    auto it = std::lower_bound(vars.begin(), vars.end(), x);
    if (it != vars.end() && *it == x)
        vars.erase(it);
    else
        vars.insert(it, x);
}

int shared_count(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++k;
            ++i;
            ++j;
        } else if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return k;
}

}  // namespace

std::pair<XorFormula, ReductionTrace> reduce(const XorFormula& f) {
    f.validate();
    std::vector<Constraint> cs;
    cs.reserve(f.clauses.size());
    for (const auto& c : f.clauses) {
        Constraint w;
        w.vars = {c.v[0], c.v[1], c.v[2]};
        std::sort(w.vars.begin(), w.vars.end());
        w.rhs = c.rhs;
        cs.push_back(std::move(w));
    }
    ReductionTrace trace;

    auto substitute_const = [&](int x, std::uint8_t val) {
        for (auto& c : cs) {
            if (!c.alive || !contains(c.vars, x)) continue;
            toggle(c.vars, x);
            c.rhs = static_cast<std::uint8_t>(c.rhs ^ val);
        }
    };
    auto substitute_var = [&](int z, int t, std::uint8_t lambda) {
        for (auto& c : cs) {
            if (!c.alive || !contains(c.vars, z)) continue;
            toggle(c.vars, z);
            toggle(c.vars, t);  // cancels if t already present
            c.rhs = static_cast<std::uint8_t>(c.rhs ^ lambda);
        }
    };

    // Fixed-priority rewrite loop; within each rule the lowest clause index
    // (then lowest variable) is chosen, so the trace is deterministic.
    while (true) {
        bool acted = false;

        // Degenerate arities: 0 = rhs, units, pairs.
        for (std::size_t i = 0; i < cs.size() && !acted; ++i) {
            auto& c = cs[i];
            if (!c.alive || c.vars.size() >= 3) continue;
            acted = true;
            if (c.vars.empty()) {
                if (c.rhs) {
                    trace.unsat = true;
                    return {XorFormula{f.n, {}}, trace};
                }
                c.alive = false;
            } else if (c.vars.size() == 1) {
                int x = c.vars[0];
                std::uint8_t val = c.rhs;
                c.alive = false;
                substitute_const(x, val);
                ReductionEvent ev;
                ev.kind = ReductionEvent::Unit;
                ev.var = x;
                ev.lambda = val;
                trace.events.push_back(std::move(ev));
            } else {
                int t = c.vars[0], z = c.vars[1];  // z := t ^ lambda, z the larger
                std::uint8_t lambda = c.rhs;
                c.alive = false;
                substitute_var(z, t, lambda);
                ReductionEvent ev;
                ev.kind = ReductionEvent::Substitution;
                ev.var = z;
                ev.sub_var = t;
                ev.lambda = lambda;
                trace.events.push_back(std::move(ev));
            }
        }
        if (acted) continue;

        // Two clauses sharing >= 2 variables: replace the first by their sum
        // (the pair constraint), which the rules above then fold away.
        for (std::size_t i = 0; i < cs.size() && !acted; ++i) {
            if (!cs[i].alive) continue;
            for (std::size_t j = i + 1; j < cs.size() && !acted; ++j) {
                if (!cs[j].alive) continue;
                if (shared_count(cs[i].vars, cs[j].vars) < 2) continue;
                Constraint sum;
                sum.rhs = static_cast<std::uint8_t>(cs[i].rhs ^ cs[j].rhs);
                std::set_symmetric_difference(cs[i].vars.begin(), cs[i].vars.end(),
                                              cs[j].vars.begin(), cs[j].vars.end(),
                                              std::back_inserter(sum.vars));
                cs[i].alive = false;
                cs.push_back(std::move(sum));
                acted = true;
            }
        }
        if (acted) continue;

        // Pure variables: occurring in exactly one clause.
        {
            std::vector<int> occ(f.n, 0);
            for (const auto& c : cs)
                if (c.alive)
                    for (int x : c.vars) ++occ[x];
            for (int x = 0; x < f.n && !acted; ++x) {
                if (occ[x] != 1) continue;
                for (auto& c : cs) {
                    if (!c.alive || !contains(c.vars, x)) continue;
                    ReductionEvent ev;
                    ev.kind = ReductionEvent::PureElim;
                    ev.var = x;
                    ev.clause_vars = c.vars;
                    ev.clause_rhs = c.rhs;
                    trace.events.push_back(std::move(ev));
                    c.alive = false;
                    acted = true;
                    break;
                }
            }
        }
        if (!acted) break;
    }

    XorFormula out;
    out.n = f.n;
    for (const auto& c : cs) {
        if (!c.alive) continue;
        XorClause cl{{c.vars[0], c.vars[1], c.vars[2]}, c.rhs};
        out.clauses.push_back(cl);
    }
    return {out, trace};
}

Assignment lift_assignment(const ReductionTrace& trace, Assignment a) {
    if (trace.unsat) throw std::invalid_argument("lift_assignment: trace marks UNSAT");
    for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it) {
        const auto& ev = *it;
        switch (ev.kind) {
            case ReductionEvent::Unit:
                a[ev.var] = ev.lambda;
                break;
            case ReductionEvent::Substitution:
                a[ev.var] = static_cast<std::uint8_t>(a[ev.sub_var] ^ ev.lambda);
                break;
            case ReductionEvent::PureElim: {
                std::uint8_t others = 0;
                for (int x : ev.clause_vars)
                    if (x != ev.var) others = static_cast<std::uint8_t>(others ^ a[x]);
                a[ev.var] = static_cast<std::uint8_t>(ev.clause_rhs ^ others);
                break;
            }
        }
    }
    return a;
}

namespace {

std::vector<std::vector<int>> occurrences(const XorFormula& f) {
    std::vector<std::vector<int>> occ(f.n);
    for (int i = 0; i < f.m(); ++i)
        for (int k = 0; k < 3; ++k) occ[f.clauses[i].v[k]].push_back(i);
    return occ;
}

// Connectivity of a clause subset under shared variables.
bool clauses_connected(const XorFormula& f, const std::vector<int>& clause_ids) {
    if (clause_ids.size() <= 1) return true;
    std::vector<int> parent(clause_ids.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::vector<int> local(f.m(), -1);
    for (std::size_t i = 0; i < clause_ids.size(); ++i) local[clause_ids[i]] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<int> last(f.n, -1);
    for (int id : clause_ids) {
        for (int k = 0; k < 3; ++k) {
            int x = f.clauses[id].v[k];
            if (last[x] >= 0) {
                int a = find(local[id]), b = find(local[last[x]]);
                if (a != b) parent[a] = b;
            }
            last[x] = id;
        }
    }
    int root = find(0);
    for (std::size_t i = 1; i < clause_ids.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

bool connected_after_deleting(const XorFormula& f, const std::vector<int>& deleted_vars) {
    std::vector<std::uint8_t> gone(f.n, 0);
    for (int x : deleted_vars) gone[x] = 1;
    std::vector<int> keep;
    for (int i = 0; i < f.m(); ++i) {
        bool hit = false;
        for (int k = 0; k < 3; ++k)
            if (gone[f.clauses[i].v[k]]) hit = true;
        if (!hit) keep.push_back(i);
    }
    return clauses_connected(f, keep);
}

}  // namespace

bool is_reduced(const XorFormula& f) {
    auto occ = occurrences(f);
    for (int x = 0; x < f.n; ++x)
        if (occ[x].size() == 1) return false;
    for (int i = 0; i < f.m(); ++i)
        for (int j = i + 1; j < f.m(); ++j) {
            int shared = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    if (f.clauses[i].v[a] == f.clauses[j].v[b]) ++shared;
            if (shared >= 2) return false;
        }
    return true;
}

bool is_2_regular(const XorFormula& f) {
    auto occ = occurrences(f);
    for (int x = 0; x < f.n; ++x)
        if (occ[x].size() != 2) return false;
    return true;
}

bool is_connected(const XorFormula& f) {
    std::vector<int> all(f.m());
    for (int i = 0; i < f.m(); ++i) all[i] = i;
    return clauses_connected(f, all);
}

bool is_s_connected(const XorFormula& f, int s) {
    if (s < 1) throw std::invalid_argument("is_s_connected: s must be >= 1");
    // Every deletion set of size <= s-1 must leave the formula connected.
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start, int remaining) -> bool {
        if (!connected_after_deleting(f, chosen)) return false;
        if (remaining == 0) return true;
        for (int x = start; x < f.n; ++x) {
            chosen.push_back(x);
            bool ok = self(self, x + 1, remaining - 1);
            chosen.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, 0, s - 1);
}

int max_s_connectivity(const XorFormula& f) {
    if (!is_connected(f)) return 0;
    int s = 1;
    // Deletion sets are enumerated up to size 5; connectivity beyond that is
    // reported as 6.
    while (s <= 5 && is_s_connected(f, s + 1)) ++s;
    return s;
}

RwResult random_walk_sat(const XorFormula& f, Assignment u0, Rng& rng, long long max_steps,
                         bool record_trace) {
    f.validate();
    if (static_cast<int>(u0.size()) != f.n)
        throw std::invalid_argument("random_walk_sat: assignment length mismatch");
    RwResult res;
    res.assignment = std::move(u0);
    std::vector<int> unsat;
    while (true) {
        unsat.clear();
        for (int i = 0; i < f.m(); ++i)
            if (!clause_satisfied(f.clauses[i], res.assignment)) unsat.push_back(i);
        if (unsat.empty()) {
            res.sat = true;
            return res;
        }
        if (max_steps >= 0 && res.steps >= max_steps) break;
        int c = unsat[rng.index(unsat.size())];
        int x = f.clauses[c].v[rng.index(3)];
        res.assignment[x] ^= 1;
        ++res.steps;
        if (record_trace) res.trace.emplace_back(c, x);
    }
    res.sat = count_unsatisfied(f, res.assignment) == 0;
    return res;
}

Graph formula_dual(const XorFormula& f) {
    if (!is_2_regular(f)) throw std::invalid_argument("formula_dual: formula is not 2-regular");
    auto occ = occurrences(f);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(f.n);
    for (int x = 0; x < f.n; ++x) edges.emplace_back(occ[x][0], occ[x][1]);
    return Graph(f.m(), std::move(edges));
}

BoundReport time_bound(const XorFormula& f, int s) {
    if (solve_gf2_formula(f).sat == false)
        throw std::invalid_argument("time_bound: formula is unsatisfiable");
    if (!is_reduced(f)) throw std::invalid_argument("time_bound: formula is not reduced");
    if (!is_2_regular(f)) throw std::invalid_argument("time_bound: formula is not 2-regular");
    if (s < 0) s = max_s_connectivity(f);
    if (s < 1 || !is_s_connected(f, s))
        throw std::invalid_argument("time_bound: formula is not s-connected for the given s");

    BoundReport rep;
    rep.m = f.m();
    rep.n = f.n;
    rep.s = s;
    Graph dual = formula_dual(f);
    if (dual.vertex_count() <= 24) {
        auto ch = cheeger_time_exact(dual);
        rep.tau_c = ch.value;
        rep.tau_c_method = ch.method;
    } else {
        auto ch = cheeger_time_sampled(dual, 4096, 1);
        rep.tau_c = ch.value;
        rep.tau_c_method = ch.method;
    }
    double m = static_cast<double>(rep.m);
    double tc = rep.tau_c.to_double();
    rep.term_cubic = m * m * m / (2.0 * s);
    rep.term_cheeger_ln2 = 2.0 * std::log(2.0) * tc * m * m;
    rep.term_cheeger_log2 = 2.0 * 1.0 * tc * m * m;
    rep.bound_ln2 = std::min(rep.term_cubic, rep.term_cheeger_ln2);
    rep.bound_log2 = std::min(rep.term_cubic, rep.term_cheeger_log2);
    return rep;
}

Gf2FormulaResult solve_gf2_formula(const XorFormula& f) {
    f.validate();
    Gf2System sys;
    sys.num_vars = f.n;
    sys.rows.resize(f.m());
    for (int i = 0; i < f.m(); ++i) {
        sys.rows[i].vars = {f.clauses[i].v[0], f.clauses[i].v[1], f.clauses[i].v[2]};
        sys.rows[i].rhs = f.clauses[i].rhs;
    }
    auto r = solve_gf2(sys);
    Gf2FormulaResult out;
    out.sat = r.sat;
    if (r.sat) {
        out.witness = r.solution.assignment;
        out.kernel = r.solution.kernel;
    }
    return out;
}

XorFormula formula_from_cubic(const Graph& g, const Assignment& planted) {
    if (static_cast<int>(planted.size()) != g.edge_count())
        throw std::invalid_argument("formula_from_cubic: planted assignment length mismatch");
    std::vector<std::vector<int>> inc(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        if (u == v) throw std::invalid_argument("formula_from_cubic: graph has loops");
        inc[u].push_back(e);
        inc[v].push_back(e);
    }
    XorFormula f;
    f.n = g.edge_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (inc[v].size() != 3)
            throw std::invalid_argument("formula_from_cubic: graph is not 3-regular");
        XorClause c{{inc[v][0], inc[v][1], inc[v][2]},
                    static_cast<std::uint8_t>(planted[inc[v][0]] ^ planted[inc[v][1]] ^
                                              planted[inc[v][2]])};
        f.clauses.push_back(c);
    }
    f.validate();
    return f;
}

XorFormula random_cubic_instance(int m, std::uint64_t seed) {
    Graph g = random_cubic_graph(m, seed);
    Rng rng(sub_seed(seed, 0x9e37));
    Assignment planted(g.edge_count());
    for (auto& x : planted) x = rng.bernoulli(0.5) ? 1 : 0;
    return formula_from_cubic(g, planted);
}

XorFormula circulant_instance(int m, std::uint64_t seed) {
    Graph g = circulant_cycle_chords(m);
    Rng rng(seed);
    Assignment planted(g.edge_count());
    for (auto& x : planted) x = rng.bernoulli(0.5) ? 1 : 0;
    return formula_from_cubic(g, planted);
}

XorFormula tc_formula(int n) {
    if (n < 7) throw std::invalid_argument("tc_formula: need n >= 7");
    // Variable e_i = cycle edge {i, i+1}, variable n + i = chord {i, i+2};
    // triangle {i, i+1, i+2} uses e_i, e_{i+1} and its private chord.
    XorFormula f;
    f.n = 2 * n;
    for (int i = 0; i < n; ++i) {
        XorClause c{{i, (i + 1) % n, n + i}, 0};
        f.clauses.push_back(c);
    }
    f.validate();
    return f;
}

XorFormula read_xor_formula(std::istream& in) {
    std::string line;
    XorFormula f;
    int m = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (m < 0) {
            std::string p, kind;
            if (!(ls >> p >> kind >> f.n >> m) || p != "p" || kind != "xor")
                throw std::invalid_argument("xor formula: bad header, expected 'p xor n m'");
            continue;
        }
        int a, b, c, rhs;
        if (!(ls >> a >> b >> c >> rhs))
            throw std::invalid_argument("xor formula: bad clause line");
        XorClause cl{{a - 1, b - 1, c - 1}, static_cast<std::uint8_t>(rhs)};
        f.clauses.push_back(cl);
    }
    if (m < 0) throw std::invalid_argument("xor formula: missing header");
    if (f.m() != m) throw std::invalid_argument("xor formula: clause count mismatch");
    f.validate();
    return f;
}

XorFormula read_xor_formula_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_xor_formula(in);
}

void write_xor_formula(std::ostream& out, const XorFormula& f) {
    out << "p xor " << f.n << " " << f.m() << "\n";
    for (const auto& c : f.clauses)
        out << c.v[0] + 1 << " " << c.v[1] + 1 << " " << c.v[2] + 1 << " " << int(c.rhs) << "\n";
}

}  // namespace balance
