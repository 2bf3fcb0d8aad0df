#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balance/graph.hpp"
#include "balance/rational.hpp"
#include "balance/rng.hpp"
#include "balance/triadic_dual.hpp"

namespace balance {

struct XorClause {
    int v[3];          // distinct variable indices
    std::uint8_t rhs;  // x_{v0} ^ x_{v1} ^ x_{v2} = rhs
};

// 3-XOR formula: m parity equations over n boolean variables.
struct XorFormula {
    int n = 0;
    std::vector<XorClause> clauses;

    int m() const { return static_cast<int>(clauses.size()); }
    void validate() const;  // indices in range, three distinct vars per clause
};

using Assignment = std::vector<std::uint8_t>;

bool clause_satisfied(const XorClause& c, const Assignment& a);
int count_unsatisfied(const XorFormula& f, const Assignment& a);
// Unsatisfied-clause indicator (the particle picture on the formula dual).
ParticleConfig unsat_indicator(const XorFormula& f, const Assignment& a);

// Reduction: eliminate pure variables; merge clause pairs sharing two
// variables into substitutions z := t ^ lambda; fold degenerate (<3-variable)
// constraints into the substitution map. Output has only 3-variable clauses,
// no pure variable, and no two clauses sharing two or more variables.
struct ReductionEvent {
    enum Kind { PureElim, Substitution, Unit } kind;
    int var;            // eliminated variable
    // PureElim: the removed clause (vars + rhs), satisfied by choosing var.
    std::vector<int> clause_vars;
    std::uint8_t clause_rhs = 0;
    // Substitution: var := sub_var ^ lambda.  Unit: var := lambda.
    int sub_var = -1;
    std::uint8_t lambda = 0;
};

struct ReductionTrace {
    std::vector<ReductionEvent> events;
    bool unsat = false;  // a 0 = 1 constraint was derived
};

std::pair<XorFormula, ReductionTrace> reduce(const XorFormula& f);

// Extends a satisfying assignment of the reduced formula to the original
// variables by replaying the trace backwards. `a` has the original length n.
Assignment lift_assignment(const ReductionTrace& trace, Assignment a);

bool is_reduced(const XorFormula& f);
bool is_2_regular(const XorFormula& f);
bool is_connected(const XorFormula& f);
// Deleting any set of at most s-1 variables (and every clause containing one
// of them) leaves the formula connected.
bool is_s_connected(const XorFormula& f, int s);
int max_s_connectivity(const XorFormula& f);

struct RwResult {
    bool sat = false;  // false means CENSORED at max_steps
    long long steps = 0;
    Assignment assignment;
    std::vector<std::pair<int, int>> trace;  // (clause, variable) per step
};

RwResult random_walk_sat(const XorFormula& f, Assignment u0, Rng& rng, long long max_steps,
                         bool record_trace = false);

// Clause-variable dual of a 2-regular formula: vertex per clause, edge i per
// variable i joining its two clauses.
Graph formula_dual(const XorFormula& f);

struct BoundReport {
    int m = 0, n = 0, s = 1;
    Rat tau_c;
    std::string tau_c_method;
    double term_cubic = 0.0;         // m^3 / (2 s)
    double term_cheeger_ln2 = 0.0;   // 2 ln2 * tau_c * m^2
    double term_cheeger_log2 = 0.0;  // 2 log2(2) * tau_c * m^2
    double bound_ln2 = 0.0;          // min with the ln2 reading
    double bound_log2 = 0.0;         // min with the log2 reading
};

// Expected-time bound for RandomWalkSat on a satisfiable reduced 2-regular
// s-connected formula; errors name the failed hypothesis. s < 0: use the
// maximum s for which the formula is s-connected.
BoundReport time_bound(const XorFormula& f, int s = -1);

struct Gf2FormulaResult {
    bool sat = false;
    Assignment witness;
    std::vector<Assignment> kernel;
};

Gf2FormulaResult solve_gf2_formula(const XorFormula& f);

// Instance generators (satisfiable by construction: rhs planted).
// Clause per vertex of a cubic graph, variable per edge.
XorFormula formula_from_cubic(const Graph& g, const Assignment& planted);
XorFormula random_cubic_instance(int m, std::uint64_t seed);
// Cubic circulant family (m-cycle plus antipodal chords), planted assignment
// drawn from the seed.
XorFormula circulant_instance(int m, std::uint64_t seed);
// Triangle formula of the n-triangle cycle graph: clause per triangle over
// its three edge variables. Chord variables are pure, so reduce() consumes
// the whole formula; the cycle-edge variables each occur in two clauses.
XorFormula tc_formula(int n);

// DIMACS-like format: header "p xor n m", then m lines "i1 i2 i3 b" with
// 1-based variable indices.
XorFormula read_xor_formula(std::istream& in);
XorFormula read_xor_formula_file(const std::string& path);
void write_xor_formula(std::ostream& out, const XorFormula& f);

}  // namespace balance
