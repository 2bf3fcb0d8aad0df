#pragma once

#include <cstdint>
#include <vector>

#include "balance/graph.hpp"
#include "balance/rng.hpp"
#include "balance/triadic_dual.hpp"

namespace balance {

// Annihilating / coalescing random walks on a graph (loops allowed: a loop
// move keeps the ball in place but still counts as a step). One uniformly
// chosen ball (or cluster) moves per step to a uniformly chosen neighbor.

struct WalkParams {
    std::uint64_t seed = 1;
    long long max_steps = -1;  // < 0: default 100 * n^3
    int trials = 1;

    long long effective_max_steps(int n) const;
};

struct WalkResult {
    long long steps = 0;
    bool censored = false;
    std::vector<int> survivors;  // vertices still holding balls/clusters
};

// ARW from one ball on each vertex of `start`; stops when <= 1 ball remains.
WalkResult run_arw(const Graph& g, const std::vector<int>& start, long long max_steps, Rng& rng);

// CRW from one cluster on each vertex of `start`; stops at full coalescence.
WalkResult run_crw(const Graph& g, const std::vector<int>& start, long long max_steps, Rng& rng);

struct CoupledResult {
    long long t_arw = 0;       // step at which the ARW component died out (<=1 ball)
    long long t_crw = 0;       // step of full coalescence
    bool censored = false;
    bool domination_ok = true;         // t_arw <= t_crw observed
    bool parity_ok = true;             // live-ball count parity preserved mod 2
    bool all_ghosts_at_coalescence = false;  // started even and all balls dead at t_crw
};

// Coupled CRW/ARW: clusters carry a live-ball count mod 2; a merge XORs the
// flags. The ARW reading of the coupled state is the set of clusters with an
// odd live count.
CoupledResult run_coupled(const Graph& g, const std::vector<int>& start, long long max_steps,
                          Rng& rng);

struct MeetingTimeReport {
    double max_mean = 0.0;               // tau_M estimate: max over ordered pairs
    int argmax_u = -1, argmax_v = -1;
    std::vector<std::vector<double>> pair_means;  // mean meeting time per start pair
    int censored = 0;
};

// Asynchronous two-walker meeting time: each step one of the two walkers is
// chosen with probability 1/2 and moved to a uniform neighbor; tau is the
// first step at which they share a vertex.
long long meeting_time_once(const Graph& g, int u, int v, long long max_steps, Rng& rng);

MeetingTimeReport estimate_meeting_time(const Graph& g, const WalkParams& params);

// Switching process on a hypergraph: repeatedly complement the occupation on
// a scheduled occupied hyperedge.
enum class Scheduler {
    UniformEligible,  // uniform among hyperedges containing at least one ball
    VertexFirst,      // uniform occupied vertex, then uniform incident hyperedge
};

struct SwitchStep {
    int edge = -1;
    bool halted = false;  // no eligible hyperedge existed
};

SwitchStep switching_step(const Hypergraph& h, ParticleConfig& w, Scheduler sched, Rng& rng);

}  // namespace balance
