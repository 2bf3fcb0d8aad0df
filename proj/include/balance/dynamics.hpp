#pragma once

#include <cstdint>
#include <vector>

#include "balance/reach.hpp"
#include "balance/rng.hpp"
#include "balance/signed_graph.hpp"

namespace balance {

struct DynamicsParams {
    double p = 0.5;  // in (0,1)
    std::uint64_t seed = 1;
    long long max_steps = -1;  // < 0: default 100 * n_triangles^3
    int trials = 1;

    double p_minus() const { return p < 0.5 ? p : 0.5; }
    void validate() const;
    long long effective_max_steps(int n_triangles) const;
};

struct StepRecord {
    int triangle;
    int edge;
    int potential_after;
};

struct Trajectory {
    long long steps = 0;
    bool censored = false;          // hit max_steps before reaching the target
    int terminal_imbalance = 0;     // potential at termination
    EdgeState terminal_state;
    std::vector<StepRecord> records;  // filled only when recording is on
};

struct ConvergenceStats {
    std::vector<long long> times;  // uncensored termination times
    int censored = 0;
    double mean = 0.0;
    double variance = 0.0;
    long long max = 0;
};

enum class InitialStateStrategy { AllNegative, RandomUniform, Explicit };

// Incremental simulation state: the imbalanced-triangle set is maintained by
// re-evaluating only triangles incident to the flipped edge.
class DynamicsState {
  public:
    DynamicsState(const SignedGraph& g, EdgeState s);

    const EdgeState& state() const { return state_; }
    int imbalanced_count() const { return static_cast<int>(imbalanced_.size()); }
    const std::vector<int>& imbalanced_set() const { return imbalanced_; }

    // One step of the probabilistic triad dynamics. Errors if no triangle is
    // imbalanced.
    StepRecord step(double p, Rng& rng);

    void flip(int e);  // flip + incremental update

  private:
    const SignedGraph& g_;
    EdgeState state_;
    std::vector<int> imbalanced_;      // ids, unordered
    std::vector<int> position_;        // triangle -> index in imbalanced_, or -1
};

Trajectory run_until_recurrent(const SignedGraph& g, const EdgeState& s0,
                               const DynamicsParams& params, Rng& rng, bool record = false);

ConvergenceStats summarize(const std::vector<Trajectory>& trajectories);

// Monte-Carlo tau_SB estimate over params.trials independent trials; trial i
// uses sub_seed(params.seed, i) so serial and parallel runs agree.
ConvergenceStats estimate_tau_sb(const SignedGraph& g, const DynamicsParams& params,
                                 InitialStateStrategy strategy,
                                 const EdgeState* explicit_state = nullptr, int threads = 1);

// Expected Monte-Carlo attempt count for a recorded trajectory: under the
// random-update convention each tick draws a uniform triangle and balanced
// draws are no-ops, so attempts-to-next-update is geometric with mean
// T / (imbalanced count). Summing those means over the recorded chain gives
// the conditional expectation of the attempt time given the update chain.
// Requires a trajectory recorded with record = true.
double attempt_time(const SignedGraph& g, const EdgeState& s0, const Trajectory& traj);

struct DriftReport {
    long long steps = 0;
    long long decreases = 0;
    double decrease_frequency = 0.0;
    bool never_increased = true;
    bool steps_in_range = true;  // per-step decrease in {0,1,2}
};

// Empirical per-step potential-decrease statistics over recorded
// trajectories (graphs where every edge lies in <= 2 triangles).
DriftReport drift_check(const SignedGraph& g, const EdgeState& s0,
                        const std::vector<Trajectory>& trajectories);

}  // namespace balance
