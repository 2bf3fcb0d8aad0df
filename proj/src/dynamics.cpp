#include "balance/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace balance {

void DynamicsParams::validate() const {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("dynamics: p must lie in (0,1)");
    if (trials < 1) throw std::invalid_argument("dynamics: trials must be >= 1");
}

long long DynamicsParams::effective_max_steps(int n_triangles) const {
    if (max_steps >= 0) return max_steps;
    long long n = std::max(1, n_triangles);
    return 100 * n * n * n;
}

DynamicsState::DynamicsState(const SignedGraph& g, EdgeState s) : g_(g), state_(std::move(s)) {
    if (static_cast<int>(state_.size()) != g_.edge_count())
        throw std::invalid_argument("dynamics: state size mismatch");
    position_.assign(g_.triangle_count(), -1);
    for (int t = 0; t < g_.triangle_count(); ++t) {
        if (!g_.is_balanced(state_, t)) {
            position_[t] = static_cast<int>(imbalanced_.size());
            imbalanced_.push_back(t);
        }
    }
}

void DynamicsState::flip(int e) {
    state_[e] = static_cast<std::int8_t>(-state_[e]);
    for (int t : g_.edge_triangles(e)) {
        bool bal = g_.is_balanced(state_, t);
        int pos = position_[t];
        if (bal && pos >= 0) {
            int last = imbalanced_.back();
            imbalanced_[pos] = last;
            position_[last] = pos;
            imbalanced_.pop_back();
            position_[t] = -1;
        } else if (!bal && pos < 0) {
            position_[t] = static_cast<int>(imbalanced_.size());
            imbalanced_.push_back(t);
        }
    }
}

StepRecord DynamicsState::step(double p, Rng& rng) {
    if (imbalanced_.empty()) throw std::runtime_error("dynamics: no imbalanced triangle");
    int t = imbalanced_[rng.index(imbalanced_.size())];
    const auto& te = g_.triangle_edges(t);
    int negatives = 0;
    for (int e : te)
        if (state_[e] < 0) ++negatives;
    int chosen;
    if (negatives == 3) {
        chosen = te[rng.index(3)];
    } else {
        // Imbalanced with exactly one negative edge.
        int neg = -1, pos1 = -1, pos2 = -1;
        for (int e : te) {
            if (state_[e] < 0)
                neg = e;
            else if (pos1 < 0)
                pos1 = e;
            else
                pos2 = e;
        }
        if (rng.bernoulli(p))
            chosen = neg;
        else
            chosen = rng.bernoulli(0.5) ? pos1 : pos2;
    }
    flip(chosen);
    return StepRecord{t, chosen, imbalanced_count()};
}

Trajectory run_until_recurrent(const SignedGraph& g, const EdgeState& s0,
                               const DynamicsParams& params, Rng& rng, bool record) {
    params.validate();
    // Target potential: 0 in theorem cases 1-2, 1 in case 3.
    auto cls = classify_recurrent_graphdual(g, s0);
    int target = cls.cls == RecurrentClass::OneImbalanced ? 1 : 0;
    long long limit = params.effective_max_steps(g.triangle_count());

    DynamicsState st(g, s0);
    Trajectory traj;
    if (record) traj.records.reserve(64);
    while (st.imbalanced_count() > target && traj.steps < limit) {
        StepRecord rec = st.step(params.p, rng);
        ++traj.steps;
        if (record) traj.records.push_back(rec);
    }
    traj.censored = st.imbalanced_count() > target;
    traj.terminal_imbalance = st.imbalanced_count();
    traj.terminal_state = st.state();
    return traj;
}

ConvergenceStats summarize(const std::vector<Trajectory>& trajectories) {
    ConvergenceStats stats;
    for (const auto& t : trajectories) {
        if (t.censored) {
            ++stats.censored;
            continue;
        }
        stats.times.push_back(t.steps);
        stats.max = std::max(stats.max, t.steps);
    }
    if (!stats.times.empty()) {
        double sum = 0;
        for (long long x : stats.times) sum += static_cast<double>(x);
        stats.mean = sum / static_cast<double>(stats.times.size());
        double ss = 0;
        for (long long x : stats.times) {
            double d = static_cast<double>(x) - stats.mean;
            ss += d * d;
        }
        stats.variance = stats.times.size() > 1 ? ss / static_cast<double>(stats.times.size() - 1) : 0.0;
    }
    return stats;
}

ConvergenceStats estimate_tau_sb(const SignedGraph& g, const DynamicsParams& params,
                                 InitialStateStrategy strategy, const EdgeState* explicit_state,
                                 int threads) {
    params.validate();
    if (strategy == InitialStateStrategy::Explicit && explicit_state == nullptr)
        throw std::invalid_argument("estimate_tau_sb: explicit strategy needs a state");
    std::vector<Trajectory> results(params.trials);

    auto run_trial = [&](int i) {
        Rng rng(sub_seed(params.seed, static_cast<std::uint64_t>(i)));
        EdgeState s0;
        switch (strategy) {
            case InitialStateStrategy::AllNegative:
                s0 = g.all_negative_state();
                break;
            case InitialStateStrategy::RandomUniform:
                s0.resize(g.edge_count());
                for (auto& x : s0) x = rng.bernoulli(0.5) ? 1 : -1;
                break;
            case InitialStateStrategy::Explicit:
                s0 = *explicit_state;
                break;
        }
        results[i] = run_until_recurrent(g, s0, params, rng);
    };

    int nthreads = std::max(1, std::min(threads, params.trials));
    if (nthreads == 1) {
        for (int i = 0; i < params.trials; ++i) run_trial(i);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back([&, w] {
                for (int i = w; i < params.trials; i += nthreads) run_trial(i);
            });
        for (auto& th : pool) th.join();
    }
    return summarize(results);
}

double attempt_time(const SignedGraph& g, const EdgeState& s0, const Trajectory& traj) {
    if (traj.steps > 0 && traj.records.empty())
        throw std::invalid_argument("attempt_time: trajectory was not recorded");
    const double T = static_cast<double>(g.triangle_count());
    double total = 0.0;
    int imbalanced = g.count_imbalanced(s0);
    for (const auto& rec : traj.records) {
        if (imbalanced <= 0) throw std::logic_error("attempt_time: step from a balanced state");
        total += T / static_cast<double>(imbalanced);
        imbalanced = rec.potential_after;
    }
    return total;
}

DriftReport drift_check(const SignedGraph& g, const EdgeState& s0,
                        const std::vector<Trajectory>& trajectories) {
    DriftReport rep;
    for (const auto& traj : trajectories) {
        int prev = g.count_imbalanced(s0);
        for (const auto& rec : traj.records) {
            int delta = prev - rec.potential_after;
            ++rep.steps;
            if (delta < 0) rep.never_increased = false;
            if (delta < 0 || delta > 2) rep.steps_in_range = false;
            if (delta > 0) ++rep.decreases;
            prev = rec.potential_after;
        }
    }
    rep.decrease_frequency = rep.steps > 0 ? static_cast<double>(rep.decreases) / rep.steps : 0.0;
    return rep;
}

}  // namespace balance
