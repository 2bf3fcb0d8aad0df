#include "balance/walks.hpp"

#include <algorithm>
#include <stdexcept>

namespace balance {

long long WalkParams::effective_max_steps(int n) const {
    if (max_steps >= 0) return max_steps;
    long long m = std::max(1, n);
    return 100 * m * m * m;
}

namespace {

int move_ball(const Graph& g, int v, Rng& rng) {
    const auto& nb = g.neighbors(v);
    if (nb.empty()) throw std::runtime_error("walks: ball stranded on isolated vertex");
    return nb[rng.index(nb.size())];
}

}  // namespace

WalkResult run_arw(const Graph& g, const std::vector<int>& start, long long max_steps, Rng& rng) {
    // Pairwise annihilation of coincident starting balls.
    std::vector<int> count(g.vertex_count(), 0);
    for (int v : start) count[v] ^= 1;
    std::vector<int> balls;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (count[v]) balls.push_back(v);

    WalkResult res;
    while (static_cast<int>(balls.size()) > 1 && res.steps < max_steps) {
        std::size_t i = rng.index(balls.size());
        int to = move_ball(g, balls[i], rng);
        ++res.steps;
        auto hit = std::find(balls.begin(), balls.end(), to);
        if (hit != balls.end()) {
            std::size_t j = static_cast<std::size_t>(hit - balls.begin());
            // Remove both, higher index first.
            if (i < j) std::swap(i, j);
            balls.erase(balls.begin() + static_cast<long>(i));
            balls.erase(balls.begin() + static_cast<long>(j));
        } else {
            balls[i] = to;
        }
    }
    res.censored = static_cast<int>(balls.size()) > 1;
    res.survivors = balls;
    return res;
}

WalkResult run_crw(const Graph& g, const std::vector<int>& start, long long max_steps, Rng& rng) {
    std::vector<int> clusters = start;
    std::sort(clusters.begin(), clusters.end());
    clusters.erase(std::unique(clusters.begin(), clusters.end()), clusters.end());

    WalkResult res;
    while (static_cast<int>(clusters.size()) > 1 && res.steps < max_steps) {
        std::size_t i = rng.index(clusters.size());
        int to = move_ball(g, clusters[i], rng);
        ++res.steps;
        auto hit = std::find(clusters.begin(), clusters.end(), to);
        if (hit != clusters.end() && static_cast<std::size_t>(hit - clusters.begin()) != i) {
            clusters.erase(clusters.begin() + static_cast<long>(i));
        } else {
            clusters[i] = to;
        }
    }
    res.censored = static_cast<int>(clusters.size()) > 1;
    res.survivors = clusters;
    return res;
}

CoupledResult run_coupled(const Graph& g, const std::vector<int>& start, long long max_steps,
                          Rng& rng) {
    struct Cluster {
        int vertex;
        std::uint8_t live;  // live-ball count mod 2
    };
    std::vector<Cluster> clusters;
    {
        std::vector<int> count(g.vertex_count(), 0);
        for (int v : start) count[v] += 1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (count[v] > 0) clusters.push_back({v, static_cast<std::uint8_t>(count[v] & 1)});
    }
    int start_parity = 0;
    int odd = 0;
    for (const auto& c : clusters) odd += c.live;
    start_parity = odd & 1;

    CoupledResult res;
    long long t = 0;
    bool arw_done = odd <= 1;
    res.t_arw = 0;
    while (static_cast<int>(clusters.size()) > 1 && t < max_steps) {
        std::size_t i = rng.index(clusters.size());
        int to = move_ball(g, clusters[i].vertex, rng);
        ++t;
        auto hit = std::find_if(clusters.begin(), clusters.end(),
                                [&](const Cluster& c) { return c.vertex == to; });
        if (hit != clusters.end() && static_cast<std::size_t>(hit - clusters.begin()) != i) {
            int before = odd;
            odd -= clusters[i].live + hit->live;
            hit->live = static_cast<std::uint8_t>(hit->live ^ clusters[i].live);
            odd += hit->live;
            if (((before - odd) & 1) != 0) res.parity_ok = false;
            clusters.erase(clusters.begin() + static_cast<long>(i));
        } else {
            clusters[i].vertex = to;
        }
        if (!arw_done && odd <= 1) {
            arw_done = true;
            res.t_arw = t;
        }
    }
    res.t_crw = t;
    res.censored = static_cast<int>(clusters.size()) > 1;
    if (!arw_done) {
        res.t_arw = t;  // censored alongside the CRW
        if (!res.censored) res.domination_ok = false;
    }
    if (res.t_arw > res.t_crw) res.domination_ok = false;
    if (!res.censored && start_parity == 0 && odd == 0) res.all_ghosts_at_coalescence = true;
    return res;
}

long long meeting_time_once(const Graph& g, int u, int v, long long max_steps, Rng& rng) {
    long long t = 0;
    while (u != v && t < max_steps) {
        if (rng.bernoulli(0.5))
            u = move_ball(g, u, rng);
        else
            v = move_ball(g, v, rng);
        ++t;
    }
    return u == v ? t : -1;
}

MeetingTimeReport estimate_meeting_time(const Graph& g, const WalkParams& params) {
    const int n = g.vertex_count();
    long long limit = params.effective_max_steps(n);
    MeetingTimeReport rep;
    rep.pair_means.assign(n, std::vector<double>(n, 0.0));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            double sum = 0;
            int ok = 0;
            for (int tr = 0; tr < params.trials; ++tr) {
                std::uint64_t stream =
                    (static_cast<std::uint64_t>(u) * n + v) * static_cast<std::uint64_t>(params.trials) + tr;
                Rng rng(sub_seed(params.seed, stream));
                long long t = meeting_time_once(g, u, v, limit, rng);
                if (t < 0) {
                    ++rep.censored;
                    continue;
                }
                sum += static_cast<double>(t);
                ++ok;
            }
            double mean = ok > 0 ? sum / ok : 0.0;
            rep.pair_means[u][v] = rep.pair_means[v][u] = mean;
            if (mean > rep.max_mean) {
                rep.max_mean = mean;
                rep.argmax_u = u;
                rep.argmax_v = v;
            }
        }
    }
    return rep;
}

SwitchStep switching_step(const Hypergraph& h, ParticleConfig& w, Scheduler sched, Rng& rng) {
    SwitchStep out;
    if (sched == Scheduler::UniformEligible) {
        std::vector<int> eligible;
        for (int e = 0; e < h.edge_count(); ++e)
            for (int v : h.edges[e])
                if (w[v]) {
                    eligible.push_back(e);
                    break;
                }
        if (eligible.empty()) {
            out.halted = true;
            return out;
        }
        out.edge = eligible[rng.index(eligible.size())];
    } else {
        auto inc = h.incidence();
        std::vector<int> occupied;
        for (int v = 0; v < h.n; ++v)
            if (w[v] && !inc[v].empty()) occupied.push_back(v);
        if (occupied.empty()) {
            out.halted = true;
            return out;
        }
        int v = occupied[rng.index(occupied.size())];
        out.edge = inc[v][rng.index(inc[v].size())];
    }
    apply_switch(h, w, out.edge);
    return out;
}

}  // namespace balance
