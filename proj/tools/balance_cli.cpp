// Command-line harness: simulation, walks, reachability, Cheeger analysis,
// XOR-SAT tools and scaling experiments, with a reproducibility manifest
// emitted next to every CSV.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "balance/analysis.hpp"
#include "balance/dynamics.hpp"
#include "balance/reach.hpp"
#include "balance/rng.hpp"
#include "balance/signed_graph.hpp"
#include "balance/triadic_dual.hpp"
#include "balance/walks.hpp"
#include "balance/xorsat.hpp"

using nlohmann::json;
using namespace balance;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a_hex(buf.str());
}

// Global options shared by every subcommand.
struct Globals {
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    int threads = 1;
};

struct Report {
    json manifest;
    std::string digest;  // over the deterministic part of the manifest
    std::ostringstream csv;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Report(const std::string& subcommand, const Globals& g, json params,
           json input_digests = json::object()) {
        manifest["subcommand"] = subcommand;
        manifest["params"] = std::move(params);
        manifest["seed"] = g.seed;
        manifest["threads"] = g.threads;
        manifest["rng"] = Rng::algorithm_id();
        manifest["version"] = kVersion;
        manifest["inputs"] = std::move(input_digests);
        digest = fnv1a_hex(manifest.dump());
        csv << "# manifest: " << digest << "\n";
    }

    void finish(const Globals& g, long long steps = -1) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        manifest["wall_clock_ms"] = ms;
        if (steps >= 0) manifest["total_steps"] = steps;
        manifest["manifest_digest"] = digest;
        if (g.out.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream f(g.out);
            if (!f) throw std::runtime_error("cannot write: " + g.out);
            f << csv.str();
            std::ofstream mf(g.out + ".manifest.json");
            mf << manifest.dump(2) << "\n";
        }
    }
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

Graph load_plain_graph(const std::string& edges_file, int cycle, int complete, int circulant,
                       int cubic, std::uint64_t gseed) {
    if (!edges_file.empty()) {
        std::ifstream in(edges_file);
        if (!in) throw std::runtime_error("cannot open graph file: " + edges_file);
        int n, m;
        if (!(in >> n >> m)) throw std::runtime_error("graph file: expected 'n m' header");
        std::vector<std::pair<int, int>> edges(m);
        for (auto& [u, v] : edges)
            if (!(in >> u >> v)) throw std::runtime_error("graph file: truncated edge list");
        return Graph(n, edges);
    }
    if (cycle > 0) return cycle_graph(cycle);
    if (complete > 0) return complete_graph(complete);
    if (circulant > 0) return circulant_cycle_chords(circulant);
    if (cubic > 0) return random_cubic_graph(cubic, gseed);
    throw std::runtime_error("no graph specified (use --edges/--cycle/--complete/--circulant/--cubic)");
}

SignedGraph load_signed(const std::string& file, int tc, int lattice) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open graph file: " + file);
        return read_signed_graph(in);
    }
    if (tc > 0) return generate_triadic_cycle(tc);
    if (lattice > 0) return triangular_lattice_section(lattice);
    throw std::runtime_error("no graph specified (use --graph/--tc/--lattice)");
}

struct SlopeFit {
    double slope = 0.0, intercept = 0.0, stderr_slope = 0.0;
};

SlopeFit loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t k = xs.size();
    if (k < 2) throw std::runtime_error("slope fit needs at least two sizes");
    std::vector<double> lx(k), ly(k);
    for (std::size_t i = 0; i < k; ++i) {
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < k; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= k;
    my /= k;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0;
    for (std::size_t i = 0; i < k; ++i) {
        double r = ly[i] - fit.intercept - fit.slope * lx[i];
        rss += r * r;
    }
    fit.stderr_slope = k > 2 ? std::sqrt(rss / double(k - 2) / sxx) : 0.0;
    return fit;
}

ParticleConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return read_config(in);
}

int cmd_simulate(const Globals& g, const std::string& graph_file, int tc, int lattice, double p,
                 int trials, long long max_steps, const std::string& start) {
    SignedGraph sg = load_signed(graph_file, tc, lattice);
    DynamicsParams params;
    params.p = p;
    params.seed = g.seed;
    params.trials = trials;
    params.max_steps = max_steps;
    auto strategy = start == "random" ? InitialStateStrategy::RandomUniform
                                      : InitialStateStrategy::AllNegative;
    json jp{{"p", p},       {"trials", trials},   {"max_steps", max_steps},
            {"start", start}, {"tc", tc},         {"lattice", lattice},
            {"graph", graph_file}};
    json inputs = json::object();
    if (!graph_file.empty()) inputs[graph_file] = file_digest(graph_file);
    Report rep("simulate", g, jp, inputs);

    // Per-trial loop mirroring estimate_tau_sb's seeding so the CSV lists
    // every trial, censored ones included.
    std::vector<Trajectory> trajs(trials);
    for (int i = 0; i < trials; ++i) {
        Rng rng(sub_seed(params.seed, static_cast<std::uint64_t>(i)));
        EdgeState s0;
        if (strategy == InitialStateStrategy::RandomUniform) {
            s0.resize(sg.edge_count());
            for (auto& x : s0) x = rng.bernoulli(0.5) ? 1 : -1;
        } else {
            s0 = sg.all_negative_state();
        }
        trajs[i] = run_until_recurrent(sg, s0, params, rng);
    }
    auto stats = summarize(trajs);
    rep.csv << "trial,steps,censored\n";
    long long total = 0;
    for (int i = 0; i < trials; ++i) {
        total += trajs[i].steps;
        rep.csv << i << "," << trajs[i].steps << "," << (trajs[i].censored ? 1 : 0) << "\n";
    }
    rep.csv << "# mean=" << stats.mean << " variance=" << stats.variance
            << " max=" << stats.max << " censored=" << stats.censored << "\n";
    rep.finish(g, total);
    return 0;
}

int cmd_walk(const Globals& g, const std::string& mode, const Graph& graph,
             const std::vector<int>& starts, int trials, long long max_steps) {
    json jp{{"mode", mode}, {"trials", trials}, {"max_steps", max_steps}, {"starts", starts}};
    Report rep("walk", g, jp);
    long long limit = max_steps >= 0 ? max_steps
                                     : WalkParams{}.effective_max_steps(graph.vertex_count());
    long long total = 0;
    if (mode == "meeting") {
        WalkParams wp;
        wp.seed = g.seed;
        wp.trials = trials;
        wp.max_steps = max_steps;
        auto mt = estimate_meeting_time(graph, wp);
        rep.csv << "u,v,mean_meeting_time\n";
        for (int u = 0; u < graph.vertex_count(); ++u)
            for (int v = u + 1; v < graph.vertex_count(); ++v)
                rep.csv << u << "," << v << "," << mt.pair_means[u][v] << "\n";
        rep.csv << "# tau_M=" << mt.max_mean << " argmax=" << mt.argmax_u << "-" << mt.argmax_v
                << " censored=" << mt.censored << "\n";
        rep.finish(g);
        return 0;
    }
    if (mode == "coupled") {
        rep.csv << "trial,t_arw,t_crw,censored,domination_ok,parity_ok,all_ghosts\n";
        for (int i = 0; i < trials; ++i) {
            Rng rng(sub_seed(g.seed, i));
            auto r = run_coupled(graph, starts, limit, rng);
            total += r.t_crw;
            rep.csv << i << "," << r.t_arw << "," << r.t_crw << "," << r.censored << ","
                    << r.domination_ok << "," << r.parity_ok << ","
                    << r.all_ghosts_at_coalescence << "\n";
        }
        rep.finish(g, total);
        return 0;
    }
    rep.csv << "trial,steps,censored,survivors\n";
    for (int i = 0; i < trials; ++i) {
        Rng rng(sub_seed(g.seed, i));
        WalkResult r = mode == "arw" ? run_arw(graph, starts, limit, rng)
                                     : run_crw(graph, starts, limit, rng);
        total += r.steps;
        rep.csv << i << "," << r.steps << "," << r.censored << ",";
        for (std::size_t k = 0; k < r.survivors.size(); ++k)
            rep.csv << (k ? "|" : "") << r.survivors[k];
        rep.csv << "\n";
    }
    rep.finish(g, total);
    return 0;
}

int cmd_reach(const Globals& g, const std::string& hfile, const std::string& w1f,
              const std::string& w2f, bool witness, bool recur) {
    std::ifstream hin(hfile);
    if (!hin) throw std::runtime_error("cannot open hypergraph file: " + hfile);
    Hypergraph h = read_hypergraph(hin);
    ParticleConfig w1 = load_config(w1f), w2 = load_config(w2f);
    json jp{{"hypergraph", hfile}, {"w1", w1f}, {"w2", w2f}, {"witness", witness}};
    json inputs{{hfile, file_digest(hfile)}, {w1f, file_digest(w1f)}, {w2f, file_digest(w2f)}};
    Report rep(recur ? "recur" : "reach", g, jp, inputs);

    bool result;
    std::optional<std::vector<int>> path;
    if (recur) {
        result = is_recurrent(h, w1, w2);
        rep.csv << "recurrent\n" << (result ? 1 : 0) << "\n";
    } else if (witness) {
        path = witness_path(h, w1, w2);
        result = path.has_value();
        rep.csv << "reachable,schedule\n" << (result ? 1 : 0) << ",";
        if (path)
            for (std::size_t i = 0; i < path->size(); ++i)
                rep.csv << (i ? "|" : "") << (*path)[i];
        rep.csv << "\n";
    } else {
        result = is_reachable(h, w1, w2);
        rep.csv << "reachable\n" << (result ? 1 : 0) << "\n";
    }
    rep.finish(g);
    return result ? 0 : 1;
}

int cmd_cheeger(const Globals& g, const Graph& graph, const std::string& mode, int samples) {
    json jp{{"mode", mode}, {"samples", samples}, {"n", graph.vertex_count()}};
    Report rep("cheeger", g, jp);
    CheegerReport cr;
    if (mode == "regular")
        cr = cheeger_time_regular(graph);
    else if (mode == "sampled")
        cr = cheeger_time_sampled(graph, samples, g.seed);
    else
        cr = cheeger_time_exact(graph);
    double exponent = std::min(3.0, 2.0 + std::log2(cr.value.to_double()));
    rep.csv << "value,value_num,value_den,method,exponent,witness\n";
    rep.csv << cr.value.to_double() << "," << cr.value.num << "," << cr.value.den << ","
            << cr.method << "," << exponent << ",";
    for (std::size_t i = 0; i < cr.witness.size(); ++i)
        rep.csv << (i ? "|" : "") << cr.witness[i];
    rep.csv << "\n";
    rep.finish(g);
    return 0;
}

int cmd_xorsat_solve(const Globals& g, const std::string& file, const std::string& method,
                     long long max_steps) {
    XorFormula f = read_xor_formula_file(file);
    json jp{{"formula", file}, {"method", method}, {"max_steps", max_steps}};
    json inputs{{file, file_digest(file)}};
    Report rep("xorsat solve", g, jp, inputs);
    bool sat;
    long long steps = 0;
    Assignment a;
    if (method == "rwsat") {
        Rng rng(g.seed);
        auto r = random_walk_sat(f, Assignment(f.n, 0), rng, max_steps);
        sat = r.sat;
        steps = r.steps;
        a = r.assignment;
    } else {
        auto r = solve_gf2_formula(f);
        sat = r.sat;
        a = r.witness;
    }
    rep.csv << "sat,steps,assignment\n" << (sat ? 1 : 0) << "," << steps << ",";
    if (sat)
        for (auto b : a) rep.csv << int(b);
    rep.csv << "\n";
    rep.finish(g, steps);
    return sat ? 0 : 1;
}

int cmd_xorsat_reduce(const Globals& g, const std::string& file) {
    XorFormula f = read_xor_formula_file(file);
    json jp{{"formula", file}};
    json inputs{{file, file_digest(file)}};
    Report rep("xorsat reduce", g, jp, inputs);
    auto [red, trace] = reduce(f);
    rep.csv << "# events=" << trace.events.size() << " unsat=" << trace.unsat << "\n";
    std::ostringstream body;
    write_xor_formula(body, red);
    rep.csv << body.str();
    rep.finish(g);
    return trace.unsat ? 1 : 0;
}

int cmd_xorsat_bound(const Globals& g, const std::string& file, int s) {
    XorFormula f = read_xor_formula_file(file);
    json jp{{"formula", file}, {"s", s}};
    json inputs{{file, file_digest(file)}};
    Report rep("xorsat bound", g, jp, inputs);
    auto b = time_bound(f, s);
    rep.csv << "m,n,s,tau_c,tau_c_method,term_cubic,term_cheeger_ln2,term_cheeger_log2,"
               "bound_ln2,bound_log2\n";
    rep.csv << b.m << "," << b.n << "," << b.s << "," << b.tau_c.to_double() << ","
            << b.tau_c_method << "," << b.term_cubic << "," << b.term_cheeger_ln2 << ","
            << b.term_cheeger_log2 << "," << b.bound_ln2 << "," << b.bound_log2 << "\n";
    rep.finish(g);
    return 0;
}

int cmd_xorsat_bench(const Globals& g, int m, int trials, long long max_steps) {
    json jp{{"m", m}, {"trials", trials}, {"max_steps", max_steps}};
    Report rep("xorsat bench", g, jp);
    rep.csv << "trial,steps,sat\n";
    double sum = 0;
    long long total = 0;
    int solved = 0;
    XorFormula f0 = circulant_instance(m, sub_seed(g.seed, 0));
    auto bound = time_bound(f0);
    for (int i = 0; i < trials; ++i) {
        XorFormula f = circulant_instance(m, sub_seed(g.seed, i));
        Rng rng(sub_seed(g.seed ^ 0xb0b0b0b0ULL, i));
        auto r = random_walk_sat(f, Assignment(f.n, 0), rng, max_steps);
        rep.csv << i << "," << r.steps << "," << r.sat << "\n";
        total += r.steps;
        if (r.sat) {
            sum += double(r.steps);
            ++solved;
        }
    }
    double mean = solved ? sum / solved : -1;
    rep.csv << "# mean=" << mean << " solved=" << solved << " bound_ln2=" << bound.bound_ln2
            << " bound_log2=" << bound.bound_log2 << "\n";
    rep.finish(g, total);
    return 0;
}

int cmd_scaling(const Globals& g, const std::string& family, const std::vector<int>& sizes,
                double p, int trials, long long max_steps) {
    if (sizes.size() < 2) throw std::runtime_error("scaling: need at least two sizes for a slope");
    json jp{{"family", family}, {"sizes", sizes}, {"p", p}, {"trials", trials},
            {"max_steps", max_steps}};
    Report rep("scaling", g, jp);
    rep.csv << "size,triangles,mean,variance,trials,censored\n";
    std::vector<double> xs, ys;
    long long total = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        SignedGraph sg = family == "lattice" ? triangular_lattice_section(sizes[i])
                                             : generate_triadic_cycle(sizes[i]);
        DynamicsParams params;
        params.p = p;
        params.trials = trials;
        params.max_steps = max_steps;
        params.seed = sub_seed(g.seed, 1000 + i);
        auto stats = estimate_tau_sb(sg, params, InitialStateStrategy::AllNegative, nullptr,
                                     g.threads);
        rep.csv << sizes[i] << "," << sg.triangle_count() << "," << stats.mean << ","
                << stats.variance << "," << trials << "," << stats.censored << "\n";
        xs.push_back(double(sg.triangle_count()));
        ys.push_back(stats.mean);
        for (long long t : stats.times) total += t;
    }
    auto fit = loglog_fit(xs, ys);
    rep.csv << "# slope=" << fit.slope << " stderr=" << fit.stderr_slope
            << " intercept=" << fit.intercept << "\n";
    rep.finish(g, total);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"social-balance dynamics toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand
    Globals g;
    if (const char* env = std::getenv("BALANCE_THREADS")) g.threads = std::atoi(env);
    app.add_option("--seed", g.seed, "master RNG seed");
    app.add_option("--out", g.out, "output CSV path (manifest written alongside)");
    app.add_option("--format", g.format, "output format (csv)");
    app.add_option("--threads", g.threads, "worker threads for trial loops");

    // simulate
    auto* sim = app.add_subcommand("simulate", "triad dynamics until recurrence");
    std::string sim_graph, sim_start = "allneg";
    int sim_tc = 0, sim_lattice = 0, sim_trials = 100;
    double sim_p = 0.5;
    long long sim_max = -1;
    sim->add_option("--graph", sim_graph, "signed graph file");
    sim->add_option("--tc", sim_tc, "triadic cycle size");
    sim->add_option("--lattice", sim_lattice, "triangular lattice section size");
    sim->add_option("--p", sim_p, "dynamics parameter p in (0,1)");
    sim->add_option("--trials", sim_trials);
    sim->add_option("--max-steps", sim_max);
    sim->add_option("--start", sim_start)->check(CLI::IsMember({"allneg", "random"}));

    // walk
    auto* walk = app.add_subcommand("walk", "annihilating/coalescing walks and meeting times");
    std::string walk_mode, walk_edges, walk_starts;
    int walk_cycle = 0, walk_complete = 0, walk_circulant = 0, walk_cubic = 0, walk_trials = 100;
    std::uint64_t walk_gseed = 1;
    long long walk_max = -1;
    walk->add_option("--mode", walk_mode)->required()->check(
        CLI::IsMember({"arw", "crw", "coupled", "meeting"}));
    walk->add_option("--edges", walk_edges, "plain graph file: 'n m' then edges");
    walk->add_option("--cycle", walk_cycle);
    walk->add_option("--complete", walk_complete);
    walk->add_option("--circulant", walk_circulant);
    walk->add_option("--cubic", walk_cubic);
    walk->add_option("--gseed", walk_gseed, "seed for random graph families");
    walk->add_option("--starts", walk_starts, "comma-separated start vertices");
    walk->add_option("--trials", walk_trials);
    walk->add_option("--max-steps", walk_max);

    // reach / recur
    std::string r_h, r_w1, r_w2;
    bool r_witness = false;
    auto* reach = app.add_subcommand("reach", "switching reachability decision");
    reach->add_option("--hypergraph", r_h)->required();
    reach->add_option("--w1", r_w1)->required();
    reach->add_option("--w2", r_w2)->required();
    reach->add_flag("--witness", r_witness, "emit a legal schedule");
    auto* recur = app.add_subcommand("recur", "recurrence decision");
    recur->add_option("--hypergraph", r_h)->required();
    recur->add_option("--w1", r_w1)->required();
    recur->add_option("--w2", r_w2)->required();

    // cheeger
    auto* chg = app.add_subcommand("cheeger", "Cheeger time of a graph");
    std::string chg_edges, chg_mode = "exact";
    int chg_cycle = 0, chg_complete = 0, chg_circulant = 0, chg_cubic = 0, chg_samples = 1000;
    std::uint64_t chg_gseed = 1;
    chg->add_option("--edges", chg_edges);
    chg->add_option("--cycle", chg_cycle);
    chg->add_option("--complete", chg_complete);
    chg->add_option("--circulant", chg_circulant);
    chg->add_option("--cubic", chg_cubic);
    chg->add_option("--gseed", chg_gseed);
    chg->add_option("--mode", chg_mode)->check(CLI::IsMember({"exact", "regular", "sampled"}));
    chg->add_option("--samples", chg_samples);

    // xorsat
    auto* xs = app.add_subcommand("xorsat", "3-XOR-SAT tools");
    xs->require_subcommand(1);
    std::string xs_file, xs_method = "gf2";
    long long xs_max = -1;
    int xs_s = -1, xs_m = 16, xs_trials = 500;
    auto* xsolve = xs->add_subcommand("solve", "solve a formula");
    xsolve->add_option("--formula", xs_file)->required();
    xsolve->add_option("--method", xs_method)->check(CLI::IsMember({"gf2", "rwsat"}));
    xsolve->add_option("--max-steps", xs_max);
    auto* xreduce = xs->add_subcommand("reduce", "emit the reduced formula");
    xreduce->add_option("--formula", xs_file)->required();
    auto* xbound = xs->add_subcommand("bound", "expected-time bound report");
    xbound->add_option("--formula", xs_file)->required();
    xbound->add_option("--s", xs_s, "connectivity parameter (-1: maximal)");
    auto* xbench = xs->add_subcommand("bench", "RandomWalkSat vs the bound on circulant instances");
    xbench->add_option("--m", xs_m);
    xbench->add_option("--trials", xs_trials);
    xbench->add_option("--max-steps", xs_max);

    // scaling
    auto* sc = app.add_subcommand("scaling", "convergence-time scaling experiment");
    std::string sc_family = "tc", sc_sizes;
    double sc_p = 0.5;
    int sc_trials = 200;
    long long sc_max = -1;
    sc->add_option("--family", sc_family)->check(CLI::IsMember({"tc", "lattice"}));
    sc->add_option("--sizes", sc_sizes)->required();
    sc->add_option("--p", sc_p);
    sc->add_option("--trials", sc_trials);
    sc->add_option("--max-steps", sc_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed())
            return cmd_simulate(g, sim_graph, sim_tc, sim_lattice, sim_p, sim_trials, sim_max,
                                sim_start);
        if (walk->parsed()) {
            Graph graph = load_plain_graph(walk_edges, walk_cycle, walk_complete, walk_circulant,
                                           walk_cubic, walk_gseed);
            std::vector<int> starts = parse_int_list(walk_starts);
            if (walk_mode != "meeting" && starts.empty())
                throw std::runtime_error("walk: --starts required for arw/crw/coupled");
            return cmd_walk(g, walk_mode, graph, starts, walk_trials, walk_max);
        }
        if (reach->parsed()) return cmd_reach(g, r_h, r_w1, r_w2, r_witness, false);
        if (recur->parsed()) return cmd_reach(g, r_h, r_w1, r_w2, false, true);
        if (chg->parsed()) {
            Graph graph = load_plain_graph(chg_edges, chg_cycle, chg_complete, chg_circulant,
                                           chg_cubic, chg_gseed);
            return cmd_cheeger(g, graph, chg_mode, chg_samples);
        }
        if (xs->parsed()) {
            if (xsolve->parsed()) return cmd_xorsat_solve(g, xs_file, xs_method, xs_max);
            if (xreduce->parsed()) return cmd_xorsat_reduce(g, xs_file);
            if (xbound->parsed()) return cmd_xorsat_bound(g, xs_file, xs_s);
            if (xbench->parsed()) return cmd_xorsat_bench(g, xs_m, xs_trials, xs_max);
        }
        if (sc->parsed())
            return cmd_scaling(g, sc_family, parse_int_list(sc_sizes), sc_p, sc_trials, sc_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
