#include "cwg/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "cwg/cores.hpp"
#include "cwg/density.hpp"
#include "cwg/family.hpp"
#include "cwg/paths.hpp"
#include "cwg/registry.hpp"
#include "cwg/solver.hpp"
#include "cwg/strategies.hpp"
#include "cwg/subgraph_iso.hpp"
#include "cwg/triangles.hpp"

namespace cwg {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    auto ints = [&](const std::string& v) {
        std::vector<int> out;
        for (auto& t : split(v, ',')) out.push_back(std::stoi(trim(t)));
        return out;
    };
    auto doubles = [&](const std::string& v) {
        std::vector<double> out;
        for (auto& t : split(v, ',')) out.push_back(std::stod(trim(t)));
        return out;
    };
    if (key == "kind") cfg.kind = value;
    else if (key == "n") cfg.n_grid = ints(value);
    else if (key == "q_grid") cfg.q_grid = ints(value);
    else if (key == "p") cfg.p_grid = doubles(value);
    else if (key == "c") cfg.c_grid = doubles(value);
    else if (key == "repetitions" || key == "R") cfg.repetitions = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "waiter") cfg.waiter = value;
    else if (key == "client") cfg.client = value;
    else if (key == "pattern" || key == "goal") cfg.pattern = value;
    else if (key == "q") cfg.q = std::stoi(value);
    else if (key == "k") cfg.k = std::stoi(value);
    else if (key == "solver_budget") cfg.solver_budget = std::stoi(value);
    else if (key == "threads") cfg.threads = std::stoi(value);
    else if (key == "out_dir") cfg.out_dir = value;
    else if (key == "format") cfg.format = value;
    else throw UsageError("unknown config key: " + key);
}

ExperimentConfig load_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line has no '=': " + line);
        apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

WilsonInterval wilson(long long successes, long long trials, double z) {
    WilsonInterval w;
    if (trials <= 0) return w;
    double p = static_cast<double>(successes) / trials;
    double n = static_cast<double>(trials);
    double denom = 1.0 + z * z / n;
    w.center = (p + z * z / (2 * n)) / denom;
    w.half = z / denom * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
    return w;
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0)
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex err_mu;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    failed = true;
                    error = e.what();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failed) throw Error("parallel task failed: " + error);
}

// ------------------------------------------------------------- bias curve ---

namespace {

double star_bound(int n, int q) { return 2.0 * std::ceil((n - 1.0) / (q + 2.0)); }

double component_bound(int n, int q) {
    // largest 3^k with q >= 6 n^{2^k/(2^k-1)}
    double best = static_cast<double>(n);
    for (int k = 1; k <= 30; ++k) {
        double expo = std::pow(2.0, k) / (std::pow(2.0, k) - 1.0);
        if (q >= 6.0 * std::pow(n, expo)) best = std::pow(3.0, k);
    }
    return best;
}

double path_bound(int n, int q) {
    double best = static_cast<double>(n);
    for (int k = 1; k <= 30; ++k) {
        double expo = std::pow(2.0, k) / (std::pow(2.0, k) - 1.0);
        if (q >= 3.0 * std::pow(n, expo)) best = 2.0 * k;
    }
    return best;
}

int max_client_star(const Graph& g) { return g.max_degree(); }

int max_client_component(const Graph& g) {
    int best = 0;
    for (auto& c : connected_components(g)) best = std::max(best, static_cast<int>(c.size()));
    return best;
}

}  // namespace

std::vector<BiasCurveRow> bias_curve(const ExperimentConfig& cfg) {
    struct Task {
        int n, q, rep;
    };
    std::vector<Task> tasks;
    for (int n : cfg.n_grid)
        for (int q : cfg.q_grid)
            for (int rep = 0; rep < cfg.repetitions; ++rep) tasks.push_back({n, q, rep});
    std::vector<BiasCurveRow> rows(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), cfg.threads, [&](int i) {
        const Task& t = tasks[i];
        uint64_t seed = Rng::derive(cfg.seed, static_cast<uint64_t>(i));
        Graph board = make_complete(t.n);
        Goal goal = Goal::component_at_least(board.vertex_count() + 1);  // never met: full play
        GameState start = new_game(board, goal, t.q, Variant::ClientWaiter);
        auto waiter = make_waiter(cfg.waiter, board, t.q, Rng::derive(seed, 1));
        auto client = make_client(cfg.client, board, t.q, Rng::derive(seed, 2));
        PlayOptions opts;
        opts.early_stop = false;
        GameRecord rec = play(start, *waiter, *client, opts);
        Graph cg = rec.final_state.client_graph();
        BiasCurveRow row;
        row.n = t.n;
        row.q = t.q;
        row.rep = t.rep;
        row.waiter = cfg.waiter;
        row.client = cfg.client;
        row.seed = seed;
        row.max_star = max_client_star(cg);
        row.max_component = max_client_component(cg);
        PathResult pr = longest_path(cg);
        row.longest_path = pr.length;
        row.path_exact = pr.exact;
        if (cfg.waiter == "star") row.bound = star_bound(t.n, t.q);
        else if (cfg.waiter == "component" || cfg.waiter == "sc") row.bound = component_bound(t.n, t.q);
        else if (cfg.waiter == "path" || cfg.waiter == "sp") row.bound = path_bound(t.n, t.q);
        rows[i] = std::move(row);
    });
    return rows;
}

// -------------------------------------------------------------- threshold ---

std::optional<bool> decide_triangle_game_exact(const Graph& g, int q, int solver_budget) {
    Graph k3 = make_complete(3);
    CoreTrace trace = q >= 2 ? k3_core(g) : h_core(g, k3);
    if (trace.core_edges.empty()) return false;
    Subgraph core = edge_subgraph(g, trace.core_edges);
    for (auto& comp : biconnected_components(core.graph)) {
        if (static_cast<int>(comp.size()) > solver_budget) return std::nullopt;
        Subgraph sub = edge_subgraph(core.graph, comp);
        Solver solver(sub.graph, Goal::contains_copy(k3), q, Variant::ClientWaiter,
                      SolveOptions{.max_edges = solver_budget});
        if (solver.solve() == Player::Client) return true;
    }
    return false;
}

std::vector<ThresholdRow> threshold_scan(const ExperimentConfig& cfg) {
    if (cfg.pattern != "K3")
        throw UsageError("threshold scan currently covers the triangle game");
    struct Task {
        int n, rep;
        double p, c;
    };
    std::vector<Task> tasks;
    Graph pat = pattern_by_name(cfg.pattern);
    Rat m2 = density_report(pat).m2;
    for (int n : cfg.n_grid) {
        std::vector<std::pair<double, double>> ps;  // (p, c)
        for (double p : cfg.p_grid) ps.push_back({p, p * std::pow(n, 1.0 / rat_double(m2))});
        for (double c : cfg.c_grid) ps.push_back({c * std::pow(n, -1.0 / rat_double(m2)), c});
        for (auto [p, c] : ps)
            for (int rep = 0; rep < cfg.repetitions; ++rep) tasks.push_back({n, rep, p, c});
    }
    std::vector<ThresholdRow> rows(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), cfg.threads, [&](int i) {
        const Task& t = tasks[i];
        uint64_t seed = Rng::derive(cfg.seed, static_cast<uint64_t>(i));
        Graph g = make_gnp(t.n, t.p, seed);
        ThresholdRow row;
        row.n = t.n;
        row.rep = t.rep;
        row.q = cfg.q;
        row.p = t.p;
        row.c = t.c;
        row.seed = seed;
        auto exact = decide_triangle_game_exact(g, cfg.q, cfg.solver_budget);
        if (exact.has_value()) {
            row.client_win = *exact;
            row.mode = g.edge_count() == 0 ? "exact-empty" : "exact-components";
        } else {
            // out of solver reach: play heuristics on the full board
            GameState start =
                new_game(g, Goal::contains_copy(make_complete(3)), cfg.q, Variant::ClientWaiter);
            auto waiter = waiter_greedy_blocker();
            auto client = client_greedy_triangle();
            GameRecord rec = play(start, *waiter, *client);
            row.client_win = rec.winner == Player::Client;
            row.mode = "played-budget";
        }
        rows[i] = std::move(row);
    });
    return rows;
}

// ------------------------------------------------------------ hitting time ---

namespace {

/// First prefix length at which the growing graph contains the 5-vertex
/// near-clique (nine of the ten pairs). -1 when never.
int first_witness_prefix(int n, const std::vector<std::pair<Vertex, Vertex>>& order) {
    std::vector<uint64_t> adj(n, 0);
    for (size_t i = 0; i < order.size(); ++i) {
        auto [u, v] = order[i];
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
        uint64_t cand = (adj[u] | adj[v]) & ~(1ULL << u) & ~(1ULL << v);
        std::vector<int> cs;
        for (int w = 0; w < n; ++w)
            if (cand >> w & 1) cs.push_back(w);
        int k = static_cast<int>(cs.size());
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                for (int c = b + 1; c < k; ++c) {
                    int five[5] = {u, v, cs[a], cs[b], cs[c]};
                    int pairs = 0;
                    for (int x = 0; x < 5; ++x)
                        for (int y = x + 1; y < 5; ++y)
                            if (adj[five[x]] >> five[y] & 1) ++pairs;
                    if (pairs >= 9) return static_cast<int>(i) + 1;
                }
    }
    return -1;
}

}  // namespace

std::vector<HittingTimeRow> hitting_time(const ExperimentConfig& cfg) {
    std::vector<HittingTimeRow> rows(static_cast<size_t>(cfg.repetitions) * cfg.n_grid.size());
    struct Task {
        int n, rep;
    };
    std::vector<Task> tasks;
    for (int n : cfg.n_grid)
        for (int rep = 0; rep < cfg.repetitions; ++rep) tasks.push_back({n, rep});
    parallel_for(static_cast<int>(tasks.size()), cfg.threads, [&](int i) {
        const Task& t = tasks[i];
        int n = t.n;
        uint64_t seed = Rng::derive(cfg.seed, static_cast<uint64_t>(i));
        Rng rng(seed);
        std::vector<std::pair<Vertex, Vertex>> order;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) order.push_back({u, v});
        rng.shuffle(order);

        HittingTimeRow row;
        row.n = n;
        row.rep = t.rep;
        row.seed = seed;
        row.tau_struct = first_witness_prefix(n, order);

        Graph g(n);
        row.tau_win = -1;
        int triangles = 0;
        for (size_t m = 0; m < order.size(); ++m) {
            auto [eu, ev] = order[m];
            g.add_edge(eu, ev);
            for (Vertex w : g.neighbors(eu))
                if (w != ev && g.has_edge(w, ev)) ++triangles;
            if (triangles == 0) continue;  // no triangle yet, Waiter's game
            auto got = decide_triangle_game_exact(g, 1, cfg.solver_budget);
            if (!got.has_value()) {
                row.flagged = true;
                break;
            }
            if (*got) {
                row.tau_win = static_cast<int>(m) + 1;
                break;
            }
        }
        rows[i] = std::move(row);
    });
    return rows;
}

// -------------------------------------------------------------- tree game ---

std::vector<TreeGameRow> tree_game(const ExperimentConfig& cfg) {
    int k = cfg.k, q = cfg.q;
    int m = (k * (q + 1)) * (k * (q + 1));
    MaryTree tree = make_mary_tree(m, k);
    Family family = tree_out_edges_family(tree, k, q);
    double phi_t = evaluate_criteria(family, q).phi_t;

    std::vector<std::pair<Vertex, std::vector<EdgeId>>> groups;
    std::vector<std::vector<EdgeId>> group_lists;
    for (Vertex x : tree.internal) {
        groups.push_back({x, tree.out_edges[x]});
        group_lists.push_back(tree.out_edges[x]);
    }
    Goal goal = Goal::out_edge_quota(k, groups);

    std::vector<std::string> waiters = split(cfg.waiter, ',');
    std::vector<TreeGameRow> rows(waiters.size() * static_cast<size_t>(cfg.repetitions));
    struct Task {
        size_t wi;
        int rep;
    };
    std::vector<Task> tasks;
    for (size_t wi = 0; wi < waiters.size(); ++wi)
        for (int rep = 0; rep < cfg.repetitions; ++rep) tasks.push_back({wi, rep});
    parallel_for(static_cast<int>(tasks.size()), cfg.threads, [&](int i) {
        const Task& t = tasks[i];
        uint64_t seed = Rng::derive(cfg.seed, static_cast<uint64_t>(i));
        std::unique_ptr<WaiterStrategy> waiter;
        const std::string& wk = waiters[t.wi];
        if (wk == "random") waiter = waiter_random(seed);
        else if (wk == "antiquota") waiter = waiter_anti_quota(group_lists, seed);
        else waiter = make_waiter(wk, tree.graph, q, seed);
        auto client = client_transversal_potential(family, q);
        GameState start = new_game(tree.graph, goal, q, Variant::ClientWaiter);
        GameRecord rec = play(start, *waiter, *client);
        TreeGameRow row;
        row.k = k;
        row.q = q;
        row.m = m;
        row.rep = t.rep;
        row.waiter = wk;
        row.seed = seed;
        row.client_win = rec.winner == Player::Client;
        row.quota_met = goal.achieved(tree.graph, rec.final_state.ownership(), false);
        row.phi_t = phi_t;
        rows[t.wi * cfg.repetitions + t.rep] = std::move(row);
    });
    return rows;
}

// -------------------------------------------------------------------- i/o ---

namespace {

std::string fmt_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

}  // namespace

void write_bias_curve_csv(std::ostream& out, const std::vector<BiasCurveRow>& rows) {
    out << "kind,n,q,rep,waiter,client,max_star,max_component,longest_path,path_exact,bound,seed\n";
    for (auto& r : rows)
        out << "bias-curve," << r.n << ',' << r.q << ',' << r.rep << ',' << r.waiter << ','
            << r.client << ',' << r.max_star << ',' << r.max_component << ',' << r.longest_path
            << ',' << (r.path_exact ? 1 : 0) << ',' << fmt_double(r.bound) << ',' << r.seed
            << '\n';
}

void write_threshold_csv(std::ostream& out, const std::vector<ThresholdRow>& rows) {
    out << "kind,n,q,rep,p,c,mode,client_win,seed\n";
    for (auto& r : rows)
        out << "threshold," << r.n << ',' << r.q << ',' << r.rep << ',' << fmt_double(r.p) << ','
            << fmt_double(r.c) << ',' << r.mode << ',' << (r.client_win ? 1 : 0) << ',' << r.seed
            << '\n';
}

void write_hitting_csv(std::ostream& out, const std::vector<HittingTimeRow>& rows) {
    out << "kind,n,rep,tau_win,tau_struct,flagged,seed\n";
    for (auto& r : rows)
        out << "hitting-time," << r.n << ',' << r.rep << ',' << r.tau_win << ',' << r.tau_struct
            << ',' << (r.flagged ? 1 : 0) << ',' << r.seed << '\n';
}

void write_tree_game_csv(std::ostream& out, const std::vector<TreeGameRow>& rows) {
    out << "kind,k,q,m,rep,waiter,client_win,quota_met,phi_t,seed\n";
    for (auto& r : rows)
        out << "tree-game," << r.k << ',' << r.q << ',' << r.m << ',' << r.rep << ',' << r.waiter
            << ',' << (r.client_win ? 1 : 0) << ',' << (r.quota_met ? 1 : 0) << ','
            << fmt_double(r.phi_t) << ',' << r.seed << '\n';
}

void write_svg_chart(std::ostream& out, const std::string& title, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<SvgSeries>& series, bool log_x) {
    const int W = 720, H = 480, ML = 70, MR = 160, MT = 50, MB = 60;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (auto& s : series)
        for (auto [x, y] : s.points) {
            double xx = log_x ? std::log10(std::max(x, 1e-12)) : x;
            xmin = std::min(xmin, xx);
            xmax = std::max(xmax, xx);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmin > xmax) {
        xmin = 0;
        xmax = 1;
        ymin = 0;
        ymax = 1;
    }
    if (xmax - xmin < 1e-12) xmax = xmin + 1;
    if (ymax - ymin < 1e-12) ymax = ymin + 1;
    auto X = [&](double x) {
        double xx = log_x ? std::log10(std::max(x, 1e-12)) : x;
        return ML + (xx - xmin) / (xmax - xmin) * (W - ML - MR);
    };
    auto Y = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title
        << "</text>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
        << H - MB << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
        << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        double fx = xmin + (xmax - xmin) * i / 4.0;
        double fy = ymin + (ymax - ymin) * i / 4.0;
        double px = ML + (W - ML - MR) * i / 4.0;
        double py = H - MB - (H - MT - MB) * i / 4.0;
        out << "<text x=\"" << px << "\" y=\"" << H - MB + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">"
            << fmt_double(log_x ? std::pow(10, fx) : fx).substr(0, 8) << "</text>\n";
        out << "<text x=\"" << ML - 8 << "\" y=\"" << py + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << fmt_double(fy).substr(0, 8)
            << "</text>\n";
    }
    out << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 16
        << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel << "</text>\n";
    out << "<text x=\"20\" y=\"" << (MT + H - MB) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 20 "
        << (MT + H - MB) / 2 << ")\">" << ylabel << "</text>\n";
    int li = 0;
    for (auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\" points=\"";
        for (auto [x, y] : s.points) out << X(x) << ',' << Y(y) << ' ';
        out << "\"/>\n";
        for (auto [x, y] : s.points)
            out << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"3\" fill=\"" << s.color
                << "\"/>\n";
        out << "<rect x=\"" << W - MR + 10 << "\" y=\"" << MT + 20 * li << "\" width=\"12\" height=\"12\" fill=\""
            << s.color << "\"/>\n";
        out << "<text x=\"" << W - MR + 28 << "\" y=\"" << MT + 20 * li + 10
            << "\" font-size=\"12\">" << s.label << "</text>\n";
        ++li;
    }
    out << "</svg>\n";
}

}  // namespace cwg
