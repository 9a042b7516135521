#include "cwg/paths.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace cwg {

namespace {

PathResult longest_path_dp(const Graph& g, const std::vector<Vertex>& comp) {
    int k = static_cast<int>(comp.size());
    std::vector<int> idx(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) idx[comp[i]] = i;
    std::vector<uint32_t> adj(k, 0);
    for (int i = 0; i < k; ++i)
        for (Vertex w : g.neighbors(comp[i]))
            if (idx[w] >= 0) adj[i] |= 1u << idx[w];

    // dp[mask][v]: can a path visit exactly mask and end at v
    std::vector<uint32_t> reach(size_t(1) << k, 0);  // bit v set if (mask,v) feasible
    for (int v = 0; v < k; ++v) reach[1u << v] = 1u << v;
    int best_len = 0;
    uint32_t best_mask = 1, best_end = 0;
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
        uint32_t ends = reach[mask];
        if (!ends) continue;
        int len = std::popcount(mask) - 1;
        if (len > best_len) {
            best_len = len;
            best_mask = mask;
            best_end = static_cast<uint32_t>(std::countr_zero(ends));
        }
        for (uint32_t es = ends; es;) {
            int v = std::countr_zero(es);
            es &= es - 1;
            uint32_t nxt = adj[v] & ~mask;
            while (nxt) {
                int w = std::countr_zero(nxt);
                nxt &= nxt - 1;
                reach[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    // rebuild one optimal path backwards
    std::vector<Vertex> path{comp[best_end]};
    uint32_t mask = best_mask;
    int cur = static_cast<int>(best_end);
    while (std::popcount(mask) > 1) {
        uint32_t prev_mask = mask & ~(1u << cur);
        for (int p = 0; p < k; ++p) {
            if ((prev_mask >> p & 1) && (adj[p] >> cur & 1) && (reach[prev_mask] >> p & 1)) {
                path.push_back(comp[p]);
                mask = prev_mask;
                cur = p;
                break;
            }
        }
    }
    std::reverse(path.begin(), path.end());
    return {best_len, path, true};
}

void dfs_lower_bound(const Graph& g, Vertex v, std::vector<char>& used, std::vector<Vertex>& cur,
                     std::vector<Vertex>& best, long long& budget) {
    if (cur.size() > best.size()) best = cur;
    if (budget-- <= 0) return;
    for (Vertex w : g.neighbors(v)) {
        if (used[w]) continue;
        used[w] = 1;
        cur.push_back(w);
        dfs_lower_bound(g, w, used, cur, best, budget);
        cur.pop_back();
        used[w] = 0;
        if (budget <= 0) return;
    }
}

}  // namespace

PathResult longest_path(const Graph& g, int exact_cap) {
    PathResult best;
    best.length = 0;
    bool all_exact = true;
    for (auto& comp : connected_components(g)) {
        PathResult r;
        if (static_cast<int>(comp.size()) <= exact_cap) {
            r = longest_path_dp(g, comp);
        } else {
            r.exact = false;
            std::vector<char> used(g.vertex_count(), 0);
            std::vector<Vertex> cur, bestp;
            long long budget = 2'000'000;
            for (Vertex s : comp) {
                used[s] = 1;
                cur = {s};
                dfs_lower_bound(g, s, used, cur, bestp, budget);
                used[s] = 0;
                if (budget <= 0) break;
            }
            r.path = bestp;
            r.length = bestp.empty() ? 0 : static_cast<int>(bestp.size()) - 1;
        }
        if (!r.exact) all_exact = false;
        if (r.length > best.length || best.path.empty()) {
            best.length = r.length;
            best.path = r.path;
        }
    }
    best.exact = all_exact;
    if (best.path.empty() && g.vertex_count() > 0) best.path = {0};
    return best;
}

namespace {

bool extend_path(const Graph& g, Vertex v, int remaining, std::vector<char>& used) {
    if (remaining == 0) return true;
    for (Vertex w : g.neighbors(v)) {
        if (used[w]) continue;
        used[w] = 1;
        if (extend_path(g, w, remaining - 1, used)) return true;
        used[w] = 0;
    }
    return false;
}

}  // namespace

bool has_path_of_length(const Graph& g, int len) {
    if (len <= 0) return g.vertex_count() > 0;
    std::vector<char> used(g.vertex_count(), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (g.degree(s) == 0) continue;
        used.assign(g.vertex_count(), 0);
        used[s] = 1;
        if (extend_path(g, s, len, used)) return true;
    }
    return false;
}

namespace {

struct SubsetScan {
    const Graph& g;
    std::vector<int> ecnt;  // e(S) per subset
    std::vector<long long> degsum;

    explicit SubsetScan(const Graph& gr) : g(gr) {
        int n = g.vertex_count();
        ecnt.assign(size_t(1) << n, 0);
        degsum.assign(size_t(1) << n, 0);
        for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
            int v = std::countr_zero(s);
            uint64_t rest = s & (s - 1);
            ecnt[s] = ecnt[rest] + std::popcount(g.adjacency_mask(v) & rest);
            degsum[s] = degsum[rest] + g.degree(v);
        }
    }

    long long cut(uint64_t s) const { return degsum[s] - 2LL * ecnt[s]; }
};

std::vector<Vertex> bits_to_vertices(uint64_t s) {
    std::vector<Vertex> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

}  // namespace

std::variant<CertifiedPath, ConditionFailure> certified_long_path(const Graph& g,
                                                                  SparsityParams params,
                                                                  CertifyOptions opts) {
    int n = g.vertex_count();
    double eps = params.eps;
    double d1 = params.delta1 > 0 ? params.delta1 : std::exp(-3.0 / eps - 1.0);
    double d2 = params.delta2 > 0 ? params.delta2 : d1 * d1;
    double gamma = params.gamma > 0 ? params.gamma : (eps * d2) * (eps * d2);

    if (g.edge_count() < (1.0 + eps) * n) return ConditionFailure{1, {}};

    bool certified = true;
    if (n <= opts.exact_vertex_cap) {
        SubsetScan scan(g);
        for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
            int k = std::popcount(s);
            if (k <= d1 * n && scan.ecnt[s] >= (1.0 + eps) * k)
                return ConditionFailure{2, bits_to_vertices(s)};
            if (k <= d2 * n && scan.ecnt[s] >= (1.0 + eps / 2.0) * k)
                return ConditionFailure{3, bits_to_vertices(s)};
            if (k <= gamma * n && scan.cut(s) >= (eps * d2 / 2.0) * n)
                return ConditionFailure{4, bits_to_vertices(s)};
        }
    } else if (opts.allow_sampled) {
        certified = false;
        Rng rng(opts.seed);
        auto sample_check = [&](double frac, double rate, bool cut_mode, int prop)
            -> std::optional<ConditionFailure> {
            int cap = static_cast<int>(frac * n);
            if (cap < 1) return std::nullopt;
            for (int it = 0; it < opts.samples; ++it) {
                int k = 1 + rng.uniform_int(cap);
                std::vector<Vertex> set;
                std::vector<char> in(n, 0);
                while (static_cast<int>(set.size()) < k) {
                    Vertex v = rng.uniform_int(n);
                    if (!in[v]) {
                        in[v] = 1;
                        set.push_back(v);
                    }
                }
                long long inside = 0, cut = 0;
                for (Vertex v : set)
                    for (Vertex w : g.neighbors(v)) {
                        if (in[w]) ++inside;
                        else ++cut;
                    }
                inside /= 2;
                if (!cut_mode && inside >= rate * k) return ConditionFailure{prop, set};
                if (cut_mode && cut >= rate) return ConditionFailure{prop, set};
            }
            return std::nullopt;
        };
        if (auto f = sample_check(d1, 1.0 + eps, false, 2)) return *f;
        if (auto f = sample_check(d2, 1.0 + eps / 2.0, false, 3)) return *f;
        if (auto f = sample_check(gamma, eps * d2 / 2.0 * n, true, 4)) return *f;
    } else {
        throw SizeLimitError("certified_long_path: exact premise check over vertex cap");
    }

    // component with surplus edges
    std::vector<Vertex> comp_pick;
    for (auto& comp : connected_components(g)) {
        std::vector<char> in(n, 0);
        for (Vertex v : comp) in[v] = 1;
        long long e = 0;
        for (const Edge& ed : g.edges())
            if (in[ed.u] && in[ed.v]) ++e;
        if (e >= (1.0 + eps) * comp.size()) {
            comp_pick = comp;
            break;
        }
    }
    if (comp_pick.empty()) return ConditionFailure{1, {}};

    // DFS where the stack always spans a path; snapshot it at block moments
    std::sort(comp_pick.begin(), comp_pick.end());
    std::vector<char> in_comp(n, 0), done(n, 0), on_stack(n, 0);
    for (Vertex v : comp_pick) in_comp[v] = 1;
    int block = std::max(1, static_cast<int>(d2 * n));
    std::vector<int> block_of(n, -1);
    std::vector<std::vector<Vertex>> snapshots;  // stack at each block boundary
    std::vector<Vertex> stack;
    int finished = 0;
    size_t cursor = 0;
    std::vector<Vertex> best_stack;
    while (finished < static_cast<int>(comp_pick.size())) {
        if (stack.empty()) {
            while (cursor < comp_pick.size() && (done[comp_pick[cursor]] || on_stack[comp_pick[cursor]]))
                ++cursor;
            if (cursor >= comp_pick.size()) break;
            stack.push_back(comp_pick[cursor]);
            on_stack[comp_pick[cursor]] = 1;
        }
        Vertex u = stack.back();
        Vertex next = -1;
        for (Vertex w : g.neighbors(u)) {
            if (in_comp[w] && !done[w] && !on_stack[w]) {
                if (next < 0 || w < next) next = w;
            }
        }
        if (next >= 0) {
            stack.push_back(next);
            on_stack[next] = 1;
            if (stack.size() > best_stack.size()) best_stack = stack;
        } else {
            stack.pop_back();
            on_stack[u] = 0;
            done[u] = 1;
            block_of[u] = finished / block;
            ++finished;
            if (finished % block == 0) snapshots.push_back(stack);
        }
    }
    snapshots.push_back({});

    // first block sending enough edges forward; at that moment those edges
    // all land in the stack
    int blocks = (finished + block - 1) / block;
    double need = eps * d2 / 2.0 * n;
    std::vector<Vertex> chosen;
    for (int b = 0; b + 1 <= blocks - 1; ++b) {
        long long fwd = 0;
        for (const Edge& ed : g.edges()) {
            if (!in_comp[ed.u] || !in_comp[ed.v]) continue;
            int bu = block_of[ed.u], bv = block_of[ed.v];
            if (std::min(bu, bv) == b && std::max(bu, bv) > b) ++fwd;
        }
        if (fwd >= need && b < static_cast<int>(snapshots.size())) {
            chosen = snapshots[b];
            break;
        }
    }
    if (chosen.empty()) chosen = best_stack;

    CertifiedPath out;
    out.path = chosen;
    out.certified = certified;
    for (size_t i = 0; i + 1 < out.path.size(); ++i)
        if (!g.has_edge(out.path[i], out.path[i + 1]))
            throw InternalError("certified_long_path: extracted sequence is not a path");
    return out;
}

namespace {

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

ExpansionResult ksets_expansion_check(const Graph& g, int k, long long pair_budget,
                                      bool allow_sampled, int samples, uint64_t seed) {
    int n = g.vertex_count();
    if (k < 1 || 2 * k > n) throw UsageError("ksets_expansion_check: need 1 <= k and 2k <= n");
    double sets = 1;
    for (int i = 0; i < k; ++i) sets = sets * (n - i) / (i + 1);
    ExpansionResult res;
    if (sets * sets <= static_cast<double>(pair_budget)) {
        res.exact = true;
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) c[i] = i;
        do {
            // B must avoid A and all its neighbours; if enough room, no edge A-B
            std::vector<char> blocked(n, 0);
            for (int v : c) {
                blocked[v] = 1;
                for (Vertex w : g.neighbors(v)) blocked[w] = 1;
            }
            std::vector<Vertex> freev;
            for (Vertex v = 0; v < n; ++v)
                if (!blocked[v]) freev.push_back(v);
            if (static_cast<int>(freev.size()) >= k) {
                res.pass = false;
                res.witness_a.assign(c.begin(), c.end());
                res.witness_b.assign(freev.begin(), freev.begin() + k);
                return res;
            }
        } while (next_combination(c, n));
        res.pass = true;
        return res;
    }
    if (!allow_sampled) throw BudgetExceededError("ksets_expansion_check: pair budget exceeded");
    res.exact = false;
    Rng rng(seed);
    for (int it = 0; it < samples; ++it) {
        std::vector<Vertex> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        rng.shuffle(perm);
        std::vector<Vertex> a(perm.begin(), perm.begin() + k);
        std::vector<Vertex> b(perm.begin() + k, perm.begin() + 2 * k);
        bool edge = false;
        for (Vertex u : a) {
            for (Vertex v : b)
                if (g.has_edge(u, v)) {
                    edge = true;
                    break;
                }
            if (edge) break;
        }
        if (!edge) {
            res.pass = false;
            res.witness_a = a;
            res.witness_b = b;
            return res;
        }
    }
    res.pass = true;
    return res;
}

}  // namespace cwg
