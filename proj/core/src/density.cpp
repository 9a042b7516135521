#include "cwg/density.hpp"

#include <algorithm>
#include <bit>

#include "cwg/maxflow.hpp"

namespace cwg {

namespace {

/// e(S) for every vertex subset S, by peeling the lowest set bit:
/// e(S) = e(S - v) + |adj(v) & (S - v)|.
std::vector<int> subset_edge_counts(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> cnt(size_t(1) << n, 0);
    for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
        int v = std::countr_zero(s);
        uint64_t rest = s & (s - 1);
        cnt[s] = cnt[rest] + std::popcount(g.adjacency_mask(v) & rest);
    }
    return cnt;
}

}  // namespace

Rat max_density_exhaustive(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap) throw SizeLimitError("max_density_exhaustive: graph over vertex cap");
    if (n == 0 || g.edge_count() == 0) return Rat(0);
    auto cnt = subset_edge_counts(g);
    Rat best(0);
    for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
        Rat d(cnt[s], std::popcount(s));
        if (d > best) best = d;
    }
    return best;
}

std::vector<Vertex> densest_subgraph(const Graph& g) {
    int n = g.vertex_count();
    int e = g.edge_count();
    std::vector<Vertex> best_set;
    for (Vertex v = 0; v < n; ++v) best_set.push_back(v);
    if (e == 0) return best_set;

    // Dinkelbach iteration: with guess a/b, the min s-t cut of the scaled
    // network equals 2be - 2*max_S (b*e(S) - a*|S|). Any improving S raises
    // the guess to d(S) exactly; densities are rationals with denominator
    // <= n, so this terminates.
    long long a = e, b = n;  // start at d(G)
    while (true) {
        int s = n, t = n + 1;
        MaxFlow mf(n + 2);
        for (Vertex v = 0; v < n; ++v) {
            mf.add_edge(s, v, b * g.degree(v));
            mf.add_edge(v, t, 2 * a);
        }
        for (const Edge& ed : g.edges()) {
            mf.add_edge(ed.u, ed.v, b);
            mf.add_edge(ed.v, ed.u, b);
        }
        long long flow = mf.run(s, t);
        if (flow >= 2 * b * e) break;
        auto side = mf.min_cut_side(s);
        std::vector<Vertex> cand;
        for (Vertex v = 0; v < n; ++v)
            if (side[v]) cand.push_back(v);
        long long cnt = 0;
        for (const Edge& ed : g.edges())
            if (side[ed.u] && side[ed.v]) ++cnt;
        if (cand.empty() || cnt * b <= a * static_cast<long long>(cand.size()))
            throw InternalError("densest_subgraph: flow iteration failed to improve");
        best_set = cand;
        a = cnt;
        b = static_cast<long long>(cand.size());
    }
    return best_set;
}

Rat max_density(const Graph& g) {
    if (g.edge_count() == 0) return Rat(0);
    auto set = densest_subgraph(g);
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : set) in[v] = 1;
    long long cnt = 0;
    for (const Edge& ed : g.edges())
        if (in[ed.u] && in[ed.v]) ++cnt;
    return Rat(cnt, static_cast<long long>(set.size()));
}

Rat arboricity_exact(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap) throw SizeLimitError("arboricity_exact: graph over vertex cap");
    if (g.edge_count() == 0) return Rat(0);
    auto cnt = subset_edge_counts(g);
    Rat best(0);
    for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
        int k = std::popcount(s);
        if (k < 2) continue;
        Rat d(cnt[s], k - 1);
        if (d > best) best = d;
    }
    return best;
}

DensityReport density_report(const Graph& g, const DensityOptions& opts) {
    int n = g.vertex_count();
    int e = g.edge_count();
    if (n == 0) throw UsageError("density_report: empty graph");
    DensityReport r;
    r.d = Rat(e, n);
    r.d2 = n <= 2 ? Rat(0) : Rat(e - 1, n - 2);
    r.m = n <= opts.flow_threshold ? max_density_exhaustive(g, opts.flow_threshold)
                                   : max_density(g);
    if (n > opts.exhaustive_cap)
        throw SizeLimitError("density_report: subset-enumerated measures over vertex cap");
    auto cnt = subset_edge_counts(g);
    Rat m2(0), mp(0), mpp(0);
    bool saw_mp = false, saw_mpp = false;
    for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
        int k = std::popcount(s);
        int es = cnt[s];
        Rat p(es - 1, k);
        if (!saw_mp || p > mp) {
            mp = p;
            saw_mp = true;
        }
        if (k >= 3) {
            Rat d2(es - 1, k - 2);
            if (d2 > m2) m2 = d2;
            Rat pp(es + 1, k - 2);
            if (!saw_mpp || pp > mpp) {
                mpp = pp;
                saw_mpp = true;
            }
        }
    }
    r.m2 = m2;
    r.m_prime = saw_mp ? mp : Rat(0);
    r.m_dprime = saw_mpp ? mpp : Rat(0);  // 0 when no subgraph on >= 3 vertices
    r.ar = arboricity_exact(g, std::max(opts.arboricity_cap, opts.exhaustive_cap));
    return r;
}

bool is_balanced(const Graph& g, const DensityOptions& opts) {
    DensityReport r = density_report(g, opts);
    return r.d == r.m;
}

bool is_2balanced(const Graph& g, const DensityOptions& opts) {
    DensityReport r = density_report(g, opts);
    return r.d2 == r.m2;
}

bool is_strictly_balanced(const Graph& g, const DensityOptions& opts) {
    int n = g.vertex_count();
    if (n > opts.exhaustive_cap) throw SizeLimitError("is_strictly_balanced: over vertex cap");
    if (n == 0 || g.edge_count() == 0) return false;
    auto cnt = subset_edge_counts(g);
    uint64_t full = (uint64_t(1) << n) - 1;
    Rat whole(g.edge_count(), n);
    for (uint64_t s = 1; s < full; ++s)
        if (Rat(cnt[s], std::popcount(s)) >= whole) return false;
    return true;
}

bool is_strictly_2balanced(const Graph& g, const DensityOptions& opts) {
    int n = g.vertex_count();
    if (n > opts.exhaustive_cap) throw SizeLimitError("is_strictly_2balanced: over vertex cap");
    if (n < 3) return false;
    auto cnt = subset_edge_counts(g);
    uint64_t full = (uint64_t(1) << n) - 1;
    Rat whole(g.edge_count() - 1, n - 2);
    for (uint64_t s = 1; s < full; ++s) {
        int k = std::popcount(s);
        if (k < 3) continue;
        if (Rat(cnt[s] - 1, k - 2) >= whole) return false;
    }
    return true;
}

}  // namespace cwg
