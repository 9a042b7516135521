#include "cwg/forests.hpp"

#include <algorithm>
#include <deque>

namespace cwg {

std::vector<std::vector<EdgeId>> ForestDecomposition::classes(const Graph& g) const {
    std::vector<std::vector<EdgeId>> out(forest_count);
    for (EdgeId e = 0; e < g.edge_count(); ++e) out[assignment[e]].push_back(e);
    return out;
}

namespace {

/// Path between u and v inside one forest (edge ids), empty when different
/// trees. Plain BFS; the graphs here are small.
std::vector<EdgeId> forest_path(const Graph& g, const std::vector<std::vector<EdgeId>>& forest,
                                int fi, Vertex u, Vertex v) {
    int n = g.vertex_count();
    std::vector<EdgeId> via(n, -2);
    std::deque<Vertex> q{u};
    via[u] = -1;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        if (x == v) break;
        for (EdgeId e : forest[fi]) {
            Vertex a = g.edge(e).u, b = g.edge(e).v;
            if (a != x && b != x) continue;
            Vertex y = a == x ? b : a;
            if (via[y] == -2) {
                via[y] = e;
                q.push_back(y);
            }
        }
    }
    std::vector<EdgeId> path;
    if (via[v] == -2) return path;
    Vertex x = v;
    while (via[x] != -1) {
        EdgeId e = via[x];
        path.push_back(e);
        x = g.other_end(e, x);
    }
    return path;
}

}  // namespace

ForestDecomposition nash_williams(const Graph& g) {
    ForestDecomposition dec;
    dec.assignment.assign(g.edge_count(), -1);
    std::vector<std::vector<EdgeId>> forests;

    auto acyclic_with = [&](int fi, EdgeId e) {
        // adding e keeps forest fi acyclic iff its endpoints are disconnected there
        return forest_path(g, forests, fi, g.edge(e).u, g.edge(e).v).empty();
    };

    for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
        // BFS over the exchange graph: nodes are edges waiting for a slot.
        // parent[x] = (edge whose insertion evicts x, forest x sits in).
        std::vector<int> parent_edge(g.edge_count(), -2), parent_forest(g.edge_count(), -1);
        parent_edge[e0] = -1;
        std::deque<EdgeId> q{e0};
        bool placed = false;
        while (!q.empty() && !placed) {
            EdgeId x = q.front();
            q.pop_front();
            for (int fi = 0; fi < static_cast<int>(forests.size()); ++fi) {
                if (acyclic_with(fi, x)) {
                    // apply the exchange chain ending at x -> fi
                    EdgeId cur = x;
                    int target = fi;
                    while (cur != -1) {
                        int prev_forest = dec.assignment[cur];
                        if (prev_forest >= 0)
                            std::erase(forests[prev_forest], cur);
                        dec.assignment[cur] = target;
                        forests[target].push_back(cur);
                        EdgeId up = parent_edge[cur];
                        target = prev_forest;
                        cur = up;
                    }
                    placed = true;
                    break;
                }
                for (EdgeId y : forest_path(g, forests, fi, g.edge(x).u, g.edge(x).v)) {
                    if (parent_edge[y] == -2) {
                        parent_edge[y] = x;
                        parent_forest[y] = fi;
                        q.push_back(y);
                    }
                }
            }
        }
        if (!placed) {
            forests.push_back({e0});
            dec.assignment[e0] = static_cast<int>(forests.size()) - 1;
        }
    }
    dec.forest_count = static_cast<int>(forests.size());
    return dec;
}

namespace {

/// Kuhn augmenting-path matching, left side = edges, right side = k copies
/// of the vertices.
struct EdgeVertexMatcher {
    const Graph& g;
    int k;
    std::vector<int> match_right;  // right node -> edge, -1 free
    std::vector<char> used;

    EdgeVertexMatcher(const Graph& gr, int kk)
        : g(gr), k(kk), match_right(static_cast<size_t>(gr.vertex_count()) * kk, -1) {}

    bool try_edge(EdgeId e) {
        for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
            for (int c = 0; c < k; ++c) {
                int r = v * k + c;
                if (used[r]) continue;
                used[r] = 1;
                if (match_right[r] < 0 || try_edge(match_right[r])) {
                    match_right[r] = e;
                    return true;
                }
            }
        }
        return false;
    }
};

}  // namespace

Orientation hall_orientation(const Graph& g, int k) {
    if (k < 1) throw UsageError("hall_orientation: k must be positive");
    EdgeVertexMatcher m(g, k);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        m.used.assign(m.match_right.size(), 0);
        if (!m.try_edge(e))
            throw MatchingFailedError("hall_orientation: no saturating matching, m(G) > k");
    }
    Orientation o;
    o.source.assign(g.edge_count(), -1);
    for (size_t r = 0; r < m.match_right.size(); ++r) {
        if (m.match_right[r] >= 0) o.source[m.match_right[r]] = static_cast<Vertex>(r / k);
    }
    auto outs = o.out_degrees(g);
    o.max_outdeg = outs.empty() ? 0 : *std::max_element(outs.begin(), outs.end());
    return o;
}

std::vector<int> Orientation::out_degrees(const Graph& g) const {
    std::vector<int> out(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) ++out[source[e]];
    return out;
}

}  // namespace cwg
