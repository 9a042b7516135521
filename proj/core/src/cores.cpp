#include "cwg/cores.hpp"

#include <algorithm>
#include <map>

#include "cwg/subgraph_iso.hpp"

namespace cwg {

namespace {

/// Graph view of the currently present parent edges + id maps.
struct View {
    Graph graph;
    std::vector<EdgeId> to_parent;
    std::vector<EdgeId> from_parent;  // -1 when absent

    View(const Graph& parent, const std::vector<char>& present) {
        graph = Graph(parent.vertex_count());
        from_parent.assign(parent.edge_count(), -1);
        for (EdgeId e = 0; e < parent.edge_count(); ++e) {
            if (present[e]) {
                from_parent[e] = graph.add_edge(parent.edge(e).u, parent.edge(e).v);
                to_parent.push_back(e);
            }
        }
    }
};

}  // namespace

CoreTrace h_core(const Graph& g, const Graph& h) {
    CoreTrace trace;
    std::vector<char> present(g.edge_count(), 1);
    while (true) {
        View v(g, present);
        auto copies = find_copies(v.graph, h);
        std::vector<int> cover(g.edge_count(), 0);
        for (auto& c : copies)
            for (EdgeId e : c) ++cover[v.to_parent[e]];

        std::vector<EdgeId> orphans;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (present[e] && cover[e] == 0) orphans.push_back(e);
        if (!orphans.empty()) {
            for (EdgeId e : orphans) {
                present[e] = 0;
                trace.irrelevant.push_back(e);
            }
            continue;
        }

        // copies come back sorted by edge set, so the first hit is the
        // lexicographically least removable one
        bool removed = false;
        for (auto& c : copies) {
            std::vector<EdgeId> priv;
            for (EdgeId e : c)
                if (cover[v.to_parent[e]] == 1) priv.push_back(v.to_parent[e]);
            if (priv.size() >= 2) {
                std::sort(priv.begin(), priv.end());
                RemovalStep step;
                step.tag = RemovalTag::SingleCopyTwoPrivateEdges;
                step.offer = {priv[0], priv[1]};
                step.removed = step.offer;
                present[priv[0]] = 0;
                present[priv[1]] = 0;
                trace.steps.push_back(std::move(step));
                removed = true;
                break;
            }
        }
        if (!removed) break;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (present[e]) trace.core_edges.push_back(e);
    return trace;
}

namespace {

struct TriState {
    std::vector<Triangle> tris;       // triangles of g, parent edge ids, lex order
    std::vector<char> alive;
    std::vector<int> cover;           // per parent edge: alive triangles through it
    std::vector<std::vector<int>> tris_of_edge;

    explicit TriState(const Graph& g) : cover(g.edge_count(), 0), tris_of_edge(g.edge_count()) {
        tris = list_triangles(g);
        alive.assign(tris.size(), 1);
        for (size_t i = 0; i < tris.size(); ++i)
            for (EdgeId e : tris[i].edges) {
                ++cover[e];
                tris_of_edge[e].push_back(static_cast<int>(i));
            }
    }

    bool open(EdgeId e) const { return cover[e] == 1; }
    bool half_open(EdgeId e) const { return cover[e] == 2; }

    std::vector<EdgeId> open_edges(int t) const {
        std::vector<EdgeId> out;
        for (EdgeId e : tris[t].edges)
            if (open(e)) out.push_back(e);
        return out;
    }

    int partner(EdgeId e, int t) const {
        for (int o : tris_of_edge[e])
            if (alive[o] && o != t) return o;
        return -1;
    }

    /// Kills triangle t, returning the parent edges whose coverage dropped to 0.
    std::vector<EdgeId> kill(int t) {
        alive[t] = 0;
        std::vector<EdgeId> dropped;
        for (EdgeId e : tris[t].edges)
            if (--cover[e] == 0) dropped.push_back(e);
        return dropped;
    }
};

}  // namespace

CoreTrace k3_core(const Graph& g) {
    CoreTrace trace;
    TriState st(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (st.cover[e] == 0) trace.irrelevant.push_back(e);

    while (true) {
        bool acted = false;
        // triangles with more than one open edge, lex order
        for (size_t t = 0; t < st.tris.size() && !acted; ++t) {
            if (!st.alive[t]) continue;
            auto opens = st.open_edges(static_cast<int>(t));
            if (opens.size() >= 2) {
                RemovalStep step;
                step.tag = RemovalTag::OverOpenTriangle;
                step.offer = {opens[0], opens[1]};
                step.removed = st.kill(static_cast<int>(t));
                trace.steps.push_back(std::move(step));
                acted = true;
            }
        }
        if (acted) continue;
        // pairs sharing a half-open edge, both with an open edge
        for (size_t t = 0; t < st.tris.size() && !acted; ++t) {
            if (!st.alive[t]) continue;
            auto opens_t = st.open_edges(static_cast<int>(t));
            if (opens_t.empty()) continue;
            for (EdgeId e : st.tris[t].edges) {
                if (!st.half_open(e)) continue;
                int o = st.partner(e, static_cast<int>(t));
                if (o < 0) continue;
                auto opens_o = st.open_edges(o);
                if (opens_o.empty()) continue;
                RemovalStep step;
                step.tag = RemovalTag::HalfOpenPair;
                step.offer = {e, opens_t[0], opens_o[0]};
                auto d1 = st.kill(static_cast<int>(t));
                auto d2 = st.kill(o);
                d1.insert(d1.end(), d2.begin(), d2.end());
                std::sort(d1.begin(), d1.end());
                step.removed = std::move(d1);
                trace.steps.push_back(std::move(step));
                acted = true;
                break;
            }
        }
        if (!acted) break;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (st.cover[e] > 0) trace.core_edges.push_back(e);
    return trace;
}

bool check_k3_core_predicates(const Graph& core) {
    auto cnt = triangle_counts(core);
    for (EdgeId e = 0; e < core.edge_count(); ++e)
        if (cnt[e] == 0) return false;  // free edge
    auto tris = list_triangles(core);
    for (const Triangle& t : tris) {
        int opens = 0;
        for (EdgeId e : t.edges)
            if (cnt[e] == 1) ++opens;
        if (opens > 1) return false;
    }
    // every half-open edge lies in a triangle with no open edges
    for (EdgeId e = 0; e < core.edge_count(); ++e) {
        if (cnt[e] != 2) continue;
        bool ok = false;
        for (const Triangle& t : tris) {
            if (std::find(t.edges.begin(), t.edges.end(), e) == t.edges.end()) continue;
            int opens = 0;
            for (EdgeId f : t.edges)
                if (cnt[f] == 1) ++opens;
            if (opens == 0) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

bool check_h_core_predicates(const Graph& core, const Graph& h) {
    auto copies = find_copies(core, h);
    std::vector<int> cover(core.edge_count(), 0);
    for (auto& c : copies)
        for (EdgeId e : c) ++cover[e];
    for (EdgeId e = 0; e < core.edge_count(); ++e)
        if (cover[e] == 0) return false;
    for (auto& c : copies) {
        int priv = 0;
        for (EdgeId e : c)
            if (cover[e] == 1) ++priv;
        if (priv > 1) return false;
    }
    return true;
}

}  // namespace cwg
