#include "cwg/subgraph_iso.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cwg {

namespace {

struct Matcher {
    const Graph& g;
    const Graph& h;
    long long limit;
    std::vector<Vertex> order;        // pattern vertices, connected-first order
    std::vector<Vertex> assign;       // pattern vertex -> host vertex, -1 unset
    std::vector<char> used;           // host vertex used
    std::set<std::vector<EdgeId>> found;
    bool done = false;

    Matcher(const Graph& gg, const Graph& hh, long long lim) : g(gg), h(hh), limit(lim) {
        assign.assign(h.vertex_count(), -1);
        used.assign(g.vertex_count(), 0);
        // order pattern vertices so each one (after the first) touches an
        // earlier one when possible; isolated vertices are dropped
        std::vector<char> placed(h.vertex_count(), 0);
        std::vector<Vertex> pool;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) > 0) pool.push_back(v);
        while (order.size() < pool.size()) {
            Vertex pick = -1;
            int best = -1;
            for (Vertex v : pool) {
                if (placed[v]) continue;
                int back = 0;
                for (Vertex w : h.neighbors(v))
                    if (placed[w]) ++back;
                if (back > best || (back == best && pick >= 0 && h.degree(v) > h.degree(pick))) {
                    best = back;
                    pick = v;
                }
            }
            placed[pick] = 1;
            order.push_back(pick);
        }
    }

    void record() {
        std::vector<EdgeId> copy;
        for (const Edge& pe : h.edges()) {
            if (assign[pe.u] < 0 || assign[pe.v] < 0) continue;
            copy.push_back(g.edge_id(assign[pe.u], assign[pe.v]));
        }
        std::sort(copy.begin(), copy.end());
        found.insert(std::move(copy));
        if (limit > 0 && static_cast<long long>(found.size()) >= limit) done = true;
    }

    void search(size_t depth) {
        if (done) return;
        if (depth == order.size()) {
            record();
            return;
        }
        Vertex pv = order[depth];
        for (Vertex hv = 0; hv < g.vertex_count(); ++hv) {
            if (used[hv] || g.degree(hv) < h.degree(pv)) continue;
            bool ok = true;
            for (Vertex pw : h.neighbors(pv)) {
                if (assign[pw] >= 0 && !g.has_edge(hv, assign[pw])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assign[pv] = hv;
            used[hv] = 1;
            search(depth + 1);
            used[hv] = 0;
            assign[pv] = -1;
            if (done) return;
        }
    }
};

}  // namespace

std::vector<std::vector<EdgeId>> find_copies(const Graph& g, const Graph& h, long long limit,
                                             int pattern_cap) {
    int live = 0;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) > 0) ++live;
    if (live > pattern_cap) throw SizeLimitError("find_copies: pattern too large");
    if (h.edge_count() == 0) return {};
    Matcher m(g, h, limit);
    m.search(0);
    return {m.found.begin(), m.found.end()};
}

bool contains_copy(const Graph& g, const Graph& h) { return !find_copies(g, h, 1).empty(); }

Graph pattern_by_name(const std::string& name) {
    if (name == "K3") return make_complete(3);
    if (name == "K4") return make_complete(4);
    if (name == "K5") return make_complete(5);
    if (name == "K6") return make_complete(6);
    if (name == "C4") return make_cycle(4);
    if (name == "C5") return make_cycle(5);
    if (name == "C6") return make_cycle(6);
    if (name == "P3") return make_path(3);
    if (name == "P4") return make_path(4);
    if (name == "S3") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        return g;
    }
    if (name == "K5-e") {
        Graph g = make_complete(5);
        Graph out(5);
        for (const Edge& e : g.edges())
            if (!(e.u == 0 && e.v == 1)) out.add_edge(e.u, e.v);
        return out;
    }
    throw UsageError("unknown pattern name: " + name);
}

}  // namespace cwg
