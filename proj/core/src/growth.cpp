#include "cwg/growth.hpp"

#include <algorithm>

namespace cwg {

namespace {

struct Hat {
    const Graph& g;
    const std::vector<Triangle>& tris;
    std::vector<char> in_hat;     // edge present in the grown graph
    std::vector<char> touched;    // vertex reached
    std::vector<char> alive;      // triangle fully present
    std::vector<int> cover;       // per edge: alive triangles through it

    Hat(const Graph& gr, const std::vector<Triangle>& ts)
        : g(gr), tris(ts), in_hat(gr.edge_count(), 0), touched(gr.vertex_count(), 0),
          alive(ts.size(), 0), cover(gr.edge_count(), 0) {}

    void add(int t) {
        for (EdgeId e : tris[t].edges) in_hat[e] = 1;
        for (Vertex v : tris[t].vertices) touched[v] = 1;
        refresh();
    }

    void refresh() {
        std::fill(alive.begin(), alive.end(), 0);
        std::fill(cover.begin(), cover.end(), 0);
        for (size_t t = 0; t < tris.size(); ++t) {
            bool full = true;
            for (EdgeId e : tris[t].edges)
                if (!in_hat[e]) full = false;
            if (!full) continue;
            alive[t] = 1;
            for (EdgeId e : tris[t].edges) ++cover[e];
        }
    }

    bool open(EdgeId e) const { return cover[e] == 1; }
    bool half_open(EdgeId e) const { return cover[e] == 2; }

    int open_count(int t) const {
        int c = 0;
        for (EdgeId e : tris[t].edges)
            if (open(e)) ++c;
        return c;
    }

    int partner(EdgeId e, int t) const {
        for (size_t o = 0; o < tris.size(); ++o)
            if (alive[o] && static_cast<int>(o) != t &&
                std::find(tris[o].edges.begin(), tris[o].edges.end(), e) != tris[o].edges.end())
                return static_cast<int>(o);
        return -1;
    }

    bool unproblematic(int t) const {
        if (!alive[t]) return false;
        int opens = open_count(t);
        if (opens >= 2) return true;
        if (opens != 1) return false;
        for (EdgeId e : tris[t].edges) {
            if (!half_open(e)) continue;
            int o = partner(e, t);
            if (o >= 0 && open_count(o) >= 1) return true;
        }
        return false;
    }

    /// Lex-least triangle not fully present that contains edge e.
    int outside_with_edge(EdgeId e) const {
        for (size_t t = 0; t < tris.size(); ++t) {
            if (alive[t]) continue;
            bool full = true, has = false;
            for (EdgeId f : tris[t].edges) {
                if (!in_hat[f]) full = false;
                if (f == e) has = true;
            }
            if (!full && has) return static_cast<int>(t);
        }
        return -1;
    }

    int fully_open_count(const std::vector<int>& seq) const {
        int f = 0;
        for (size_t i = 1; i < seq.size(); ++i) {
            const Triangle& ti = tris[seq[i]];
            for (Vertex v : ti.vertices) {
                bool private_vertex = true;
                for (size_t o = 0; o < tris.size() && private_vertex; ++o) {
                    if (!alive[o] || tris[o].edges == ti.edges) continue;
                    for (Vertex w : tris[o].vertices)
                        if (w == v) private_vertex = false;
                }
                if (private_vertex) {
                    ++f;
                    break;
                }
            }
        }
        return f;
    }
};

}  // namespace

GrowthTrace grow_core_trace(const Graph& g) {
    auto tris = list_triangles(g);
    if (tris.empty()) throw PreconditionError("grow_core_trace: input has no triangles");
    {
        auto cnt = triangle_counts(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (cnt[e] == 0) throw PreconditionError("grow_core_trace: input not covered by triangles");
    }

    Hat hat(g, tris);
    std::vector<int> seq{0};  // lex-least triangle seeds the process
    hat.add(0);

    GrowthTrace trace;
    trace.start = tris[0];

    int covered = 3;
    int reg = 0, deg = 0;
    while (covered < g.edge_count()) {
        int pick = -1;
        // earliest unproblematic triangle of the sequence, then its branches
        int l = -1;
        for (size_t i = 0; i < seq.size(); ++i) {
            if (hat.unproblematic(seq[i])) {
                l = static_cast<int>(i);
                break;
            }
        }
        if (l >= 0) {
            int tl = seq[l];
            for (EdgeId e : tris[tl].edges) {
                if (!hat.open(e)) continue;
                int t = hat.outside_with_edge(e);
                if (t >= 0 && (pick < 0 || t < pick)) pick = t;
            }
            if (pick < 0) {
                for (EdgeId e : tris[tl].edges) {
                    if (!hat.half_open(e)) continue;
                    int t = hat.outside_with_edge(e);
                    if (t >= 0 && (pick < 0 || t < pick)) pick = t;
                }
            }
            if (pick < 0) {
                for (EdgeId e : tris[tl].edges) {
                    if (!hat.half_open(e)) continue;
                    int other = hat.partner(e, tl);
                    if (other < 0) continue;
                    for (EdgeId f : tris[other].edges) {
                        if (!hat.open(f)) continue;
                        int t = hat.outside_with_edge(f);
                        if (t >= 0 && (pick < 0 || t < pick)) pick = t;
                    }
                }
            }
        }
        if (pick < 0) {
            // no unproblematic triangle helps: attach anything sharing an edge
            for (size_t t = 0; t < tris.size(); ++t) {
                if (hat.alive[t]) continue;
                bool full = true, shares = false;
                for (EdgeId e : tris[t].edges) {
                    if (!hat.in_hat[e]) full = false;
                    else shares = true;
                }
                if (!full && shares) {
                    pick = static_cast<int>(t);
                    break;
                }
            }
        }
        if (pick < 0)
            throw Error("grow_core_trace: stuck before covering the component");

        int new_vertices = 0;
        for (Vertex v : tris[pick].vertices)
            if (!hat.touched[v]) ++new_vertices;
        bool degenerate = new_vertices == 0;

        for (EdgeId e : tris[pick].edges)
            if (!hat.in_hat[e]) ++covered;
        seq.push_back(pick);
        hat.add(pick);
        if (degenerate) ++deg; else ++reg;

        GrowthStep step;
        step.triangle = tris[pick];
        step.degenerate = degenerate;
        step.reg = reg;
        step.deg = deg;
        step.fully_open = hat.fully_open_count(seq);
        trace.steps.push_back(step);
    }
    return trace;
}

int recompute_fully_open(const Graph& g, const GrowthTrace& trace, size_t upto) {
    auto tris = list_triangles(g);
    auto index_of = [&](const Triangle& t) {
        for (size_t i = 0; i < tris.size(); ++i)
            if (tris[i].edges == t.edges) return static_cast<int>(i);
        throw InternalError("recompute_fully_open: unknown triangle");
    };
    Hat hat(g, tris);
    std::vector<int> seq{index_of(trace.start)};
    hat.add(seq[0]);
    for (size_t i = 0; i < upto && i < trace.steps.size(); ++i) {
        seq.push_back(index_of(trace.steps[i].triangle));
        hat.add(seq.back());
    }
    return hat.fully_open_count(seq);
}

}  // namespace cwg
