#include "cwg/triangles.hpp"

#include <algorithm>

namespace cwg {

std::vector<Triangle> list_triangles(const Graph& g) {
    std::vector<Triangle> out;
    int n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b : g.neighbors(a)) {
            if (b <= a) continue;
            for (Vertex c : g.neighbors(b)) {
                if (c <= b) continue;
                if (!g.has_edge(a, c)) continue;
                Triangle t;
                t.vertices = {a, b, c};
                t.edges = {g.edge_id(a, b), g.edge_id(b, c), g.edge_id(a, c)};
                std::sort(t.edges.begin(), t.edges.end());
                out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Triangle& x, const Triangle& y) { return x.edges < y.edges; });
    return out;
}

std::vector<int> triangle_counts(const Graph& g) {
    std::vector<int> cnt(g.edge_count(), 0);
    for (const Triangle& t : list_triangles(g))
        for (EdgeId e : t.edges) ++cnt[e];
    return cnt;
}

std::vector<EdgeClass> classify_edges_triangles(const Graph& g) {
    auto cnt = triangle_counts(g);
    std::vector<EdgeClass> out(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) out[e] = class_of_count(cnt[e]);
    return out;
}

}  // namespace cwg
