#include "cwg/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>

namespace cwg {

Graph::Graph(int n) : n_(n), incident_(n), adj_mask_(n, 0) {
    if (n < 0) throw UsageError("negative vertex count");
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw UsageError("edge endpoint out of range");
    if (u == v) throw UsageError("self-loop rejected");
    if (has_edge(u, v)) throw UsageError("parallel edge rejected");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    if (n_ <= 64) {
        adj_mask_[u] |= 1ULL << v;
        adj_mask_[v] |= 1ULL << u;
    }
    edge_index_[key(u, v)] = id;
    return id;
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
    if (u == v) return -1;
    auto it = edge_index_.find(key(u, v));
    return it == edge_index_.end() ? -1 : it->second;
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(incident_[v].size());
    for (EdgeId e : incident_[v]) out.push_back(other_end(e, v));
    return out;
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
    for (const Edge& e : edges_)
        if (!o.has_edge(e.u, e.v)) return false;
    return true;
}

Subgraph edge_subgraph(const Graph& g, const std::vector<EdgeId>& edges) {
    std::vector<int> vmap(g.vertex_count(), -1);
    Subgraph s;
    for (EdgeId e : edges) {
        for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
            if (vmap[x] < 0) {
                vmap[x] = static_cast<int>(s.to_parent_vertex.size());
                s.to_parent_vertex.push_back(x);
            }
        }
    }
    s.graph = Graph(static_cast<int>(s.to_parent_vertex.size()));
    for (EdgeId e : edges) {
        s.graph.add_edge(vmap[g.edge(e).u], vmap[g.edge(e).v]);
        s.to_parent_edge.push_back(e);
    }
    return s;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<int> vmap(g.vertex_count(), -1);
    Subgraph s;
    s.to_parent_vertex = vertices;
    for (size_t i = 0; i < vertices.size(); ++i) vmap[vertices[i]] = static_cast<int>(i);
    s.graph = Graph(static_cast<int>(vertices.size()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Vertex u = g.edge(e).u, v = g.edge(e).v;
        if (vmap[u] >= 0 && vmap[v] >= 0) {
            s.graph.add_edge(vmap[u], vmap[v]);
            s.to_parent_edge.push_back(e);
        }
    }
    return s;
}

Graph spanning_subgraph(const Graph& g, const std::vector<EdgeId>& edges) {
    Graph out(g.vertex_count());
    for (EdgeId e : edges) out.add_edge(g.edge(e).u, g.edge(e).v);
    return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Graph out(g.vertex_count());
    for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

Graph make_complete(int n) {
    if (n < 1) throw UsageError("make_complete: n must be positive");
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_path(int n) {
    if (n < 1) throw UsageError("make_path: n must be positive");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw UsageError("make_cycle: n must be at least 3");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_gnp(int n, double p, uint64_t seed) {
    if (n < 1) throw UsageError("make_gnp: n must be positive");
    if (p < 0.0 || p > 1.0) throw UsageError("make_gnp: p outside [0,1]");
    Graph g(n);
    Rng rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

MaryTree make_mary_tree(int m, int k, long long max_vertices) {
    if (m < 1 || k < 1) throw UsageError("make_mary_tree: m and k must be positive");
    long long total = 1, level = 1;
    for (int d = 1; d <= k; ++d) {
        if (level > max_vertices / m) throw SizeLimitError("make_mary_tree: vertex count over limit");
        level *= m;
        total += level;
        if (total > max_vertices) throw SizeLimitError("make_mary_tree: vertex count over limit");
    }
    MaryTree t;
    t.arity = m;
    t.height = k;
    t.graph = Graph(static_cast<int>(total));
    t.out_edges.resize(static_cast<size_t>(total));
    // BFS numbering: children of x are m*x+1 .. m*x+m.
    long long internal_count = (total - 1) / m;
    for (long long x = 0; x < internal_count; ++x) {
        t.internal.push_back(static_cast<Vertex>(x));
        for (int c = 1; c <= m; ++c) {
            long long child = m * x + c;
            EdgeId e = t.graph.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(child));
            t.out_edges[static_cast<size_t>(x)].push_back(e);
        }
    }
    return t;
}

Graph read_graph(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw UsageError("bad graph header, expected \"n m\"");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw UsageError("truncated graph edge list");
        g.add_edge(u, v);
    }
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

bool edges_contain_cycle(const Graph& g, const std::vector<EdgeId>& edges) {
    Dsu dsu(g.vertex_count());
    for (EdgeId e : edges)
        if (!dsu.unite(g.edge(e).u, g.edge(e).v)) return true;
    return false;
}

std::vector<std::vector<EdgeId>> biconnected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<EdgeId>> out;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> edge_stack;
    int timer = 0;

    // Iterative DFS; each frame tracks the incident-list cursor.
    struct Frame {
        Vertex v;
        EdgeId via;  // edge used to enter v, -1 at roots
        size_t next = 0;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < g.incident(f.v).size()) {
                EdgeId e = g.incident(f.v)[f.next++];
                if (e == f.via) continue;
                Vertex w = g.other_end(e, f.v);
                if (disc[w] < 0) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Vertex parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[done.v]);
                    if (low[done.v] >= disc[parent]) {
                        // parent is an articulation point (or root): pop a component
                        std::vector<EdgeId> comp;
                        while (!edge_stack.empty()) {
                            EdgeId e = edge_stack.back();
                            edge_stack.pop_back();
                            comp.push_back(e);
                            if (e == done.via) break;
                        }
                        if (!comp.empty()) out.push_back(std::move(comp));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace cwg
