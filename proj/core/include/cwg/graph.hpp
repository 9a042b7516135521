#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "cwg/common.hpp"

namespace cwg {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u, v;
};

/// Undirected simple graph with dense, stable edge ids (0..e-1 in insertion
/// order). Self-loops and parallel edges are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    EdgeId add_edge(Vertex u, Vertex v);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }

    bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }
    /// -1 when absent.
    EdgeId edge_id(Vertex u, Vertex v) const;

    int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
    int max_degree() const;
    int min_degree() const;

    Vertex other_end(EdgeId e, Vertex v) const {
        return edges_[e].u == v ? edges_[e].v : edges_[e].u;
    }

    std::vector<Vertex> neighbors(Vertex v) const;

    /// Adjacency bitmask (valid while vertex_count() <= 64).
    uint64_t adjacency_mask(Vertex v) const { return adj_mask_[v]; }

    bool operator==(const Graph& o) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<uint64_t> adj_mask_;
    std::unordered_map<uint64_t, EdgeId> edge_index_;

    static uint64_t key(Vertex u, Vertex v) {
        if (u > v) std::swap(u, v);
        return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
    }
};

/// A subgraph together with the maps back to its parent graph.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent_vertex;  // subgraph vertex -> parent vertex
    std::vector<EdgeId> to_parent_edge;    // subgraph edge -> parent edge
};

/// Subgraph spanned by a set of parent edge ids (vertices renumbered densely).
Subgraph edge_subgraph(const Graph& g, const std::vector<EdgeId>& edges);
/// Induced subgraph on a vertex set.
Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);
/// Same vertex set, only the given edges (edge ids renumbered).
Graph spanning_subgraph(const Graph& g, const std::vector<EdgeId>& edges);
/// Relabels vertices by perm (perm[v] = new name). Edge insertion order kept.
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

Graph make_complete(int n);
Graph make_path(int n);
Graph make_cycle(int n);

/// G(n,p): every pair kept independently with probability p. Deterministic
/// for a fixed seed.
Graph make_gnp(int n, double p, uint64_t seed);

/// Complete m-ary tree of height k, rooted at vertex 0, BFS vertex order.
struct MaryTree {
    Graph graph;
    int arity = 0;
    int height = 0;
    Vertex root = 0;
    std::vector<Vertex> internal;               // vertices with children
    std::vector<std::vector<EdgeId>> out_edges; // per vertex: edges to children
};

MaryTree make_mary_tree(int m, int k, long long max_vertices = (1LL << 22));

/// Plain text format: first line "n m", then m lines "u v" (0-based).
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Does the edge set (given by ids) contain a cycle?
bool edges_contain_cycle(const Graph& g, const std::vector<EdgeId>& edges);

/// Biconnected components as pairwise edge-disjoint edge-id sets covering E.
std::vector<std::vector<EdgeId>> biconnected_components(const Graph& g);

}  // namespace cwg
