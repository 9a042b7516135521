#pragma once

#include <vector>

#include "cwg/graph.hpp"
#include "cwg/triangles.hpp"

namespace cwg {

enum class RemovalTag : uint8_t {
    SingleCopyTwoPrivateEdges,  // a pattern copy with two edges private to it
    OverOpenTriangle,           // triangle with more than one open edge
    HalfOpenPair,               // two triangles sharing a half-open edge, both with an open edge
};

struct RemovalStep {
    RemovalTag tag;
    std::vector<EdgeId> offer;    // the edges a Waiter wrapper offers together
    std::vector<EdgeId> removed;  // all edges that left the working graph at this step
};

/// Result of a core extraction. Edge ids refer to the input graph. Replaying
/// `steps` backwards from the core, together with `irrelevant`, reconstructs
/// the relevant part of the input.
struct CoreTrace {
    std::vector<EdgeId> core_edges;
    std::vector<RemovalStep> steps;
    std::vector<EdgeId> irrelevant;  // edges that fell out of every structure

    Graph core_graph(const Graph& parent) const { return spanning_subgraph(parent, core_edges); }
    bool empty() const { return core_edges.empty(); }
};

/// Pattern core: repeatedly drop edges lying in no copy of h, and kill copies
/// owning two or more private edges (recording the pair to offer). Removals
/// are applied one at a time in ascending lexicographic edge-set order.
CoreTrace h_core(const Graph& g, const Graph& h);

/// Triangle core: the fixed point of removing triangles with more than one
/// open edge, and pairs of triangles sharing a half-open edge when both still
/// have an open edge. Offer groups have size 2 resp. 3.
CoreTrace k3_core(const Graph& g);

/// Checks the defining predicates of a triangle core from scratch.
bool check_k3_core_predicates(const Graph& core);
/// Checks the defining predicates of a pattern core from scratch.
bool check_h_core_predicates(const Graph& core, const Graph& h);

}  // namespace cwg
