#pragma once

#include <string>

#include "cwg/graph.hpp"
#include "cwg/ownership.hpp"

namespace cwg {

/// Canonical key of a graph under vertex relabeling: the lexicographically
/// greatest adjacency row string over all orderings, found level by level
/// keeping every tied prefix. Intended for small graphs (v <= 10 or so).
std::string canonical_graph_key(const Graph& g, size_t candidate_cap = 200000);

/// Canonical key of an edge-ownership state under vertex relabeling. Edge
/// symbols: 0 absent, 1 free, 2 client, 3 waiter.
std::string canonical_ownership_key(const Graph& g, const OwnershipVec& owner,
                                    size_t candidate_cap = 200000);

}  // namespace cwg
