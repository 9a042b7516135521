#pragma once

#include <vector>

#include "cwg/graph.hpp"

namespace cwg {

/// All subgraph-isomorphic copies of pattern h in g, each reported once as a
/// sorted set of host edge ids. Isolated pattern vertices are ignored. Stops
/// after `limit` copies when limit > 0. Pattern vertex count capped.
std::vector<std::vector<EdgeId>> find_copies(const Graph& g, const Graph& h, long long limit = 0,
                                             int pattern_cap = 8);

bool contains_copy(const Graph& g, const Graph& h);

/// Named small patterns for CLI / tests: K3, K4, K5, C4, C5, C6, P3, P4, K5-e, S3.
Graph pattern_by_name(const std::string& name);

}  // namespace cwg
