#pragma once

#include <vector>

#include "cwg/graph.hpp"

namespace cwg {

/// Partition of E(G) into edge-disjoint forests, forest_count = ceil(ar(G)).
struct ForestDecomposition {
    std::vector<int> assignment;  // edge id -> forest index
    int forest_count = 0;

    std::vector<std::vector<EdgeId>> classes(const Graph& g) const;
};

/// Minimum forest partition by matroid-union augmentation. A new forest is
/// opened only when no augmenting exchange exists, so the count matches the
/// Nash-Williams bound exactly.
ForestDecomposition nash_williams(const Graph& g);

/// Edge directions: source[e] is the tail of edge e.
struct Orientation {
    std::vector<Vertex> source;
    int max_outdeg = 0;

    std::vector<int> out_degrees(const Graph& g) const;
};

/// Orients every edge with out-degree <= k, via a bipartite matching between
/// E(G) and k copies of V(G). Throws MatchingFailedError when no saturating
/// matching exists (that is, m(G) > k).
Orientation hall_orientation(const Graph& g, int k);

}  // namespace cwg
