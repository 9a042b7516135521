#pragma once

#include <array>
#include <vector>

#include "cwg/graph.hpp"

namespace cwg {

/// Triangle-participation class of an edge: in 0 / 1 / 2 / >=3 triangles.
enum class EdgeClass : uint8_t { Free, Open, HalfOpen, Closed };

struct Triangle {
    std::array<EdgeId, 3> edges;  // sorted ascending
    std::array<Vertex, 3> vertices;
};

/// All triangles of g, ordered lexicographically by sorted edge ids.
std::vector<Triangle> list_triangles(const Graph& g);

/// Number of triangles through each edge.
std::vector<int> triangle_counts(const Graph& g);

std::vector<EdgeClass> classify_edges_triangles(const Graph& g);

inline EdgeClass class_of_count(int c) {
    if (c == 0) return EdgeClass::Free;
    if (c == 1) return EdgeClass::Open;
    if (c == 2) return EdgeClass::HalfOpen;
    return EdgeClass::Closed;
}

}  // namespace cwg
