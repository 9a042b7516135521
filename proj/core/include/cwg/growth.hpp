#pragma once

#include <vector>

#include "cwg/graph.hpp"
#include "cwg/triangles.hpp"

namespace cwg {

/// One attachment step of the triangle growth process.
struct GrowthStep {
    Triangle triangle;
    bool degenerate = false;  // all three vertices were already reached
    int reg = 0;              // cumulative regular count after this step
    int deg = 0;              // cumulative degenerate count
    int fully_open = 0;       // f: attached triangles owning an untouched vertex
};

struct GrowthTrace {
    Triangle start;                 // the seed triangle
    std::vector<GrowthStep> steps;  // attachments, in order

    size_t length() const { return steps.size(); }
};

/// Rebuilds a biconnected triangle-core component by attaching triangles one
/// at a time, preferring triangles hanging off the earliest unproblematic one.
/// Free choices are resolved by lowest lexicographic edge set. Throws when the
/// input is not covered by triangles or the process cannot reach the whole
/// component.
GrowthTrace grow_core_trace(const Graph& component);

/// f recomputed from scratch for the prefix ending at step `upto` (exclusive
/// of later steps); used to cross-check the maintained counters.
int recompute_fully_open(const Graph& component, const GrowthTrace& trace, size_t upto);

}  // namespace cwg
