#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cwg/graph.hpp"

namespace cwg {

struct PathResult {
    int length = 0;               // edges
    std::vector<Vertex> path;
    bool exact = true;
};

/// Longest simple path. Exact (bitmask DP per component) while every
/// component has at most `exact_cap` vertices, otherwise a DFS lower bound
/// with exact=false.
PathResult longest_path(const Graph& g, int exact_cap = 14);

/// Is there a simple path with at least `len` edges? Exact backtracking.
bool has_path_of_length(const Graph& g, int len);

struct SparsityParams {
    double eps = 0.1;
    double delta1 = 0.0;  // defaults derived from eps when left at 0
    double delta2 = 0.0;
    double gamma = 0.0;
};

struct ConditionFailure {
    int property = 0;  // 1..4
    std::vector<Vertex> witness;
};

struct CertifiedPath {
    std::vector<Vertex> path;
    bool certified = true;  // false when the premises were only sampled
};

struct CertifyOptions {
    bool allow_sampled = false;
    int exact_vertex_cap = 22;   // full subset scan bound
    int samples = 20000;
    uint64_t seed = 1;
};

/// Checks the four expansion-style premises (edge count, two local sparsity
/// bounds, small cut bound) and, when they hold, extracts a long path from a
/// DFS run: the stack spans a path, and at the block where many edges go
/// forward the stack must be long.
std::variant<CertifiedPath, ConditionFailure> certified_long_path(const Graph& g,
                                                                  SparsityParams params,
                                                                  CertifyOptions opts = {});

struct ExpansionResult {
    bool pass = false;
    bool exact = true;
    std::vector<Vertex> witness_a, witness_b;  // populated on failure
};

/// Do every two disjoint k-sets span at least one edge between them? Exact
/// when C(n,k)^2 fits the pair budget, else (when allowed) sampled and
/// flagged non-exact.
ExpansionResult ksets_expansion_check(const Graph& g, int k, long long pair_budget = 10'000'000,
                                      bool allow_sampled = false, int samples = 200000,
                                      uint64_t seed = 1);

}  // namespace cwg
