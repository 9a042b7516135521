#pragma once

#include <vector>

#include "cwg/common.hpp"
#include "cwg/graph.hpp"

namespace cwg {

/// Exact rational density measures of a graph.
///
///   d   = e/v                 d2 = (e-1)/(v-2), 0 when v <= 2
///   m   = max d over subgraphs
///   m2  = max d2 over subgraphs
///   m'  = max (e'-1)/v'   over subgraphs with v' >= 1
///   m'' = max (e'+1)/(v'-2) over subgraphs with v' >= 3, 0 when none exists
///   ar  = max e'/(v'-1)   over subgraphs with v' >= 2
struct DensityReport {
    Rat d{0}, d2{0};
    Rat m{0}, m2{0};
    Rat m_prime{0}, m_dprime{0};
    Rat ar{0};
};

struct DensityOptions {
    /// Subset enumeration bound for m2 / m' / m''. Beyond it those measures
    /// raise SizeLimitError.
    int exhaustive_cap = 18;
    /// Separate bound for the exact rational arboricity value.
    int arboricity_cap = 22;
    /// m switches from subset enumeration to the exact flow route above this.
    int flow_threshold = 18;
};

DensityReport density_report(const Graph& g, const DensityOptions& opts = {});

/// Max density m(G), exact at any size (Goldberg-style flow iteration).
Rat max_density(const Graph& g);
/// The same value by subset enumeration; vertex count capped.
Rat max_density_exhaustive(const Graph& g, int cap = 18);
/// Vertex set realizing m(G).
std::vector<Vertex> densest_subgraph(const Graph& g);

/// Exact rational arboricity via subset enumeration; vertex count capped.
Rat arboricity_exact(const Graph& g, int cap = 22);

bool is_balanced(const Graph& g, const DensityOptions& opts = {});
bool is_strictly_balanced(const Graph& g, const DensityOptions& opts = {});
bool is_2balanced(const Graph& g, const DensityOptions& opts = {});
bool is_strictly_2balanced(const Graph& g, const DensityOptions& opts = {});

}  // namespace cwg
