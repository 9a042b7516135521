#include "cwg/canon.hpp"

#include <algorithm>
#include <functional>

namespace cwg {

namespace {

/// Level-wise lexicographic maximization: at each position try every unused
/// vertex, keep exactly the prefixes achieving the best next row. The
/// concatenated best rows form the canonical string.
std::string canonicalize(int n, const std::function<uint8_t(Vertex, Vertex)>& symbol,
                         size_t cap) {
    std::vector<std::vector<Vertex>> prefixes{{}};
    std::string key;
    for (int pos = 0; pos < n; ++pos) {
        std::string best_row;
        std::vector<std::vector<Vertex>> next;
        for (const auto& pre : prefixes) {
            std::vector<char> used(n, 0);
            for (Vertex v : pre) used[v] = 1;
            for (Vertex v = 0; v < n; ++v) {
                if (used[v]) continue;
                std::string row(pos, 0);
                for (int i = 0; i < pos; ++i) row[i] = static_cast<char>(symbol(v, pre[i]));
                if (next.empty() || row > best_row) {
                    best_row = row;
                    next.clear();
                    next.push_back(pre);
                    next.back().push_back(v);
                } else if (row == best_row) {
                    next.push_back(pre);
                    next.back().push_back(v);
                }
            }
        }
        if (next.size() > cap) throw SizeLimitError("canonicalize: too many tied orderings");
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        prefixes = std::move(next);
        key += best_row;
        key += '|';
    }
    return key;
}

}  // namespace

std::string canonical_graph_key(const Graph& g, size_t cap) {
    return canonicalize(
        g.vertex_count(),
        [&](Vertex a, Vertex b) { return static_cast<uint8_t>(g.has_edge(a, b) ? 1 : 0); }, cap);
}

std::string canonical_ownership_key(const Graph& g, const OwnershipVec& owner, size_t cap) {
    return canonicalize(
        g.vertex_count(),
        [&](Vertex a, Vertex b) {
            EdgeId e = g.edge_id(a, b);
            if (e < 0) return static_cast<uint8_t>(0);
            switch (owner[e]) {
                case Owner::Free: return static_cast<uint8_t>(1);
                case Owner::Client: return static_cast<uint8_t>(2);
                default: return static_cast<uint8_t>(3);
            }
        },
        cap);
}

}  // namespace cwg
