#pragma once

#include <vector>

namespace cwg {

/// Dinic max-flow on a small directed network with integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

    void add_edge(int from, int to, long long cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    long long run(int s, int t);

    /// Vertices reachable from s in the residual graph (called after run).
    std::vector<char> min_cut_side(int s) const;

private:
    struct Arc {
        int to;
        int next;
        long long cap;
    };

    bool bfs(int s, int t);
    long long dfs(int v, int t, long long pushed);

    std::vector<Arc> arcs_;
    std::vector<int> head_, level_, it_;
};

}  // namespace cwg
