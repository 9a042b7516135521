#include "cwg/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace cwg {

namespace {
constexpr long long kInfFlow = std::numeric_limits<long long>::max() / 4;
}

bool MaxFlow::bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
            if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                level_[arcs_[a].to] = level_[v] + 1;
                q.push(arcs_[a].to);
            }
        }
    }
    return level_[t] >= 0;
}

long long MaxFlow::dfs(int v, int t, long long pushed) {
    if (v == t || pushed == 0) return pushed;
    long long total = 0;
    for (int& a = it_[v]; a >= 0; a = arcs_[a].next) {
        int to = arcs_[a].to;
        if (arcs_[a].cap <= 0 || level_[to] != level_[v] + 1) continue;
        long long got = dfs(to, t, std::min(pushed, arcs_[a].cap));
        if (got > 0) {
            arcs_[a].cap -= got;
            arcs_[a ^ 1].cap += got;
            total += got;
            pushed -= got;
            if (pushed == 0) break;
        }
    }
    if (total == 0) level_[v] = -1;
    return total;
}

long long MaxFlow::run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
        it_ = head_;
        flow += dfs(s, t, kInfFlow);
    }
    return flow;
}

std::vector<char> MaxFlow::min_cut_side(int s) const {
    std::vector<char> side(head_.size(), 0);
    std::queue<int> q;
    side[s] = 1;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
            if (arcs_[a].cap > 0 && !side[arcs_[a].to]) {
                side[arcs_[a].to] = 1;
                q.push(arcs_[a].to);
            }
        }
    }
    return side;
}

}  // namespace cwg
