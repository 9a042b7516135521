#include "cwg/family.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace cwg {

namespace {

double ipow(double x, long long k) {
    double r = 1;
    while (k-- > 0) r *= x;
    return r;
}

double binomial_d(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (long long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

class ExplicitFamily : public FamilyBase {
public:
    explicit ExplicitFamily(std::vector<std::vector<EdgeId>> members)
        : members_(std::move(members)) {
        for (auto& a : members_) {
            if (a.empty()) throw UsageError("family member must be nonempty");
            std::sort(a.begin(), a.end());
        }
    }

    long long member_count() const override { return static_cast<long long>(members_.size()); }

    int min_member_size() const override {
        size_t s = SIZE_MAX;
        for (auto& a : members_) s = std::min(s, a.size());
        return members_.empty() ? 0 : static_cast<int>(s);
    }

    double weight_sum(double x) const override {
        long double acc = 0;
        for (auto& a : members_) acc += ipow(x, static_cast<long long>(a.size()));
        return static_cast<double>(acc);
    }

    double potential_alive(const OwnershipVec& o, double x) const override {
        long double acc = 0;
        for (auto& a : members_) {
            int free = 0;
            bool alive = true;
            for (EdgeId e : a) {
                if (o[e] == Owner::Waiter) {
                    alive = false;
                    break;
                }
                if (o[e] == Owner::Free) ++free;
            }
            if (alive) acc += ipow(x, free);
        }
        return static_cast<double>(acc);
    }

    double potential_unhit(const OwnershipVec& o, double x) const override {
        long double acc = 0;
        for (auto& a : members_) {
            int free = 0;
            bool unhit = true;
            for (EdgeId e : a) {
                if (o[e] == Owner::Client) {
                    unhit = false;
                    break;
                }
                if (o[e] == Owner::Free) ++free;
            }
            if (unhit) acc += ipow(x, free);
        }
        return static_cast<double>(acc);
    }

    bool all_hit(const OwnershipVec& o) const override {
        for (auto& a : members_) {
            bool hit = false;
            for (EdgeId e : a)
                if (o[e] == Owner::Client) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    }

    bool any_contained(const OwnershipVec& o) const override {
        for (auto& a : members_) {
            bool all = true;
            for (EdgeId e : a)
                if (o[e] != Owner::Client) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    }

    const std::vector<std::vector<EdgeId>>* members() const override { return &members_; }

private:
    std::vector<std::vector<EdgeId>> members_;
};

/// All (m-k+1)-subsets of the child-edge set of each internal vertex,
/// represented by per-vertex counting.
class TreeOutEdgesFamily : public FamilyBase {
public:
    TreeOutEdgesFamily(std::vector<std::vector<EdgeId>> groups, int member_size)
        : groups_(std::move(groups)), s_(member_size) {
        if (s_ < 1) throw UsageError("tree_outedges: member size must be positive");
        for (auto& g : groups_)
            if (static_cast<int>(g.size()) < s_)
                throw UsageError("tree_outedges: group smaller than member size");
    }

    long long member_count() const override {
        long long c = 0;
        for (auto& g : groups_) c += binomial(static_cast<long long>(g.size()), s_);
        return c;
    }

    int min_member_size() const override { return s_; }

    double weight_sum(double x) const override {
        long double acc = 0;
        for (auto& g : groups_)
            acc += static_cast<long double>(binomial(static_cast<long long>(g.size()), s_)) *
                   ipow(x, s_);
        return static_cast<double>(acc);
    }

    double potential_alive(const OwnershipVec& o, double x) const override {
        return potential(o, x, Owner::Waiter);
    }

    double potential_unhit(const OwnershipVec& o, double x) const override {
        return potential(o, x, Owner::Client);
    }

    bool all_hit(const OwnershipVec& o) const override {
        for (auto& g : groups_) {
            int non_client = 0;
            for (EdgeId e : g)
                if (o[e] != Owner::Client) ++non_client;
            if (non_client >= s_) return false;
        }
        return true;
    }

    bool any_contained(const OwnershipVec& o) const override {
        for (auto& g : groups_) {
            int client = 0;
            for (EdgeId e : g)
                if (o[e] == Owner::Client) ++client;
            if (client >= s_) return true;
        }
        return false;
    }

private:
    /// Members avoiding `avoid`, weighted x^{free count}: choose j free and
    /// s-j of the other side.
    double potential(const OwnershipVec& o, double x, Owner avoid) const {
        long double acc = 0;
        for (auto& g : groups_) {
            int free = 0, other = 0;
            for (EdgeId e : g) {
                if (o[e] == avoid) continue;
                if (o[e] == Owner::Free) ++free;
                else ++other;
            }
            for (int j = std::max(0, s_ - other); j <= std::min(free, s_); ++j)
                acc += static_cast<long double>(binomial(free, j)) * binomial(other, s_ - j) *
                       ipow(x, j);
        }
        return static_cast<double>(acc);
    }

    std::vector<std::vector<EdgeId>> groups_;
    int s_;
};

/// One member per unordered disjoint pair of s-sets: the full cut between
/// them. K_n-style closed form for the weight sums.
class DisjointCutFamily : public FamilyBase {
public:
    DisjointCutFamily(const Graph& board, int s) : s_(s) {
        int n = board.vertex_count();
        if (s < 1 || 2 * s > n) throw UsageError("disjoint_cut: need 1 <= s and 2s <= n");
        std::vector<int> a(s);
        for (int i = 0; i < s; ++i) a[i] = i;
        do {
            std::vector<char> in_a(n, 0);
            for (int v : a) in_a[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!in_a[v]) rest.push_back(v);
            std::vector<int> pick(s);
            for (int i = 0; i < s; ++i) pick[i] = i;
            do {
                if (rest[pick[0]] < a[0]) continue;  // unordered pairs once
                std::vector<EdgeId> cut;
                for (int u : a)
                    for (int i : pick) {
                        EdgeId e = board.edge_id(u, rest[i]);
                        if (e >= 0) cut.push_back(e);
                    }
                if (cut.empty()) throw UsageError("disjoint_cut: empty cut member on this board");
                std::sort(cut.begin(), cut.end());
                cuts_.push_back(std::move(cut));
            } while (next_comb(pick, static_cast<int>(rest.size())));
        } while (next_comb(a, n));
    }

    long long member_count() const override { return static_cast<long long>(cuts_.size()); }

    int min_member_size() const override {
        size_t m = SIZE_MAX;
        for (auto& c : cuts_) m = std::min(m, c.size());
        return cuts_.empty() ? 0 : static_cast<int>(m);
    }

    double weight_sum(double x) const override {
        long double acc = 0;
        for (auto& c : cuts_) acc += ipow(x, static_cast<long long>(c.size()));
        return static_cast<double>(acc);
    }

    double potential_alive(const OwnershipVec& o, double x) const override {
        long double acc = 0;
        for (auto& c : cuts_) {
            int free = 0;
            bool alive = true;
            for (EdgeId e : c) {
                if (o[e] == Owner::Waiter) { alive = false; break; }
                if (o[e] == Owner::Free) ++free;
            }
            if (alive) acc += ipow(x, free);
        }
        return static_cast<double>(acc);
    }

    double potential_unhit(const OwnershipVec& o, double x) const override {
        long double acc = 0;
        for (auto& c : cuts_) {
            int free = 0;
            bool unhit = true;
            for (EdgeId e : c) {
                if (o[e] == Owner::Client) { unhit = false; break; }
                if (o[e] == Owner::Free) ++free;
            }
            if (unhit) acc += ipow(x, free);
        }
        return static_cast<double>(acc);
    }

    bool all_hit(const OwnershipVec& o) const override {
        for (auto& c : cuts_) {
            bool hit = false;
            for (EdgeId e : c)
                if (o[e] == Owner::Client) { hit = true; break; }
            if (!hit) return false;
        }
        return true;
    }

    bool any_contained(const OwnershipVec& o) const override {
        for (auto& c : cuts_) {
            bool all = true;
            for (EdgeId e : c)
                if (o[e] != Owner::Client) { all = false; break; }
            if (all) return true;
        }
        return false;
    }

    const std::vector<std::vector<EdgeId>>* members() const override { return &cuts_; }

private:
    static bool next_comb(std::vector<int>& c, int n) {
        int k = static_cast<int>(c.size());
        for (int i = k - 1; i >= 0; --i) {
            if (c[i] < n - k + i) {
                ++c[i];
                for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                return true;
            }
        }
        return false;
    }

    int s_;
    std::vector<std::vector<EdgeId>> cuts_;
};

/// Per disjoint pair (U1,U2) of s-sets: all cut subsets missing at most t
/// edges. Members are counted, never materialized.
class RegularCutFamily : public FamilyBase {
public:
    RegularCutFamily(const Graph& board, int s, long long t) : t_(t) {
        int n = board.vertex_count();
        if (s < 1 || 2 * s > n) throw UsageError("regular_cut: need 1 <= s and 2s <= n");
        std::vector<int> a(s);
        for (int i = 0; i < s; ++i) a[i] = i;
        do {
            std::vector<char> in_a(n, 0);
            for (int v : a) in_a[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!in_a[v]) rest.push_back(v);
            std::vector<int> pick(s);
            for (int i = 0; i < s; ++i) pick[i] = i;
            do {
                if (rest[pick[0]] < a[0]) continue;
                std::vector<EdgeId> cut;
                for (int u : a)
                    for (int i : pick) {
                        EdgeId e = board.edge_id(u, rest[i]);
                        if (e >= 0) cut.push_back(e);
                    }
                if (static_cast<long long>(cut.size()) > t_) pair_cuts_.push_back(std::move(cut));
            } while (DisjointCutNext(pick, static_cast<int>(rest.size())));
        } while (DisjointCutNext(a, n));
    }

    long long member_count() const override {
        long long c = 0;
        for (auto& cut : pair_cuts_)
            for (long long j = 0; j <= t_; ++j)
                c += binomial(static_cast<long long>(cut.size()), j);
        return c;
    }

    int min_member_size() const override {
        long long m = LLONG_MAX_LOCAL;
        for (auto& cut : pair_cuts_) m = std::min(m, static_cast<long long>(cut.size()) - t_);
        return pair_cuts_.empty() ? 0 : static_cast<int>(std::max(1LL, m));
    }

    double weight_sum(double x) const override {
        long double acc = 0;
        for (auto& cut : pair_cuts_) {
            long long e = static_cast<long long>(cut.size());
            for (long long j = 0; j <= t_; ++j)
                acc += static_cast<long double>(binomial(e, j)) * ipow(x, e - j);
        }
        return static_cast<double>(acc);
    }

    double potential_alive(const OwnershipVec& o, double x) const override {
        return potential(o, x, Owner::Waiter);
    }
    double potential_unhit(const OwnershipVec& o, double x) const override {
        return potential(o, x, Owner::Client);
    }

    bool all_hit(const OwnershipVec& o) const override {
        // a member avoids Client iff at most t cut edges are Client's
        for (auto& cut : pair_cuts_) {
            long long client = 0;
            for (EdgeId e : cut)
                if (o[e] == Owner::Client) ++client;
            if (client <= t_) return false;
        }
        return true;
    }

    bool any_contained(const OwnershipVec& o) const override {
        for (auto& cut : pair_cuts_) {
            long long non_client = 0;
            for (EdgeId e : cut)
                if (o[e] != Owner::Client) ++non_client;
            if (non_client <= t_) return true;
        }
        return false;
    }

private:
    static constexpr long long LLONG_MAX_LOCAL = (1LL << 62);

    static bool DisjointCutNext(std::vector<int>& c, int n) {
        int k = static_cast<int>(c.size());
        for (int i = k - 1; i >= 0; --i) {
            if (c[i] < n - k + i) {
                ++c[i];
                for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                return true;
            }
        }
        return false;
    }

    double potential(const OwnershipVec& o, double x, Owner avoid) const {
        long double acc = 0;
        for (auto& cut : pair_cuts_) {
            long long free = 0, other = 0, avoided = 0;
            for (EdgeId e : cut) {
                if (o[e] == avoid) ++avoided;
                else if (o[e] == Owner::Free) ++free;
                else ++other;
            }
            long long e = static_cast<long long>(cut.size());
            // choose j free and l other, j + l >= e - t
            for (long long j = 0; j <= free; ++j)
                for (long long l = std::max(0LL, e - t_ - j); l <= other; ++l)
                    acc += static_cast<long double>(binomial(free, j)) * binomial(other, l) *
                           ipow(x, j);
        }
        return static_cast<double>(acc);
    }

    long long t_;
    std::vector<std::vector<EdgeId>> pair_cuts_;
};

/// Explicit sparse-subgraph family: per vertex set S up to `max_vertices`,
/// all edge subsets of E(S) of exactly the threshold size.
void add_sparse_members(const Graph& board, double max_frac, double rate, long long budget,
                        std::vector<std::vector<EdgeId>>& out) {
    int n = board.vertex_count();
    int cap = static_cast<int>(max_frac * n);
    if (cap < 1) return;
    if (n > 20) throw SizeLimitError("sparse family: board too large for explicit enumeration");
    for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
        int k = std::popcount(s);
        if (k > cap) continue;
        long long need = static_cast<long long>(std::ceil(rate * k));
        if (need < 1) continue;
        std::vector<EdgeId> inside;
        for (EdgeId e = 0; e < board.edge_count(); ++e) {
            Vertex u = board.edge(e).u, v = board.edge(e).v;
            if ((s >> u & 1) && (s >> v & 1)) inside.push_back(e);
        }
        if (static_cast<long long>(inside.size()) < need) continue;
        if (binomial_d(static_cast<long long>(inside.size()), need) +
                static_cast<double>(out.size()) > static_cast<double>(budget))
            throw BudgetExceededError("sparse family: member budget exceeded");
        std::vector<int> c(static_cast<size_t>(need));
        for (long long i = 0; i < need; ++i) c[static_cast<size_t>(i)] = static_cast<int>(i);
        while (true) {
            std::vector<EdgeId> member;
            for (int i : c) member.push_back(inside[i]);
            out.push_back(std::move(member));
            int kk = static_cast<int>(c.size()), nn = static_cast<int>(inside.size());
            int i = kk - 1;
            while (i >= 0 && c[i] == nn - kk + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < kk; ++j) c[j] = c[j - 1] + 1;
        }
    }
}

void add_cut_block_members(const Graph& board, double max_frac, long long need, long long budget,
                           std::vector<std::vector<EdgeId>>& out) {
    int n = board.vertex_count();
    int cap = static_cast<int>(max_frac * n);
    if (cap < 1 || need < 1) return;
    if (n > 20) throw SizeLimitError("cut family: board too large for explicit enumeration");
    for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
        if (std::popcount(s) > cap) continue;
        std::vector<EdgeId> cut;
        for (EdgeId e = 0; e < board.edge_count(); ++e) {
            bool iu = s >> board.edge(e).u & 1, iv = s >> board.edge(e).v & 1;
            if (iu != iv) cut.push_back(e);
        }
        if (static_cast<long long>(cut.size()) < need) continue;
        if (binomial_d(static_cast<long long>(cut.size()), need) +
                static_cast<double>(out.size()) > static_cast<double>(budget))
            throw BudgetExceededError("cut family: member budget exceeded");
        std::vector<int> c(static_cast<size_t>(need));
        for (long long i = 0; i < need; ++i) c[static_cast<size_t>(i)] = static_cast<int>(i);
        while (true) {
            std::vector<EdgeId> member;
            for (int i : c) member.push_back(cut[i]);
            out.push_back(std::move(member));
            int kk = static_cast<int>(c.size()), nn = static_cast<int>(cut.size());
            int i = kk - 1;
            while (i >= 0 && c[i] == nn - kk + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < kk; ++j) c[j] = c[j - 1] + 1;
        }
    }
}

}  // namespace

Family Family::explicit_family(std::vector<std::vector<EdgeId>> members) {
    return Family(std::make_shared<ExplicitFamily>(std::move(members)));
}

Family tree_out_edges_family(const MaryTree& tree, int k, int q) {
    (void)q;
    std::vector<std::vector<EdgeId>> groups;
    for (Vertex x : tree.internal) groups.push_back(tree.out_edges[x]);
    int s = tree.arity - k + 1;
    return Family(std::make_shared<TreeOutEdgesFamily>(std::move(groups), s));
}

Family build_family(const std::string& kind, const Graph& board, const FamilyParams& prm, int q) {
    int n = board.vertex_count();
    if (kind == "sparse_component") {
        std::vector<std::vector<EdgeId>> members;
        double delta = prm.delta > 0 ? prm.delta : (prm.eps > 0 ? prm.eps / (1 - prm.eps) : 0.25);
        double theta = prm.theta > 0 ? prm.theta : std::exp(-2.5 / delta - 1.0);
        add_sparse_members(board, theta, 1.0 + delta, prm.budget, members);
        return Family::explicit_family(std::move(members));
    }
    if (kind == "path_triple") {
        double eps = prm.eps > 0 ? prm.eps : 0.25;
        double d1 = prm.delta1 > 0 ? prm.delta1 : std::exp(-3.0 / eps - 1.0);
        double d2 = prm.delta2 > 0 ? prm.delta2 : d1 * d1;
        double gamma = prm.gamma > 0 ? prm.gamma : (eps * d2) * (eps * d2);
        std::vector<std::vector<EdgeId>> members;
        add_sparse_members(board, d1, 1.0 + eps, prm.budget, members);
        add_sparse_members(board, d2, 1.0 + eps / 2.0, prm.budget, members);
        add_cut_block_members(board, gamma,
                              static_cast<long long>(std::ceil(eps * d2 / 2.0 * n)), prm.budget,
                              members);
        return Family::explicit_family(std::move(members));
    }
    if (kind == "disjoint_cut") {
        int s = prm.k > 0 ? prm.k : std::max(1, static_cast<int>(prm.delta * n));
        return Family(std::make_shared<DisjointCutFamily>(board, s));
    }
    if (kind == "regular_cut") {
        int k = prm.k > 0 ? prm.k : 3;
        int s = std::max(1, static_cast<int>(std::ceil(prm.eps * n / k)));
        long long t = static_cast<long long>(prm.d * prm.p * prm.eps * prm.eps * n *
                                             static_cast<double>(n) / (k * k));
        return Family(std::make_shared<RegularCutFamily>(board, s, t));
    }
    if (kind == "tree_outedges") {
        int k = prm.k > 0 ? prm.k : 2;
        int m = prm.m > 0 ? prm.m : (k * (q + 1)) * (k * (q + 1));
        // board must be the BFS-numbered complete m-ary tree
        std::vector<std::vector<EdgeId>> groups;
        for (Vertex x = 0; x < n; ++x) {
            std::vector<EdgeId> g;
            for (int c = 1; c <= m; ++c) {
                long long child = static_cast<long long>(m) * x + c;
                if (child >= n) break;
                EdgeId e = board.edge_id(x, static_cast<Vertex>(child));
                if (e < 0) break;
                g.push_back(e);
            }
            if (static_cast<int>(g.size()) == m) groups.push_back(std::move(g));
        }
        if (groups.empty()) throw UsageError("tree_outedges: board is not the expected m-ary tree");
        return Family(std::make_shared<TreeOutEdgesFamily>(std::move(groups), m - k + 1));
    }
    throw UsageError("unknown family kind: " + kind);
}

CriteriaReport evaluate_criteria(const Family& f, int q) {
    CriteriaReport r;
    r.phi_es = f.weight_sum(1.0 / (q + 1));
    r.phi_t = f.weight_sum(std::exp(-1.0 / (q + 1)));
    r.phi_w = f.weight_sum(0.5);
    return r;
}

}  // namespace cwg
