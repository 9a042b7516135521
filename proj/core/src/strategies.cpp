#include "cwg/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cwg/cores.hpp"
#include "cwg/forests.hpp"
#include "cwg/subgraph_iso.hpp"
#include "cwg/triangles.hpp"

namespace cwg {

StrategyParams StrategyParams::component_defaults(double eps) {
    StrategyParams p;
    p.eps = eps;
    p.delta = eps / (1.0 - eps);
    p.theta = std::exp(-2.5 / p.delta - 1.0);
    p.validate();
    return p;
}

StrategyParams StrategyParams::path_defaults(double eps) {
    StrategyParams p;
    p.eps = eps;
    p.delta1 = std::exp(-3.0 / eps - 1.0);
    p.delta2 = p.delta1 * p.delta1;
    p.gamma = (eps * p.delta2) * (eps * p.delta2);
    p.validate();
    return p;
}

StrategyParams StrategyParams::tree_defaults(int k, int q) {
    StrategyParams p;
    p.k = k;
    p.m = (k * (q + 1)) * (k * (q + 1));
    p.validate();
    return p;
}

void StrategyParams::validate() const {
    if (eps < 0 || eps >= 1) throw UsageError("params: eps must lie in [0,1)");
    if (delta > 0 && eps > 0) {
        double want = eps / (1.0 - eps);
        if (std::abs(delta - want) > 1e-9 * std::max(1.0, want))
            throw UsageError("params: delta != eps/(1-eps)");
        if (theta > 0 && std::abs(theta - std::exp(-2.5 / delta - 1.0)) > 1e-12)
            throw UsageError("params: theta off its defining formula");
    }
    if (delta1 > 0 && eps > 0) {
        if (std::abs(delta1 - std::exp(-3.0 / eps - 1.0)) > 1e-15)
            throw UsageError("params: delta1 off its defining formula");
        if (delta2 > 0 && std::abs(delta2 - delta1 * delta1) > 1e-18)
            throw UsageError("params: delta2 != delta1^2");
    }
    if (k > 0 && m > 0) {
        // m = (k(q+1))^2 for some positive q
        double root = std::sqrt(static_cast<double>(m));
        if (std::abs(root - std::round(root)) > 1e-9 ||
            static_cast<int>(std::round(root)) % k != 0)
            throw UsageError("params: m is not (k(q+1))^2");
    }
}

namespace {

std::vector<EdgeId> lowest_free(const GameState& s, int cap) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < s.board().edge_count() && static_cast<int>(out.size()) < cap; ++e)
        if (s.owner(e) == Owner::Free) out.push_back(e);
    return out;
}

// ------------------------------------------------------------------ star ---

class StarWaiter : public WaiterStrategy {
public:
    explicit StarWaiter(int q) : q_(q) {}

    std::vector<EdgeId> offer(const GameState& s) override {
        Vertex center = -1;
        if (!s.history().empty()) {
            const Turn& last = s.history().back();
            if (last.pick != kNoPick && center_prev_ >= 0) {
                const Edge& e = s.board().edge(last.pick);
                center = (e.u == center_prev_) ? e.v : e.u;
            }
        }
        auto free_at = [&](Vertex v) {
            std::vector<EdgeId> out;
            for (EdgeId e : s.board().incident(v))
                if (s.owner(e) == Owner::Free) out.push_back(e);
            std::sort(out.begin(), out.end());
            return out;
        };
        std::vector<EdgeId> edges;
        if (center >= 0) edges = free_at(center);
        if (edges.empty()) {
            for (Vertex v = 0; v < s.board().vertex_count(); ++v) {
                edges = free_at(v);
                if (!edges.empty()) {
                    center = v;
                    break;
                }
            }
        }
        if (edges.empty()) throw InternalError("star waiter: no free edges left");
        if (static_cast<int>(edges.size()) > q_ + 1) edges.resize(q_ + 1);
        center_prev_ = center;
        return edges;
    }

    std::unique_ptr<WaiterStrategy> clone() const override {
        return std::make_unique<StarWaiter>(*this);
    }

private:
    int q_;
    Vertex center_prev_ = -1;
};

}  // namespace

std::unique_ptr<WaiterStrategy> waiter_star(int q) { return std::make_unique<StarWaiter>(q); }

// ------------------------------------------------------------- component ---

struct ComponentWaiter::Impl {
    int q_top = -1;
    int bias = 0;
    std::vector<std::vector<Vertex>> groups;
    std::vector<int> group_of;  // real vertex -> group, -1 outside level
    std::vector<char> in_x, in_y, in_u;
    std::vector<int> y_order;
    size_t stage2_pos = 0;
    std::set<std::pair<int, int>> aux_client;
    int stage = 1;  // 1, 2; 3 = mop-up; 4 = fallback mop-up
    enum class Pending { None, Stage1, Stage2 } pending = Pending::None;
    std::vector<int> pending_t;
    int pending_y = -1;
    size_t processed = 0;

    void reset_level(std::vector<std::vector<Vertex>> gs, int b, int n_real) {
        groups = std::move(gs);
        bias = b;
        group_of.assign(n_real, -1);
        for (size_t i = 0; i < groups.size(); ++i)
            for (Vertex v : groups[i]) group_of[v] = static_cast<int>(i);
        in_x.assign(groups.size(), 0);
        in_y.assign(groups.size(), 0);
        in_u.assign(groups.size(), 1);
        y_order.clear();
        stage2_pos = 0;
        aux_client.clear();
        stage = 1;
        pending = Pending::None;
    }

    std::vector<EdgeId> real_free_between(const GameState& s, int gi, int gj) const {
        std::vector<EdgeId> out;
        for (Vertex u : groups[gi])
            for (Vertex v : groups[gj]) {
                EdgeId e = s.board().edge_id(u, v);
                if (e >= 0 && s.owner(e) == Owner::Free) out.push_back(e);
            }
        return out;
    }

    bool pair_free(const GameState& s, int gi, int gj) const {
        for (Vertex u : groups[gi])
            for (Vertex v : groups[gj]) {
                EdgeId e = s.board().edge_id(u, v);
                if (e >= 0 && s.owner(e) == Owner::Free) return true;
            }
        return false;
    }
};

ComponentWaiter::ComponentWaiter(int q) : impl_(std::make_shared<Impl>()) {
    impl_->q_top = q;
}

std::unique_ptr<ComponentWaiter> waiter_component(int q) {
    return std::make_unique<ComponentWaiter>(q);
}

std::unique_ptr<WaiterStrategy> ComponentWaiter::clone() const {
    auto c = std::make_unique<ComponentWaiter>(impl_->q_top);
    c->impl_ = std::make_shared<Impl>(*impl_);
    c->levels_ = levels_;
    c->annotation_ = annotation_;
    return c;
}

std::vector<EdgeId> ComponentWaiter::offer(const GameState& s) {
    Impl& im = *impl_;
    int n = s.board().vertex_count();
    if (im.group_of.empty()) {
        if (s.q() != im.q_top) throw PreconditionError("component waiter built for a different bias");
        if (im.q_top + 1 < n - 1)
            throw PreconditionError("component waiter needs q+1 >= n-1");
        std::vector<std::vector<Vertex>> singles(n);
        for (Vertex v = 0; v < n; ++v) singles[v] = {v};
        im.reset_level(std::move(singles), im.q_top, n);
        levels_.push_back({n, im.q_top});
        im.processed = 0;
    }

    // absorb the reply to our previous offer
    for (; im.processed < s.history().size(); ++im.processed) {
        const Turn& t = s.history()[im.processed];
        if (t.pick == kNoPick || im.pending == Impl::Pending::None) continue;
        const Edge& pe = s.board().edge(t.pick);
        int gi = im.group_of[pe.u], gj = im.group_of[pe.v];
        if (gi < 0 || gj < 0 || gi == gj) continue;
        if (im.pending == Impl::Pending::Stage1) {
            bool it = std::find(im.pending_t.begin(), im.pending_t.end(), gi) != im.pending_t.end();
            bool jt = std::find(im.pending_t.begin(), im.pending_t.end(), gj) != im.pending_t.end();
            int x, y;
            if (it && jt) {
                x = std::min(gi, gj);
                y = std::max(gi, gj);
            } else {
                x = it ? gi : gj;
                y = it ? gj : gi;
            }
            im.in_x[x] = 1;
            im.in_y[y] = 1;
            im.y_order.push_back(y);
            for (int g : im.pending_t) im.in_u[g] = 0;
            im.in_u[y] = 0;
            im.aux_client.insert({std::min(x, y), std::max(x, y)});
        } else if (im.pending == Impl::Pending::Stage2) {
            im.aux_client.insert({std::min(gi, gj), std::max(gi, gj)});
        }
        im.pending = Impl::Pending::None;
    }

    while (true) {
        if (im.stage >= 3) {
            annotation_ = im.stage == 4 ? "fallback" : "mopup";
            auto out = lowest_free(s, im.q_top + 1);
            if (out.empty()) throw InternalError("component waiter: asked to move with no free edges");
            return out;
        }
        if (im.stage == 1) {
            std::vector<int> u_list;
            for (size_t g = 0; g < im.groups.size(); ++g)
                if (im.in_u[g]) u_list.push_back(static_cast<int>(g));
            if (u_list.empty()) {
                im.stage = 2;
                continue;
            }
            std::vector<int> T;
            std::vector<std::pair<int, int>> pairs;
            int virt = 0, real = 0;
            for (int v : u_list) {
                std::vector<std::pair<int, int>> added;
                int av = 0, ar = 0;
                for (int u : u_list) {
                    if (u == v) continue;
                    if (std::find(T.begin(), T.end(), u) != T.end()) continue;
                    auto re = im.real_free_between(s, v, u);
                    if (re.empty()) continue;
                    added.push_back({std::min(u, v), std::max(u, v)});
                    ++av;
                    ar += static_cast<int>(re.size());
                }
                if (virt + av <= im.bias + 1 && real + ar <= im.q_top + 1) {
                    T.push_back(v);
                    virt += av;
                    real += ar;
                    pairs.insert(pairs.end(), added.begin(), added.end());
                }
            }
            if (T.empty()) {
                im.stage = 4;
                continue;
            }
            if (pairs.empty()) {
                // vertices with no free edges toward U drop out as isolated
                for (int v : T) im.in_u[v] = 0;
                continue;
            }
            std::vector<EdgeId> out;
            for (auto& [a, b] : pairs) {
                auto re = im.real_free_between(s, a, b);
                out.insert(out.end(), re.begin(), re.end());
            }
            std::sort(out.begin(), out.end());
            im.pending = Impl::Pending::Stage1;
            im.pending_t = T;
            annotation_ = "L" + std::to_string(levels_.size() - 1) + ":I";
            return out;
        }
        // stage 2
        std::vector<char> isolated(im.groups.size(), 1);
        for (auto& [a, b] : im.aux_client) {
            isolated[a] = 0;
            isolated[b] = 0;
        }
        bool emitted = false;
        std::vector<EdgeId> out;
        while (im.stage2_pos < im.y_order.size()) {
            int y = im.y_order[im.stage2_pos];
            int real = 0;
            std::vector<int> targets;
            for (size_t z = 0; z < im.groups.size(); ++z) {
                if (!isolated[z] || static_cast<int>(z) == y) continue;
                auto re = im.real_free_between(s, y, static_cast<int>(z));
                if (re.empty()) continue;
                if (real + static_cast<int>(re.size()) > im.q_top + 1) break;
                real += static_cast<int>(re.size());
                targets.push_back(static_cast<int>(z));
                out.insert(out.end(), re.begin(), re.end());
            }
            if (targets.empty()) {
                ++im.stage2_pos;
                continue;
            }
            im.pending = Impl::Pending::Stage2;
            im.pending_y = y;
            ++im.stage2_pos;
            emitted = true;
            break;
        }
        if (emitted) {
            std::sort(out.begin(), out.end());
            annotation_ = "L" + std::to_string(levels_.size() - 1) + ":II";
            return out;
        }
        // stage 3: regroup Client components into the next level
        {
            std::vector<int> parent(im.groups.size());
            for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
            std::function<int(int)> find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (auto& [a, b] : im.aux_client) parent[find(a)] = find(b);
            std::map<int, std::vector<Vertex>> comps;
            std::vector<char> has_edge(im.groups.size(), 0);
            for (auto& [a, b] : im.aux_client) {
                has_edge[a] = 1;
                has_edge[b] = 1;
            }
            for (size_t g = 0; g < im.groups.size(); ++g) {
                if (!has_edge[g]) continue;
                auto& dst = comps[find(static_cast<int>(g))];
                dst.insert(dst.end(), im.groups[g].begin(), im.groups[g].end());
            }
            std::vector<std::vector<Vertex>> next;
            for (auto& [root, vs] : comps) {
                std::sort(vs.begin(), vs.end());
                next.push_back(vs);
            }
            std::sort(next.begin(), next.end());
            int sN = static_cast<int>(next.size());
            int nb = im.bias / 3;
            levels_.push_back({sN, nb});
            if (sN <= 2) {
                im.stage = 3;
            } else if (nb + 1 < sN - 1) {
                im.stage = 4;
            } else {
                im.reset_level(std::move(next), nb, s.board().vertex_count());
            }
        }
    }
}

// ------------------------------------------------------------------ path ---

struct PathWaiter::Impl {
    int q = -1;
    std::vector<char> active, in_x, in_y, in_u;
    std::vector<Vertex> y_order;
    bool pending = false;
    std::vector<Vertex> pending_t;
    size_t processed = 0;
    bool mopup = false;

    void reset_level(const std::vector<Vertex>& verts, int n) {
        active.assign(n, 0);
        in_x.assign(n, 0);
        in_y.assign(n, 0);
        in_u.assign(n, 0);
        for (Vertex v : verts) {
            active[v] = 1;
            in_u[v] = 1;
        }
        y_order.clear();
        pending = false;
    }
};

PathWaiter::PathWaiter(int q) : impl_(std::make_shared<Impl>()) { impl_->q = q; }

std::unique_ptr<PathWaiter> waiter_path(int q) { return std::make_unique<PathWaiter>(q); }

std::unique_ptr<WaiterStrategy> PathWaiter::clone() const {
    auto c = std::make_unique<PathWaiter>(impl_->q);
    c->impl_ = std::make_shared<Impl>(*impl_);
    c->level_sizes_ = level_sizes_;
    c->annotation_ = annotation_;
    return c;
}

std::vector<EdgeId> PathWaiter::offer(const GameState& s) {
    Impl& im = *impl_;
    int n = s.board().vertex_count();
    if (im.active.empty()) {
        if (s.q() != im.q) throw PreconditionError("path waiter built for a different bias");
        if (im.q + 1 < n - 1) throw PreconditionError("path waiter needs q+1 >= n-1");
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        im.reset_level(all, n);
        level_sizes_.push_back(n);
    }

    for (; im.processed < s.history().size(); ++im.processed) {
        const Turn& t = s.history()[im.processed];
        if (t.pick == kNoPick || !im.pending) continue;
        const Edge& pe = s.board().edge(t.pick);
        bool ut = std::find(im.pending_t.begin(), im.pending_t.end(), pe.u) != im.pending_t.end();
        bool vt = std::find(im.pending_t.begin(), im.pending_t.end(), pe.v) != im.pending_t.end();
        Vertex x, y;
        if (ut && vt) {
            x = std::min(pe.u, pe.v);
            y = std::max(pe.u, pe.v);
        } else {
            x = ut ? pe.u : pe.v;
            y = ut ? pe.v : pe.u;
        }
        if (im.in_x[y]) throw InternalError("path waiter: star leaf got a new edge");
        im.in_x[x] = 1;
        if (!im.in_y[y]) {
            im.in_y[y] = 1;
            im.y_order.push_back(y);
        }
        for (Vertex w : im.pending_t) im.in_u[w] = 0;
        im.in_u[y] = 0;
        im.pending = false;
    }

    while (true) {
        if (im.mopup) {
            annotation_ = "mopup";
            auto out = lowest_free(s, im.q + 1);
            if (out.empty()) throw InternalError("path waiter: asked to move with no free edges");
            return out;
        }
        std::vector<Vertex> u_list;
        for (Vertex v = 0; v < n; ++v)
            if (im.in_u[v]) u_list.push_back(v);
        if (u_list.empty()) {
            // restart on the star centers at the same bias
            if (im.y_order.size() <= 2 || s.free_count() == 0) {
                im.mopup = true;
                continue;
            }
            level_sizes_.push_back(static_cast<int>(im.y_order.size()));
            im.reset_level(im.y_order, n);
            continue;
        }
        auto free_deg = [&](Vertex v) {
            int d = 0;
            for (EdgeId e : s.board().incident(v))
                if (s.owner(e) == Owner::Free) ++d;
            return d;
        };
        std::vector<Vertex> T;
        std::vector<char> in_t(n, 0);
        int total = 0;
        for (Vertex v : u_list) {
            int added = free_deg(v);
            for (EdgeId e : s.board().incident(v)) {
                if (s.owner(e) != Owner::Free) continue;
                if (in_t[s.board().other_end(e, v)]) --added;  // already counted
            }
            if (total + added <= im.q + 1) {
                T.push_back(v);
                in_t[v] = 1;
                total += added;
            }
        }
        if (T.empty()) {
            im.mopup = true;  // cannot satisfy the budget even with one vertex
            continue;
        }
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < s.board().edge_count(); ++e) {
            if (s.owner(e) != Owner::Free) continue;
            if (in_t[s.board().edge(e).u] || in_t[s.board().edge(e).v]) out.push_back(e);
        }
        if (out.empty()) {
            for (Vertex v : T) im.in_u[v] = 0;  // isolated leftovers
            continue;
        }
        im.pending = true;
        im.pending_t = T;
        annotation_ = "L" + std::to_string(level_sizes_.size() - 1) + ":I";
        return out;
    }
}

// ---------------------------------------------------------- phase machine ---

namespace {

/// Sequential composition of sub-board strategies and fixed simultaneous
/// offers; finishes with legal chunks of whatever remains.
class PhasedWaiter : public WaiterStrategy {
public:
    struct PhaseSpec {
        std::vector<EdgeId> edges;  // parent edges owned by this phase
        bool fixed = false;         // one simultaneous offer instead of a sub-game
        Goal goal;                  // sub-game goal (non-fixed)
        std::function<std::unique_ptr<WaiterStrategy>(const Graph&)> strat_factory;
        Graph check_pattern;        // validated absent from Client at phase end
        bool check = false;
        bool check_cycle = false;   // Client's phase edges must stay acyclic
    };

    PhasedWaiter(std::vector<PhaseSpec> specs, int expected_q, std::string name)
        : specs_(std::move(specs)), expected_q_(expected_q), name_(std::move(name)) {}

    PhasedWaiter(const PhasedWaiter& o)
        : specs_(o.specs_), expected_q_(o.expected_q_), name_(o.name_), inited_(o.inited_),
          current_(o.current_), processed_(o.processed_), live_(o.live_.size()) {
        for (size_t i = 0; i < o.live_.size(); ++i)
            if (o.live_[i]) live_[i] = std::make_unique<Live>(*o.live_[i]);
    }

    std::unique_ptr<WaiterStrategy> clone() const override {
        return std::make_unique<PhasedWaiter>(*this);
    }

    std::string annotation() const override { return annotation_; }

    std::vector<EdgeId> offer(const GameState& s) override {
        init(s);
        sync(s);
        while (current_ < specs_.size() && phase_done(s, current_)) {
            finish_phase(s, current_);
            ++current_;
        }
        if (current_ < specs_.size()) {
            PhaseSpec& spec = specs_[current_];
            if (spec.fixed) {
                std::vector<EdgeId> out;
                for (EdgeId e : spec.edges)
                    if (s.owner(e) == Owner::Free) out.push_back(e);
                if (static_cast<int>(out.size()) > s.q() + 1)
                    throw InternalError(name_ + ": fixed offer larger than q+1");
                annotation_ = name_ + ":group";
                return out;
            }
            Live& lv = *live_[current_];
            auto sub_offer = lv.strat->offer(lv.sub_state);
            std::vector<EdgeId> out;
            out.reserve(sub_offer.size());
            for (EdgeId e : sub_offer) out.push_back(lv.sub.to_parent_edge[e]);
            annotation_ = name_ + ":sub" + std::to_string(current_);
            return out;
        }
        annotation_ = name_ + ":rest";
        auto out = lowest_free(s, s.q() + 1);
        if (out.empty()) throw InternalError(name_ + ": asked to move with no free edges");
        return out;
    }

private:
    struct Live {
        Subgraph sub;
        std::vector<int> from_parent;  // parent edge -> sub edge or -1
        GameState sub_state;
        std::unique_ptr<WaiterStrategy> strat;

        Live() = default;
        Live(const Live& o)
            : sub(o.sub), from_parent(o.from_parent), sub_state(o.sub_state),
              strat(o.strat ? o.strat->clone() : nullptr) {}
    };

    void init(const GameState& s) {
        if (inited_) return;
        inited_ = true;
        if (expected_q_ > 0 && s.q() < expected_q_)
            throw PreconditionError(name_ + ": needs bias at least " + std::to_string(expected_q_));
        if (s.variant() != Variant::ClientWaiter)
            throw PreconditionError(name_ + ": Client-Waiter strategy");
        live_.resize(specs_.size());
        phase_of_edge_.assign(s.board().edge_count(), -1);
        for (size_t i = 0; i < specs_.size(); ++i) {
            for (EdgeId e : specs_[i].edges) phase_of_edge_[e] = static_cast<int>(i);
            if (specs_[i].fixed) continue;
            auto lv = std::make_unique<Live>();
            lv->sub = edge_subgraph(s.board(), specs_[i].edges);
            lv->from_parent.assign(s.board().edge_count(), -1);
            for (size_t j = 0; j < lv->sub.to_parent_edge.size(); ++j)
                lv->from_parent[lv->sub.to_parent_edge[j]] = static_cast<int>(j);
            lv->sub_state = new_game(lv->sub.graph, specs_[i].goal, s.q(), Variant::ClientWaiter);
            lv->strat = specs_[i].strat_factory(lv->sub.graph);
            live_[i] = std::move(lv);
        }
    }

    void sync(const GameState& s) {
        for (; processed_ < s.history().size(); ++processed_) {
            const Turn& t = s.history()[processed_];
            int phase = phase_of_edge_[t.offer.front()];
            if (phase < 0 || !live_[phase]) continue;
            Live& lv = *live_[phase];
            std::vector<EdgeId> sub_offer;
            for (EdgeId e : t.offer) {
                if (lv.from_parent[e] < 0)
                    throw InternalError(name_ + ": offer crossed phase boundaries");
                sub_offer.push_back(lv.from_parent[e]);
            }
            EdgeId sub_pick = t.pick == kNoPick ? kNoPick : lv.from_parent[t.pick];
            lv.sub_state = step(lv.sub_state, sub_offer, sub_pick);
        }
    }

    bool phase_done(const GameState& s, size_t i) const {
        for (EdgeId e : specs_[i].edges)
            if (s.owner(e) == Owner::Free) return false;
        return true;
    }

    void finish_phase(const GameState& s, size_t i) {
        if ((!specs_[i].check && !specs_[i].check_cycle) || checked_.count(i)) return;
        checked_.insert(i);
        std::vector<EdgeId> client;
        for (EdgeId e : specs_[i].edges)
            if (s.owner(e) == Owner::Client) client.push_back(e);
        if (specs_[i].check_cycle && edges_contain_cycle(s.board(), client))
            throw StrategyFailureError(name_ + ": Client went cyclic inside a forest pair");
        if (specs_[i].check) {
            Graph cg = spanning_subgraph(s.board(), client);
            if (contains_copy(cg, specs_[i].check_pattern))
                throw StrategyFailureError(name_ + ": inner strategy lost its component");
        }
    }

    std::vector<PhaseSpec> specs_;
    int expected_q_;
    std::string name_;
    bool inited_ = false;
    size_t current_ = 0;
    size_t processed_ = 0;
    std::vector<std::unique_ptr<Live>> live_;
    std::vector<int> phase_of_edge_;
    std::set<size_t> checked_;
    std::string annotation_;
};

std::function<std::unique_ptr<WaiterStrategy>(const Graph&)> solver_factory(Goal goal) {
    return [goal](const Graph&) { return waiter_solver(); };
}

}  // namespace

// ----------------------------------------------------------- orientation ---

std::unique_ptr<WaiterStrategy> waiter_orientation(const Graph& board, const Graph& pattern) {
    Rat mg = max_density(board);
    Rat mh = max_density_exhaustive(pattern);
    if (!(Rat(rat_ceil(mg / 2)) < mh))
        throw PreconditionError("orientation waiter needs ceil(m(G)/2) < m(H)");
    int k = static_cast<int>(rat_ceil(mg));
    Orientation o = hall_orientation(board, std::max(1, k));

    std::vector<PhasedWaiter::PhaseSpec> specs;
    for (Vertex v = 0; v < board.vertex_count(); ++v) {
        std::vector<EdgeId> out_edges;
        for (EdgeId e = 0; e < board.edge_count(); ++e)
            if (o.source[e] == v) out_edges.push_back(e);
        std::sort(out_edges.begin(), out_edges.end());
        for (size_t i = 0; i < out_edges.size(); i += 2) {
            PhasedWaiter::PhaseSpec spec;
            spec.fixed = true;
            spec.edges = {out_edges[i]};
            if (i + 1 < out_edges.size()) spec.edges.push_back(out_edges[i + 1]);
            specs.push_back(std::move(spec));
        }
    }
    return std::make_unique<PhasedWaiter>(std::move(specs), 1, "orientation");
}

// ----------------------------------------------------------------- forest ---

std::unique_ptr<WaiterStrategy> waiter_forest(const Graph& board, const Graph& pattern,
                                              ForestPairPolicy policy) {
    ForestDecomposition dec = nash_williams(board);
    int f = dec.forest_count;
    int k = (f + 1) / 2;
    Rat ar_h = arboricity_exact(pattern);
    if (!(Rat(std::max(k, 1)) < ar_h) && board.edge_count() > 0)
        throw PreconditionError("forest waiter needs ceil(ar(G)/2) < ar(H)");
    auto classes = dec.classes(board);
    classes.resize(2 * std::max(k, 1));  // pad with empty forests

    std::vector<PhasedWaiter::PhaseSpec> specs;
    for (int p = 0; 2 * p < static_cast<int>(classes.size()); ++p) {
        PhasedWaiter::PhaseSpec spec;
        spec.edges = classes[2 * p];
        spec.edges.insert(spec.edges.end(), classes[2 * p + 1].begin(), classes[2 * p + 1].end());
        std::sort(spec.edges.begin(), spec.edges.end());
        if (spec.edges.empty()) continue;
        spec.goal = Goal::contains_cycle();
        if (policy) {
            auto pol = policy;
            spec.strat_factory = [pol](const Graph& g) { return pol(g, 1); };
        } else {
            spec.strat_factory = solver_factory(spec.goal);
        }
        spec.check_cycle = true;
        specs.push_back(std::move(spec));
    }
    return std::make_unique<PhasedWaiter>(std::move(specs), 1, "forest");
}

// ------------------------------------------------------------ k3 at q=2 ---

namespace {

/// Unweighted global min cut (Stoer-Wagner) on an induced subgraph given by
/// a vertex list; returns (cut weight, one side as parent vertices).
std::pair<int, std::vector<Vertex>> min_cut(const Graph& g, const std::vector<Vertex>& verts) {
    int k = static_cast<int>(verts.size());
    std::vector<std::vector<int>> w(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(verts[i], verts[j])) w[i][j] = w[j][i] = 1;
    std::vector<std::vector<int>> members(k);
    for (int i = 0; i < k; ++i) members[i] = {i};
    std::vector<char> gone(k, 0);
    int best = INT32_MAX;
    std::vector<int> best_side;
    for (int phase = k; phase > 1; --phase) {
        std::vector<int> order;
        std::vector<int> weight(k, 0);
        std::vector<char> added(k, 0);
        for (int it = 0; it < phase; ++it) {
            int sel = -1;
            for (int v = 0; v < k; ++v)
                if (!gone[v] && !added[v] && (sel < 0 || weight[v] > weight[sel])) sel = v;
            added[sel] = 1;
            order.push_back(sel);
            for (int v = 0; v < k; ++v)
                if (!gone[v] && !added[v]) weight[v] += w[sel][v];
        }
        int t = order.back(), st = order[order.size() - 2];
        if (weight[t] < best) {
            best = weight[t];
            best_side = members[t];
        }
        // merge t into s
        gone[t] = 1;
        members[st].insert(members[st].end(), members[t].begin(), members[t].end());
        for (int v = 0; v < k; ++v) {
            w[st][v] += w[t][v];
            w[v][st] = w[st][v];
        }
    }
    std::vector<Vertex> side;
    for (int i : best_side) side.push_back(verts[i]);
    std::sort(side.begin(), side.end());
    return {best == INT32_MAX ? 0 : best, side};
}

struct K3Planner {
    const Graph& g;
    std::vector<PhasedWaiter::PhaseSpec> specs;

    std::vector<EdgeId> edges_within(const std::vector<Vertex>& verts) const {
        std::vector<char> in(g.vertex_count(), 0);
        for (Vertex v : verts) in[v] = 1;
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (in[g.edge(e).u] && in[g.edge(e).v]) out.push_back(e);
        return out;
    }

    std::vector<EdgeId> edges_between(const std::vector<Vertex>& a,
                                      const std::vector<Vertex>& b) const {
        std::vector<char> ia(g.vertex_count(), 0), ib(g.vertex_count(), 0);
        for (Vertex v : a) ia[v] = 1;
        for (Vertex v : b) ib[v] = 1;
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            Vertex u = g.edge(e).u, v = g.edge(e).v;
            if ((ia[u] && ib[v]) || (ia[v] && ib[u])) out.push_back(e);
        }
        return out;
    }

    void fixed(std::vector<EdgeId> edges) {
        if (edges.empty()) return;
        if (edges.size() > 3) throw InternalError("k3 waiter: planned offer larger than 3");
        PhasedWaiter::PhaseSpec spec;
        spec.fixed = true;
        std::sort(edges.begin(), edges.end());
        spec.edges = std::move(edges);
        specs.push_back(std::move(spec));
    }

    void solver_phase(const std::vector<Vertex>& verts) {
        PhasedWaiter::PhaseSpec spec;
        spec.edges = edges_within(verts);
        if (spec.edges.empty()) return;
        spec.goal = Goal::contains_copy(make_complete(3));
        spec.strat_factory = solver_factory(spec.goal);
        spec.check = true;
        spec.check_pattern = make_complete(3);
        specs.push_back(std::move(spec));
    }

    void build(std::vector<Vertex> verts) {
        std::sort(verts.begin(), verts.end());
        auto inside = edges_within(verts);
        if (inside.empty()) return;
        Subgraph ind = induced_subgraph(g, verts);
        auto comps = connected_components(ind.graph);
        if (comps.size() > 1) {
            for (auto& c : comps) {
                std::vector<Vertex> part;
                for (int i : c) part.push_back(ind.to_parent_vertex[i]);
                build(part);
            }
            return;
        }
        if (verts.size() <= 6) {
            solver_phase(verts);
            return;
        }
        auto [cutw, side] = min_cut(g, verts);
        if (cutw <= 3) {
            std::vector<Vertex> rest;
            std::vector<char> in_side(g.vertex_count(), 0);
            for (Vertex v : side) in_side[v] = 1;
            for (Vertex v : verts)
                if (!in_side[v]) rest.push_back(v);
            build(side);
            build(rest);
            fixed(edges_between(side, rest));
            return;
        }
        build_4regular(verts, verts[0]);
    }

    void build_4regular(const std::vector<Vertex>& verts, Vertex v0) {
        std::vector<char> in(g.vertex_count(), 0);
        for (Vertex v : verts) in[v] = 1;
        for (Vertex v : verts) {
            int d = 0;
            for (Vertex w : g.neighbors(v))
                if (in[w]) ++d;
            if (d != 4)
                throw InternalError("k3 waiter: expected a 4-regular component");
        }
        std::vector<Vertex> nb;
        for (Vertex w : g.neighbors(v0))
            if (in[w]) nb.push_back(w);
        std::sort(nb.begin(), nb.end());

        // neighborhood graph of v0 inside this component
        auto ndeg = [&](Vertex a) {
            int d = 0;
            for (Vertex b : nb)
                if (b != a && g.has_edge(a, b)) ++d;
            return d;
        };
        int ne = 0;
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (g.has_edge(nb[i], nb[j])) ++ne;

        // disconnected neighborhood: peel v0 and close its edges in two turns
        {
            std::vector<int> comp(nb.size(), -1);
            int nc = 0;
            for (size_t i = 0; i < nb.size(); ++i) {
                if (comp[i] >= 0) continue;
                std::vector<size_t> stack{i};
                comp[i] = nc;
                while (!stack.empty()) {
                    size_t x = stack.back();
                    stack.pop_back();
                    for (size_t j = 0; j < nb.size(); ++j)
                        if (comp[j] < 0 && g.has_edge(nb[x], nb[j])) {
                            comp[j] = nc;
                            stack.push_back(j);
                        }
                }
                ++nc;
            }
            if (nc > 1) {
                std::vector<Vertex> a, b;
                for (size_t i = 0; i < nb.size(); ++i)
                    (comp[i] == 0 ? a : b).push_back(nb[i]);
                std::vector<Vertex> rest;
                for (Vertex v : verts)
                    if (v != v0) rest.push_back(v);
                build(rest);
                fixed(edges_between({v0}, a));
                fixed(edges_between({v0}, b));
                return;
            }
        }

        int e_h = 4 + ne;
        if (e_h != 7 && e_h != 8)
            throw InternalError("k3 waiter: five-vertex block has unexpected edge count");

        std::vector<Vertex> h5 = nb;
        h5.push_back(v0);
        std::sort(h5.begin(), h5.end());
        std::vector<Vertex> rest;
        std::vector<char> in_h5(g.vertex_count(), 0);
        for (Vertex v : h5) in_h5[v] = 1;
        for (Vertex v : verts)
            if (!in_h5[v]) rest.push_back(v);

        std::vector<int> degs;
        for (Vertex a : nb) degs.push_back(ndeg(a));
        std::vector<int> sorted_degs = degs;
        std::sort(sorted_degs.begin(), sorted_degs.end());

        auto cut_of = [&](Vertex v) { return edges_between({v}, rest); };

        if (sorted_degs == std::vector<int>{2, 2, 2, 2}) {  // cycle neighborhood
            solver_phase(h5);
            build(rest);
            for (Vertex u : rest) {
                auto cut = edges_between({u}, h5);
                if (static_cast<int>(cut.size()) >= 4)
                    throw InternalError("k3 waiter: outside vertex sees four block vertices");
                fixed(cut);
            }
            return;
        }
        if (sorted_degs == std::vector<int>{1, 2, 2, 3}) {  // triangle with a pendant
            Vertex v1 = nb[0];
            for (size_t i = 0; i < nb.size(); ++i)
                if (degs[i] == 1) v1 = nb[i];
            solver_phase(h5);
            build(rest);
            auto first = cut_of(v1);
            fixed(first);
            std::vector<EdgeId> remaining;
            std::vector<char> used(g.edge_count(), 0);
            for (EdgeId e : first) used[e] = 1;
            for (EdgeId e : edges_between(h5, rest))
                if (!used[e]) remaining.push_back(e);
            fixed(remaining);
            return;
        }
        if (sorted_degs == std::vector<int>{1, 1, 1, 3}) {  // star neighborhood
            solver_phase(h5);
            build(rest);
            for (size_t i = 0; i < nb.size(); ++i)
                if (degs[i] == 1) fixed(cut_of(nb[i]));
            return;
        }
        // path neighborhood
        std::vector<Vertex> path = order_path(nb, degs);
        auto adj_mask = [&](Vertex u) {
            int mask = 0;
            for (int i = 0; i < 4; ++i)
                if (g.has_edge(u, path[i])) mask |= 1 << i;
            return mask;
        };
        for (Vertex u : rest) {
            int mask = adj_mask(u);
            if (mask == 0b0111) {  // v1 v2 v3
                build_4regular(verts, path[1]);
                return;
            }
            if (mask == 0b1110) {  // v2 v3 v4
                build_4regular(verts, path[2]);
                return;
            }
        }
        for (Vertex u : rest) {
            int mask = adj_mask(u);
            if (mask == 0b1101 || mask == 0b1011) {  // v1 v3 v4 or v1 v2 v4 mirrored
                std::vector<Vertex> p = path;
                if (mask == 0b1011) std::reverse(p.begin(), p.end());
                // offer (u,p3),(u,p4) and the other free edge of p4
                std::vector<EdgeId> group{g.edge_id(u, p[2]), g.edge_id(u, p[3])};
                for (EdgeId e : cut_of(p[3]))
                    if (e != group[1]) group.push_back(e);
                solver_phase(h5);
                build(rest);
                fixed(group);
                std::vector<char> used(g.edge_count(), 0);
                for (EdgeId e : group) used[e] = 1;
                std::vector<EdgeId> remaining;
                for (EdgeId e : edges_between(h5, rest))
                    if (!used[e]) remaining.push_back(e);
                fixed(remaining);
                return;
            }
        }
        // every outside vertex touches at most two block vertices
        solver_phase(h5);
        build(rest);
        std::vector<char> used(g.edge_count(), 0);
        auto end_group = [&](Vertex endv, Vertex next) {
            std::vector<EdgeId> group;
            Vertex helper = -1;
            for (Vertex u : rest)
                if (g.has_edge(u, endv) && g.has_edge(u, next)) {
                    helper = u;
                    break;
                }
            if (helper >= 0) {
                group = {g.edge_id(helper, endv), g.edge_id(helper, next)};
                for (EdgeId e : cut_of(endv))
                    if (e != group[0]) group.push_back(e);
            } else {
                group = cut_of(endv);
            }
            std::vector<EdgeId> fresh;
            for (EdgeId e : group)
                if (!used[e]) {
                    used[e] = 1;
                    fresh.push_back(e);
                }
            fixed(fresh);
        };
        end_group(path[0], path[1]);
        end_group(path[3], path[2]);
        std::vector<EdgeId> remaining;
        for (EdgeId e : edges_between(h5, rest))
            if (!used[e]) remaining.push_back(e);
        fixed(remaining);
    }

    std::vector<Vertex> order_path(const std::vector<Vertex>& nb, const std::vector<int>& degs) {
        Vertex v1 = -1;
        for (size_t i = 0; i < nb.size(); ++i)
            if (degs[i] == 1) {
                v1 = nb[i];
                break;
            }
        std::vector<Vertex> path{v1};
        std::vector<char> used(g.vertex_count(), 0);
        used[v1] = 1;
        while (path.size() < nb.size()) {
            for (Vertex w : nb) {
                if (!used[w] && g.has_edge(path.back(), w)) {
                    path.push_back(w);
                    used[w] = 1;
                    break;
                }
            }
        }
        return path;
    }
};

}  // namespace

std::unique_ptr<WaiterStrategy> waiter_k3_bias2(const Graph& board) {
    if (!(max_density(board) <= Rat(2)))
        throw PreconditionError("k3 waiter needs max density at most 2");
    K3Planner planner{board, {}};
    std::vector<Vertex> all(board.vertex_count());
    for (Vertex v = 0; v < board.vertex_count(); ++v) all[v] = v;
    planner.build(all);
    return std::make_unique<PhasedWaiter>(std::move(planner.specs), 2, "k3");
}

// --------------------------------------------------------- core reduction ---

std::unique_ptr<WaiterStrategy> waiter_core_reduction(const Graph& board, const Graph& pattern,
                                                      int q, InnerWaiterFactory inner) {
    bool triangle = pattern.vertex_count() == 3 && pattern.edge_count() == 3;
    CoreTrace trace = (triangle && q >= 2) ? k3_core(board) : h_core(board, pattern);
    for (auto& st : trace.steps)
        if (static_cast<int>(st.offer.size()) > q + 1)
            throw PreconditionError("core reduction: removal offers need a larger bias");

    std::vector<PhasedWaiter::PhaseSpec> specs;
    if (!trace.core_edges.empty()) {
        Subgraph core = edge_subgraph(board, trace.core_edges);
        for (auto& comp : biconnected_components(core.graph)) {
            PhasedWaiter::PhaseSpec spec;
            for (EdgeId e : comp) spec.edges.push_back(core.to_parent_edge[e]);
            std::sort(spec.edges.begin(), spec.edges.end());
            spec.goal = Goal::contains_copy(pattern);
            if (inner) {
                auto f = inner;
                spec.strat_factory = [f](const Graph& g) { return f(g); };
            } else {
                spec.strat_factory = solver_factory(spec.goal);
            }
            spec.check = true;
            spec.check_pattern = pattern;
            specs.push_back(std::move(spec));
        }
    }
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        PhasedWaiter::PhaseSpec spec;
        spec.fixed = true;
        spec.edges = it->offer;
        std::sort(spec.edges.begin(), spec.edges.end());
        specs.push_back(std::move(spec));
    }
    return std::make_unique<PhasedWaiter>(std::move(specs), q, "core");
}

// ------------------------------------------------- simple waiters/clients ---

namespace {

class RandomWaiter : public WaiterStrategy {
public:
    explicit RandomWaiter(uint64_t seed) : seed_(seed), rng_(seed) {}
    std::vector<EdgeId> offer(const GameState& s) override {
        auto free = s.free_edges();
        int want = std::min<int>(s.q() + 1, static_cast<int>(free.size()));
        rng_.shuffle(free);
        free.resize(want);
        std::sort(free.begin(), free.end());
        return free;
    }
    std::unique_ptr<WaiterStrategy> clone() const override {
        return std::make_unique<RandomWaiter>(*this);
    }

private:
    uint64_t seed_;
    Rng rng_;
};

class GreedyBlockerWaiter : public WaiterStrategy {
public:
    std::vector<EdgeId> offer(const GameState& s) override {
        if (tris_of_edge_.empty()) {
            tris_ = list_triangles(s.board());
            tris_of_edge_.assign(s.board().edge_count(), {});
            for (size_t i = 0; i < tris_.size(); ++i)
                for (EdgeId e : tris_[i].edges) tris_of_edge_[e].push_back(static_cast<int>(i));
        }
        std::vector<long long> score(s.board().edge_count(), -1);
        auto free = s.free_edges();
        for (EdgeId e : free) {
            score[e] = 0;
            for (int t : tris_of_edge_[e]) {
                int client = 0;
                bool dead = false;
                for (EdgeId f : tris_[t].edges) {
                    if (s.owner(f) == Owner::Waiter) dead = true;
                    if (s.owner(f) == Owner::Client) ++client;
                }
                if (dead) continue;
                score[e] += client == 2 ? 1'000'000 : (client == 1 ? 1'000 : 1);
            }
        }
        std::sort(free.begin(), free.end(), [&](EdgeId a, EdgeId b) {
            return score[a] != score[b] ? score[a] > score[b] : a < b;
        });
        int want = std::min<int>(s.q() + 1, static_cast<int>(free.size()));
        free.resize(want);
        std::sort(free.begin(), free.end());
        return free;
    }
    std::unique_ptr<WaiterStrategy> clone() const override {
        return std::make_unique<GreedyBlockerWaiter>(*this);
    }
    bool stateless() const override { return true; }

private:
    std::vector<Triangle> tris_;
    std::vector<std::vector<int>> tris_of_edge_;
};

class AntiQuotaWaiter : public WaiterStrategy {
public:
    AntiQuotaWaiter(std::vector<std::vector<EdgeId>> groups, uint64_t seed)
        : groups_(std::move(groups)), rng_(seed) {}
    std::vector<EdgeId> offer(const GameState& s) override {
        int best = -1;
        long long best_key = 0;
        for (size_t i = 0; i < groups_.size(); ++i) {
            int client = 0, free = 0;
            for (EdgeId e : groups_[i]) {
                if (s.owner(e) == Owner::Client) ++client;
                if (s.owner(e) == Owner::Free) ++free;
            }
            if (free == 0) continue;
            long long key = static_cast<long long>(client) * 100000 - free;
            if (best < 0 || key < best_key) {
                best = static_cast<int>(i);
                best_key = key;
            }
        }
        std::vector<EdgeId> out;
        if (best >= 0) {
            for (EdgeId e : groups_[best])
                if (s.owner(e) == Owner::Free && static_cast<int>(out.size()) < s.q() + 1)
                    out.push_back(e);
        }
        for (EdgeId e = 0; e < s.board().edge_count() && static_cast<int>(out.size()) < s.q() + 1;
             ++e)
            if (s.owner(e) == Owner::Free &&
                std::find(out.begin(), out.end(), e) == out.end())
                out.push_back(e);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::unique_ptr<WaiterStrategy> clone() const override {
        return std::make_unique<AntiQuotaWaiter>(*this);
    }

private:
    std::vector<std::vector<EdgeId>> groups_;
    Rng rng_;
};

class SolverWaiter : public WaiterStrategy {
public:
    explicit SolverWaiter(SolveOptions opts) : opts_(opts) {}
    std::vector<EdgeId> offer(const GameState& s) override {
        if (!solver_)
            solver_ = std::make_shared<Solver>(s.board(), s.goal(), s.q(), s.variant(), opts_);
        return solver_->best_offer(s.ownership());
    }
    std::unique_ptr<WaiterStrategy> clone() const override {
        return std::make_unique<SolverWaiter>(*this);  // shares the memo, values are facts
    }
    bool stateless() const override { return true; }

private:
    SolveOptions opts_;
    std::shared_ptr<Solver> solver_;
};

class RandomClient : public ClientStrategy {
public:
    explicit RandomClient(uint64_t seed) : rng_(seed) {}
    EdgeId pick(const GameState&, const std::vector<EdgeId>& offer) override {
        return offer[rng_.uniform_int(static_cast<int>(offer.size()))];
    }
    std::unique_ptr<ClientStrategy> clone() const override {
        return std::make_unique<RandomClient>(*this);
    }

private:
    Rng rng_;
};

class PotentialAvoidClient : public ClientStrategy {
public:
    PotentialAvoidClient(Family f, int q) : family_(std::move(f)), q_(q) {}
    EdgeId pick(const GameState& s, const std::vector<EdgeId>& offer) override {
        double x = 1.0 / (q_ + 1);
        OwnershipVec scratch = s.ownership();
        EdgeId best = offer.front();
        double best_val = 0;
        bool first = true;
        std::vector<EdgeId> sorted = offer;
        std::sort(sorted.begin(), sorted.end());
        for (EdgeId e : sorted) {
            for (EdgeId f : sorted) scratch[f] = (f == e) ? Owner::Client : Owner::Waiter;
            double val = family_.potential_alive(scratch, x);
            for (EdgeId f : sorted) scratch[f] = Owner::Free;
            if (first || val < best_val) {
                best = e;
                best_val = val;
                first = false;
            }
        }
        return best;
    }
    std::unique_ptr<ClientStrategy> clone() const override {
        return std::make_unique<PotentialAvoidClient>(*this);
    }
    bool stateless() const override { return true; }

private:
    Family family_;
    int q_;
};

class PotentialTransversalClient : public ClientStrategy {
public:
    PotentialTransversalClient(Family f, int q) : family_(std::move(f)), q_(q) {}
    EdgeId pick(const GameState& s, const std::vector<EdgeId>& offer) override {
        double x = std::exp(-1.0 / (q_ + 1));
        OwnershipVec scratch = s.ownership();
        EdgeId best = offer.front();
        double best_val = 0;
        bool first = true;
        std::vector<EdgeId> sorted = offer;
        std::sort(sorted.begin(), sorted.end());
        for (EdgeId e : sorted) {
            for (EdgeId f : sorted) scratch[f] = (f == e) ? Owner::Client : Owner::Waiter;
            double val = family_.potential_unhit(scratch, x);
            for (EdgeId f : sorted) scratch[f] = Owner::Free;
            if (first || val < best_val) {
                best = e;
                best_val = val;
                first = false;
            }
        }
        return best;
    }
    std::unique_ptr<ClientStrategy> clone() const override {
        return std::make_unique<PotentialTransversalClient>(*this);
    }
    bool stateless() const override { return true; }

private:
    Family family_;
    int q_;
};

class GreedyClient : public ClientStrategy {
public:
    enum class Mode { Star, Component, Path, Triangle };
    explicit GreedyClient(Mode m) : mode_(m) {}

    EdgeId pick(const GameState& s, const std::vector<EdgeId>& offer) override {
        EdgeId best = offer.front();
        long long best_score = -1;
        std::vector<EdgeId> sorted = offer;
        std::sort(sorted.begin(), sorted.end());
        for (EdgeId e : sorted) {
            long long sc = score(s, e);
            if (sc > best_score) {
                best_score = sc;
                best = e;
            }
        }
        return best;
    }
    std::unique_ptr<ClientStrategy> clone() const override {
        return std::make_unique<GreedyClient>(*this);
    }
    bool stateless() const override { return true; }

private:
    long long score(const GameState& s, EdgeId e) const {
        const Graph& b = s.board();
        Vertex u = b.edge(e).u, v = b.edge(e).v;
        auto cdeg = [&](Vertex x) {
            int d = 0;
            for (EdgeId f : b.incident(x))
                if (s.owner(f) == Owner::Client) ++d;
            return d;
        };
        switch (mode_) {
            case Mode::Star:
                return std::max(cdeg(u), cdeg(v)) * 100 + cdeg(u) + cdeg(v);
            case Mode::Component: {
                // size of the merged client component
                std::vector<int> par(b.vertex_count());
                for (int i = 0; i < b.vertex_count(); ++i) par[i] = i;
                std::function<int(int)> find = [&](int x) {
                    while (par[x] != x) x = par[x] = par[par[x]];
                    return x;
                };
                for (EdgeId f = 0; f < b.edge_count(); ++f)
                    if (s.owner(f) == Owner::Client) par[find(b.edge(f).u)] = find(b.edge(f).v);
                std::vector<int> size(b.vertex_count(), 0);
                for (int i = 0; i < b.vertex_count(); ++i) ++size[find(i)];
                int ru = find(u), rv = find(v);
                return ru == rv ? size[ru] : size[ru] + size[rv];
            }
            case Mode::Path: {
                int du = cdeg(u), dv = cdeg(v);
                // extending path ends beats making hubs
                return (du <= 1 ? 50 : -10 * du) + (dv <= 1 ? 50 : -10 * dv) + (du + dv > 0 ? 5 : 0);
            }
            case Mode::Triangle: {
                long long sc = 0;
                for (Vertex w = 0; w < b.vertex_count(); ++w) {
                    if (w == u || w == v) continue;
                    EdgeId uw = b.edge_id(u, w), vw = b.edge_id(v, w);
                    if (uw < 0 || vw < 0) continue;
                    bool cu = s.owner(uw) == Owner::Client, cv = s.owner(vw) == Owner::Client;
                    bool fu = s.owner(uw) == Owner::Free, fv = s.owner(vw) == Owner::Free;
                    if (cu && cv) sc += 1'000'000;
                    else if ((cu && fv) || (cv && fu)) sc += 1'000;
                    else if (fu && fv) sc += 1;
                }
                return sc;
            }
        }
        return 0;
    }

    Mode mode_;
};

class SolverClient : public ClientStrategy {
public:
    explicit SolverClient(SolveOptions opts) : opts_(opts) {}
    EdgeId pick(const GameState& s, const std::vector<EdgeId>& offer) override {
        if (!solver_)
            solver_ = std::make_shared<Solver>(s.board(), s.goal(), s.q(), s.variant(), opts_);
        OwnershipVec scratch = s.ownership();
        EdgeId fallback = offer.front();
        for (EdgeId e : offer) {
            for (EdgeId f : offer) scratch[f] = (f == e) ? Owner::Client : Owner::Waiter;
            Player w = solver_->solve_from(scratch);
            for (EdgeId f : offer) scratch[f] = Owner::Free;
            if (w == Player::Client) return e;
        }
        return fallback;
    }
    std::unique_ptr<ClientStrategy> clone() const override {
        return std::make_unique<SolverClient>(*this);
    }
    bool stateless() const override { return true; }

private:
    SolveOptions opts_;
    std::shared_ptr<Solver> solver_;
};

}  // namespace

std::unique_ptr<WaiterStrategy> waiter_random(uint64_t seed) {
    return std::make_unique<RandomWaiter>(seed);
}
std::unique_ptr<WaiterStrategy> waiter_greedy_blocker() {
    return std::make_unique<GreedyBlockerWaiter>();
}
std::unique_ptr<WaiterStrategy> waiter_anti_quota(std::vector<std::vector<EdgeId>> groups,
                                                  uint64_t seed) {
    return std::make_unique<AntiQuotaWaiter>(std::move(groups), seed);
}
std::unique_ptr<WaiterStrategy> waiter_solver(SolveOptions opts) {
    return std::make_unique<SolverWaiter>(opts);
}

std::unique_ptr<ClientStrategy> client_random(uint64_t seed) {
    return std::make_unique<RandomClient>(seed);
}

MarkedRandomClient::MarkedRandomClient(int q, uint64_t seed) : q_(q), seed_(seed), rng_(seed) {}

EdgeId MarkedRandomClient::pick(const GameState& s, const std::vector<EdgeId>& offer) {
    EdgeId e = offer[rng_.uniform_int(static_cast<int>(offer.size()))];
    double alpha = static_cast<double>(offer.size()) / (q_ + 1);
    if (rng_.bernoulli(alpha)) marked_.push_back(e);
    return e;
}

std::unique_ptr<ClientStrategy> MarkedRandomClient::clone() const {
    return std::make_unique<MarkedRandomClient>(*this);
}

std::unique_ptr<MarkedRandomClient> client_random_subset(int q, uint64_t seed) {
    return std::make_unique<MarkedRandomClient>(q, seed);
}

std::unique_ptr<ClientStrategy> client_avoid_potential(Family family, int q) {
    if (!family.supports_potentials())
        throw UsageError("avoid strategy needs a potential-capable family");
    return std::make_unique<PotentialAvoidClient>(std::move(family), q);
}

std::unique_ptr<ClientStrategy> client_transversal_potential(Family family, int q) {
    if (!family.supports_potentials())
        throw UsageError("transversal strategy needs a potential-capable family");
    return std::make_unique<PotentialTransversalClient>(std::move(family), q);
}

std::unique_ptr<ClientStrategy> client_greedy_star() {
    return std::make_unique<GreedyClient>(GreedyClient::Mode::Star);
}
std::unique_ptr<ClientStrategy> client_greedy_component() {
    return std::make_unique<GreedyClient>(GreedyClient::Mode::Component);
}
std::unique_ptr<ClientStrategy> client_greedy_path() {
    return std::make_unique<GreedyClient>(GreedyClient::Mode::Path);
}
std::unique_ptr<ClientStrategy> client_greedy_triangle() {
    return std::make_unique<GreedyClient>(GreedyClient::Mode::Triangle);
}
std::unique_ptr<ClientStrategy> client_solver(SolveOptions opts) {
    return std::make_unique<SolverClient>(opts);
}

}  // namespace cwg
