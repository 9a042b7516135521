#include "cwg/game.hpp"

#include <algorithm>
#include <sstream>

#include "cwg/paths.hpp"
#include "cwg/subgraph_iso.hpp"

namespace cwg {

namespace {

Graph side_graph(const Graph& board, const OwnershipVec& o, bool include_free) {
    Graph g(board.vertex_count());
    for (EdgeId e = 0; e < board.edge_count(); ++e)
        if (o[e] == Owner::Client || (include_free && o[e] == Owner::Free))
            g.add_edge(board.edge(e).u, board.edge(e).v);
    return g;
}

class ContainsCopyGoal : public GoalBase {
public:
    explicit ContainsCopyGoal(Graph h) : h_(std::move(h)) {
        if (h_.edge_count() == 0) throw UsageError("goal pattern must have edges");
    }
    bool achieved(const Graph& board, const OwnershipVec& o, bool f) const override {
        return contains_copy(side_graph(board, o, f), h_);
    }
    std::vector<std::vector<EdgeId>> winning_structures(const Graph& board) const override {
        return find_copies(board, h_);
    }
    std::string describe() const override {
        return "copy(v=" + std::to_string(h_.vertex_count()) +
               ",e=" + std::to_string(h_.edge_count()) + ")";
    }

private:
    Graph h_;
};

class ContainsCycleGoal : public GoalBase {
public:
    bool achieved(const Graph& board, const OwnershipVec& o, bool f) const override {
        std::vector<EdgeId> edges;
        for (EdgeId e = 0; e < board.edge_count(); ++e)
            if (o[e] == Owner::Client || (f && o[e] == Owner::Free)) edges.push_back(e);
        return edges_contain_cycle(board, edges);
    }
    std::string describe() const override { return "cycle"; }
};

class ComponentGoal : public GoalBase {
public:
    explicit ComponentGoal(int s) : s_(s) {
        if (s < 1) throw UsageError("component goal needs a positive size");
    }
    bool achieved(const Graph& board, const OwnershipVec& o, bool f) const override {
        if (s_ <= 1) return board.vertex_count() >= 1;
        Graph g = side_graph(board, o, f);
        for (auto& comp : connected_components(g))
            if (static_cast<int>(comp.size()) >= s_) return true;
        return false;
    }
    std::string describe() const override { return "component>=" + std::to_string(s_); }

private:
    int s_;
};

class PathGoal : public GoalBase {
public:
    explicit PathGoal(int len) : len_(len) {
        if (len < 1) throw UsageError("path goal needs a positive length");
    }
    bool achieved(const Graph& board, const OwnershipVec& o, bool f) const override {
        return has_path_of_length(side_graph(board, o, f), len_);
    }
    std::string describe() const override { return "path>=" + std::to_string(len_); }

private:
    int len_;
};

class MaxDegreeGoal : public GoalBase {
public:
    explicit MaxDegreeGoal(int d) : d_(d) {
        if (d < 1) throw UsageError("degree goal needs a positive degree");
    }
    bool achieved(const Graph& board, const OwnershipVec& o, bool f) const override {
        std::vector<int> deg(board.vertex_count(), 0);
        for (EdgeId e = 0; e < board.edge_count(); ++e) {
            if (o[e] == Owner::Client || (f && o[e] == Owner::Free)) {
                if (++deg[board.edge(e).u] >= d_ || ++deg[board.edge(e).v] >= d_) return true;
            }
        }
        return d_ <= 0;
    }
    std::string describe() const override { return "maxdeg>=" + std::to_string(d_); }

private:
    int d_;
};

class OutEdgeQuotaGoal : public GoalBase {
public:
    OutEdgeQuotaGoal(int k, std::vector<std::pair<Vertex, std::vector<EdgeId>>> groups)
        : k_(k), groups_(std::move(groups)) {
        if (k < 1) throw UsageError("out-edge quota must be positive");
    }
    void validate(const Graph& board) const override {
        for (auto& [v, list] : groups_) {
            if (v < 0 || v >= board.vertex_count()) throw UsageError("quota vertex out of range");
            for (EdgeId e : list)
                if (e < 0 || e >= board.edge_count()) throw UsageError("quota edge out of range");
        }
    }
    bool achieved(const Graph& board, const OwnershipVec& o, bool f) const override {
        for (auto& [v, list] : groups_) {
            int got = 0;
            for (EdgeId e : list)
                if (o[e] == Owner::Client || (f && o[e] == Owner::Free)) ++got;
            if (got < k_) return false;
        }
        return true;
    }
    std::string describe() const override { return "outquota>=" + std::to_string(k_); }

private:
    int k_;
    std::vector<std::pair<Vertex, std::vector<EdgeId>>> groups_;
};

class CutQuotaGoal : public GoalBase {
public:
    explicit CutQuotaGoal(std::vector<std::pair<std::vector<std::pair<Vertex, Vertex>>, int>> qs)
        : quotas_(std::move(qs)) {
        for (auto& [pairs, c] : quotas_)
            if (c < 1) throw UsageError("cut quota must be positive");
    }
    void validate(const Graph& board) const override {
        for (auto& [pairs, c] : quotas_)
            for (auto& [u, v] : pairs)
                if (u < 0 || v < 0 || u >= board.vertex_count() || v >= board.vertex_count())
                    throw UsageError("cut quota references unknown vertices");
    }
    bool achieved(const Graph& board, const OwnershipVec& o, bool f) const override {
        for (auto& [pairs, need] : quotas_) {
            int got = 0;
            for (auto& [u, v] : pairs) {
                EdgeId e = board.edge_id(u, v);
                if (e >= 0 && (o[e] == Owner::Client || (f && o[e] == Owner::Free))) ++got;
            }
            if (got < need) return false;
        }
        return true;
    }
    std::string describe() const override { return "cutquota"; }

private:
    std::vector<std::pair<std::vector<std::pair<Vertex, Vertex>>, int>> quotas_;
};

class ExplicitFamilyGoal : public GoalBase {
public:
    explicit ExplicitFamilyGoal(Family f) : f_(std::move(f)) {}
    bool achieved(const Graph& board, const OwnershipVec& o, bool inc) const override {
        if (!inc) return f_.any_contained(o);
        OwnershipVec tmp = o;
        for (auto& x : tmp)
            if (x == Owner::Free) x = Owner::Client;
        return f_.any_contained(tmp);
    }
    std::vector<std::vector<EdgeId>> winning_structures(const Graph&) const override {
        if (auto* m = f_.members()) return *m;
        return {};
    }
    std::string describe() const override {
        return "family(" + std::to_string(f_.member_count()) + ")";
    }

private:
    Family f_;
};

class TransversalGoal : public GoalBase {
public:
    explicit TransversalGoal(Family f) : f_(std::move(f)) {}
    bool achieved(const Graph& board, const OwnershipVec& o, bool inc) const override {
        if (!inc) return f_.all_hit(o);
        OwnershipVec tmp = o;
        for (auto& x : tmp)
            if (x == Owner::Free) x = Owner::Client;
        return f_.all_hit(tmp);
    }
    std::string describe() const override {
        return "transversal(" + std::to_string(f_.member_count()) + ")";
    }

private:
    Family f_;
};

}  // namespace

Goal Goal::contains_copy(Graph pattern) {
    return Goal(std::make_shared<ContainsCopyGoal>(std::move(pattern)));
}
Goal Goal::contains_cycle() { return Goal(std::make_shared<ContainsCycleGoal>()); }
Goal Goal::component_at_least(int s) { return Goal(std::make_shared<ComponentGoal>(s)); }
Goal Goal::path_at_least(int l) { return Goal(std::make_shared<PathGoal>(l)); }
Goal Goal::max_degree_at_least(int d) { return Goal(std::make_shared<MaxDegreeGoal>(d)); }
Goal Goal::out_edge_quota(int k, std::vector<std::pair<Vertex, std::vector<EdgeId>>> groups) {
    return Goal(std::make_shared<OutEdgeQuotaGoal>(k, std::move(groups)));
}
Goal Goal::cut_quota(std::vector<std::pair<std::vector<std::pair<Vertex, Vertex>>, int>> quotas) {
    return Goal(std::make_shared<CutQuotaGoal>(std::move(quotas)));
}
Goal Goal::explicit_family(Family f) { return Goal(std::make_shared<ExplicitFamilyGoal>(std::move(f))); }
Goal Goal::transversal(Family f) { return Goal(std::make_shared<TransversalGoal>(std::move(f))); }

bool evaluate(const Goal& goal, const Graph& client_graph) {
    OwnershipVec o(client_graph.edge_count(), Owner::Client);
    return goal.achieved(client_graph, o, false);
}

GameState::GameState(std::shared_ptr<const Graph> board, Goal goal, int q, Variant variant)
    : board_(std::move(board)), goal_(std::move(goal)), q_(q), variant_(variant) {
    if (q_ < 1) throw UsageError("bias q must be positive");
    if (!goal_.valid()) throw UsageError("goal is empty");
    goal_.validate(*board_);
    owner_.assign(board_->edge_count(), Owner::Free);
    free_ = board_->edge_count();
}

Graph GameState::client_graph() const { return side_graph(*board_, owner_, false); }

int GameState::free_between(const std::vector<Vertex>& a, const std::vector<Vertex>& b) const {
    std::vector<char> in_a(board_->vertex_count(), 0), in_b(board_->vertex_count(), 0);
    for (Vertex v : a) in_a[v] = 1;
    for (Vertex v : b) in_b[v] = 1;
    int c = 0;
    for (EdgeId e = 0; e < board_->edge_count(); ++e) {
        if (owner_[e] != Owner::Free) continue;
        Vertex u = board_->edge(e).u, v = board_->edge(e).v;
        if ((in_a[u] && in_b[v]) || (in_a[v] && in_b[u])) ++c;
    }
    return c;
}

GameState new_game(std::shared_ptr<const Graph> board, Goal goal, int q, Variant variant) {
    return GameState(std::move(board), std::move(goal), q, variant);
}

GameState new_game(const Graph& board, Goal goal, int q, Variant variant) {
    return GameState(std::make_shared<Graph>(board), std::move(goal), q, variant);
}

GameState step(const GameState& state, const std::vector<EdgeId>& offer, EdgeId pick) {
    const int q = state.q_;
    if (offer.empty()) throw IllegalOfferError("offer is empty");
    {
        std::vector<EdgeId> sorted = offer;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw IllegalOfferError("offer repeats an edge");
    }
    for (EdgeId e : offer) {
        if (e < 0 || e >= state.board_->edge_count()) throw IllegalOfferError("offer edge out of range");
        if (state.owner_[e] != Owner::Free) throw IllegalOfferError("offered edge is not free");
    }
    int sz = static_cast<int>(offer.size());
    if (state.variant_ == Variant::ClientWaiter) {
        if (sz > q + 1) throw IllegalOfferError("offer larger than q+1");
        if (pick == kNoPick) throw IllegalPickError("Client must pick in a Client-Waiter game");
    } else {
        bool terminal = state.free_ < q + 1;
        if (terminal) {
            if (sz != state.free_ || pick != kNoPick)
                throw IllegalOfferError("closing turn must hand Waiter all remaining edges");
        } else if (sz != q + 1) {
            throw IllegalOfferError("Waiter-Client offers must have exactly q+1 edges");
        }
    }
    if (pick != kNoPick && std::find(offer.begin(), offer.end(), pick) == offer.end())
        throw IllegalPickError("pick is outside the offer");

    GameState next = state;
    for (EdgeId e : offer) {
        next.owner_[e] = (e == pick) ? Owner::Client : Owner::Waiter;
        --next.free_;
        if (e == pick) ++next.client_;
        else ++next.waiter_;
    }
    next.history_.push_back({offer, pick});
    return next;
}

Player winner_of(const GameState& s) {
    bool got = s.goal().achieved(s.board(), s.ownership(), false);
    if (s.variant() == Variant::ClientWaiter) return got ? Player::Client : Player::Waiter;
    return got ? Player::Waiter : Player::Client;
}

GameRecord play(const GameState& start, WaiterStrategy& waiter, ClientStrategy& client,
                const PlayOptions& opts) {
    GameState state = start;
    GameRecord rec;
    while (!state.finished()) {
        if (opts.early_stop) {
            bool achieved = state.goal().achieved(state.board(), state.ownership(), false);
            bool reachable = achieved || state.goal().achieved(state.board(), state.ownership(), true);
            if (achieved || !reachable) break;
        }
        if (state.variant() == Variant::WaiterClient && state.free_count() < state.q() + 1) {
            state = step(state, state.free_edges(), kNoPick);
            if (opts.record_annotations) rec.annotations.push_back("waiter_takes_rest");
            break;
        }
        std::vector<EdgeId> offer = waiter.offer(state);
        EdgeId pick = client.pick(state, offer);
        state = step(state, offer, pick);
        if (opts.record_annotations) rec.annotations.push_back(waiter.annotation());
    }
    rec.final_state = state;
    rec.winner = winner_of(state);
    return rec;
}

std::string serialize_record(const GameRecord& rec) {
    std::ostringstream out;
    for (const Turn& t : rec.final_state.history()) {
        if (t.pick == kNoPick) {
            out << "WAITER_TAKES ";
            for (size_t i = 0; i < t.offer.size(); ++i)
                out << t.offer[i] << (i + 1 < t.offer.size() ? "," : "");
            out << '\n';
        } else {
            out << "OFFER ";
            for (size_t i = 0; i < t.offer.size(); ++i)
                out << t.offer[i] << (i + 1 < t.offer.size() ? "," : "");
            out << " PICK " << t.pick << '\n';
        }
    }
    return out.str();
}

GameRecord replay_record(const GameState& start, const std::string& text) {
    GameState state = start;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        auto parse_ids = [](const std::string& s) {
            std::vector<EdgeId> ids;
            std::string tok;
            std::istringstream ss(s);
            while (std::getline(ss, tok, ',')) ids.push_back(std::stoi(tok));
            return ids;
        };
        if (head == "OFFER") {
            std::string ids, pickkw;
            EdgeId pick;
            ls >> ids >> pickkw >> pick;
            if (pickkw != "PICK") throw UsageError("bad record line: " + line);
            state = step(state, parse_ids(ids), pick);
        } else if (head == "WAITER_TAKES") {
            std::string ids;
            ls >> ids;
            state = step(state, parse_ids(ids), kNoPick);
        } else {
            throw UsageError("bad record line: " + line);
        }
    }
    GameRecord rec;
    rec.final_state = state;
    rec.winner = winner_of(state);
    return rec;
}

}  // namespace cwg
