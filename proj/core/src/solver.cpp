#include "cwg/solver.hpp"

#include <algorithm>
#include <set>

#include "cwg/canon.hpp"

namespace cwg {

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k > n || k < 0) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        fn(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace

Solver::Solver(Graph board, Goal goal, int q, Variant variant, SolveOptions opts)
    : board_(std::move(board)), goal_(std::move(goal)), q_(q), variant_(variant), opts_(opts) {
    if (board_.edge_count() > opts_.max_edges)
        throw BudgetExceededError("solver: board exceeds edge budget");
    goal_.validate(board_);
    structures_ = goal_.winning_structures(board_);
    structures_of_edge_.assign(board_.edge_count(), {});
    for (size_t i = 0; i < structures_.size(); ++i)
        for (EdgeId e : structures_[i]) structures_of_edge_[e].push_back(static_cast<int>(i));
}

Solver::Status Solver::quick_status(const OwnershipVec& owner) const {
    if (!structures_.empty()) {
        bool someone_alive = false;
        for (const auto& s : structures_) {
            bool alive = true, complete = true;
            for (EdgeId e : s) {
                if (owner[e] == Owner::Waiter) {
                    alive = false;
                    complete = false;
                    break;
                }
                if (owner[e] != Owner::Client) complete = false;
            }
            if (complete) return Status::ClientWin;
            if (alive) someone_alive = true;
        }
        return someone_alive ? Status::Open : Status::WaiterWin;
    }
    if (goal_.achieved(board_, owner, false)) return Status::ClientWin;
    if (!goal_.achieved(board_, owner, true)) return Status::WaiterWin;
    return Status::Open;
}

uint64_t Solver::pack(const OwnershipVec& owner) const {
    uint64_t key = 0;
    for (size_t e = 0; e < owner.size(); ++e)
        key |= static_cast<uint64_t>(owner[e]) << (2 * e);
    return key;
}

std::string Solver::memo_key(const OwnershipVec& owner) const {
    if (opts_.canonicalize) return canonical_ownership_key(board_, owner);
    uint64_t k = pack(owner);
    return std::string(reinterpret_cast<const char*>(&k), sizeof(k));
}

std::vector<std::vector<EdgeId>> Solver::candidate_offers(const OwnershipVec& owner) const {
    std::vector<EdgeId> relevant, dead;
    bool prune = opts_.pruning && !structures_.empty();
    for (EdgeId e = 0; e < board_.edge_count(); ++e) {
        if (owner[e] != Owner::Free) continue;
        if (!prune) {
            relevant.push_back(e);
            continue;
        }
        bool live = false;
        for (int si : structures_of_edge_[e]) {
            bool alive = true;
            for (EdgeId f : structures_[si])
                if (owner[f] == Owner::Waiter) {
                    alive = false;
                    break;
                }
            if (alive) {
                live = true;
                break;
            }
        }
        (live ? relevant : dead).push_back(e);
    }

    std::vector<std::vector<EdgeId>> offers;
    if (variant_ == Variant::ClientWaiter) {
        int cap = std::min<int>(q_ + 1, static_cast<int>(relevant.size()));
        for (int sz = 1; sz <= cap; ++sz) {
            combinations(static_cast<int>(relevant.size()), sz, [&](const std::vector<int>& c) {
                std::vector<EdgeId> o;
                o.reserve(sz);
                for (int i : c) o.push_back(relevant[i]);
                offers.push_back(std::move(o));
            });
        }
        if (!dead.empty()) offers.push_back({dead[0]});  // stalling move
    } else {
        int want = q_ + 1;
        for (int r = 0; r <= std::min<int>(want, static_cast<int>(relevant.size())); ++r) {
            int padding = want - r;
            if (padding > static_cast<int>(dead.size())) continue;
            combinations(static_cast<int>(relevant.size()), r, [&](const std::vector<int>& c) {
                std::vector<EdgeId> o;
                o.reserve(want);
                for (int i : c) o.push_back(relevant[i]);
                for (int i = 0; i < padding; ++i) o.push_back(dead[i]);
                offers.push_back(std::move(o));
            });
        }
    }

    if (!structures_.empty()) {
        // try offers that touch many live structures first
        std::vector<int> weight(board_.edge_count(), 0);
        for (EdgeId e = 0; e < board_.edge_count(); ++e) {
            for (int si : structures_of_edge_[e]) {
                bool alive = true;
                int free_left = 0;
                for (EdgeId f : structures_[si]) {
                    if (owner[f] == Owner::Waiter) {
                        alive = false;
                        break;
                    }
                    if (owner[f] == Owner::Free) ++free_left;
                }
                if (alive) weight[e] += free_left <= 2 ? 4 : 1;
            }
        }
        std::stable_sort(offers.begin(), offers.end(), [&](const auto& a, const auto& b) {
            long long wa = 0, wb = 0;
            for (EdgeId e : a) wa += weight[e];
            for (EdgeId e : b) wb += weight[e];
            return wa > wb;
        });
    }
    return offers;
}

Player Solver::value(OwnershipVec& owner) {
    ++stats_.nodes;
    if (opts_.node_budget > 0 && stats_.nodes > opts_.node_budget)
        throw BudgetExceededError("solver: node budget exhausted");

    Status st = quick_status(owner);
    if (st == Status::ClientWin)
        return variant_ == Variant::ClientWaiter ? Player::Client : Player::Waiter;
    if (st == Status::WaiterWin)
        return variant_ == Variant::ClientWaiter ? Player::Waiter : Player::Client;

    int free = count_owner(owner, Owner::Free);
    if (variant_ == Variant::WaiterClient && free < q_ + 1) {
        // closing turn hands everything to Waiter, Client's graph is final
        return Player::Client;  // status was Open, so the goal is not achieved
    }

    std::string key = memo_key(owner);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
        ++stats_.memo_hits;
        return static_cast<Player>(it->second);
    }

    Player mover_wins = Player::Waiter;
    Player other = Player::Client;
    Player result = other;
    for (auto& offer : candidate_offers(owner)) {
        bool all_good = true;
        for (EdgeId pick : offer) {
            for (EdgeId e : offer) owner[e] = (e == pick) ? Owner::Client : Owner::Waiter;
            Player sub = value(owner);
            for (EdgeId e : offer) owner[e] = Owner::Free;
            if (sub != mover_wins) {
                all_good = false;
                break;
            }
        }
        if (all_good) {
            result = mover_wins;
            break;
        }
    }
    memo_[key] = static_cast<int8_t>(result);
    return result;
}

Player Solver::solve() {
    OwnershipVec owner(board_.edge_count(), Owner::Free);
    return solve_from(owner);
}

Player Solver::solve_from(const OwnershipVec& owner) {
    OwnershipVec scratch = owner;
    return value(scratch);
}

std::vector<EdgeId> Solver::best_offer(const OwnershipVec& owner) {
    OwnershipVec scratch = owner;
    auto offers = candidate_offers(owner);
    if (offers.empty()) throw InternalError("best_offer: no legal offer");
    for (auto& offer : offers) {
        bool all_good = true;
        for (EdgeId pick : offer) {
            for (EdgeId e : offer) scratch[e] = (e == pick) ? Owner::Client : Owner::Waiter;
            Player sub = value(scratch);
            for (EdgeId e : offer) scratch[e] = Owner::Free;
            if (sub != Player::Waiter) {
                all_good = false;
                break;
            }
        }
        if (all_good) return offer;
    }
    return offers.front();
}

std::vector<std::pair<std::string, std::vector<EdgeId>>> Solver::policy_dump(size_t cap) {
    std::vector<std::pair<std::string, std::vector<EdgeId>>> out;
    std::vector<OwnershipVec> frontier{OwnershipVec(board_.edge_count(), Owner::Free)};
    std::set<std::string> seen;
    auto owner_string = [](const OwnershipVec& o) {
        std::string s;
        for (Owner x : o) s += x == Owner::Free ? 'f' : (x == Owner::Client ? 'c' : 'w');
        return s;
    };
    while (!frontier.empty() && out.size() < cap) {
        OwnershipVec owner = frontier.back();
        frontier.pop_back();
        std::string key = owner_string(owner);
        if (!seen.insert(key).second) continue;
        if (quick_status(owner) != Status::Open) continue;
        int free = count_owner(owner, Owner::Free);
        if (free == 0) continue;
        if (variant_ == Variant::WaiterClient && free < q_ + 1) continue;
        if (solve_from(owner) != Player::Waiter) continue;
        auto offer = best_offer(owner);
        out.emplace_back(key, offer);
        for (EdgeId pick : offer) {
            OwnershipVec next = owner;
            for (EdgeId e : offer) next[e] = (e == pick) ? Owner::Client : Owner::Waiter;
            frontier.push_back(std::move(next));
        }
    }
    return out;
}

Player naive_solve(const Graph& board, const Goal& goal, int q, Variant variant, int max_edges) {
    if (board.edge_count() > max_edges)
        throw BudgetExceededError("naive_solve: board exceeds edge budget");
    OwnershipVec owner(board.edge_count(), Owner::Free);

    std::function<Player(OwnershipVec&)> go = [&](OwnershipVec& o) -> Player {
        std::vector<EdgeId> free = edges_of(o, Owner::Free);
        if (free.empty()) {
            bool got = goal.achieved(board, o, false);
            if (variant == Variant::ClientWaiter) return got ? Player::Client : Player::Waiter;
            return got ? Player::Waiter : Player::Client;
        }
        if (variant == Variant::WaiterClient && static_cast<int>(free.size()) < q + 1) {
            for (EdgeId e : free) o[e] = Owner::Waiter;
            bool got = goal.achieved(board, o, false);
            for (EdgeId e : free) o[e] = Owner::Free;
            return got ? Player::Waiter : Player::Client;
        }
        int lo = variant == Variant::ClientWaiter ? 1 : q + 1;
        int hi = std::min<int>(q + 1, static_cast<int>(free.size()));
        for (int sz = lo; sz <= hi; ++sz) {
            bool waiter_wins_offer = false;
            std::vector<int> idx(sz);
            for (int i = 0; i < sz; ++i) idx[i] = i;
            while (true) {
                bool all_good = true;
                for (int pi = 0; pi < sz; ++pi) {
                    for (int i = 0; i < sz; ++i)
                        o[free[idx[i]]] = (i == pi) ? Owner::Client : Owner::Waiter;
                    Player sub = go(o);
                    for (int i = 0; i < sz; ++i) o[free[idx[i]]] = Owner::Free;
                    if (sub != Player::Waiter) {
                        all_good = false;
                        break;
                    }
                }
                if (all_good) {
                    waiter_wins_offer = true;
                    break;
                }
                int i = sz - 1;
                while (i >= 0 && idx[i] == static_cast<int>(free.size()) - sz + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
            }
            if (waiter_wins_offer) return Player::Waiter;
        }
        return Player::Client;
    };
    return go(owner);
}

BiasScanResult critical_bias(const Graph& board, const Goal& goal, Variant variant, int q_max,
                             SolveOptions opts) {
    BiasScanResult res;
    for (int q = 1; q <= q_max; ++q) {
        Solver s(board, goal, q, variant, opts);
        res.winners.push_back(s.solve());
    }
    Player favored = variant == Variant::ClientWaiter ? Player::Client : Player::Waiter;
    bool flipped = false;
    for (size_t i = 0; i < res.winners.size(); ++i) {
        if (res.winners[i] == favored) {
            if (flipped)
                throw InternalError("critical_bias: outcomes not monotone in q");
            res.found = true;
            res.q_c = static_cast<int>(i) + 1;
        } else {
            flipped = true;
        }
    }
    return res;
}

namespace {

struct WaiterVerifier {
    const RecordPredicate& contract;
    VerifyResult result;

    void walk(const GameState& state, WaiterStrategy& strat) {
        if (!result.verified) return;
        if (state.finished()) {
            finish(state);
            return;
        }
        if (state.variant() == Variant::WaiterClient && state.free_count() < state.q() + 1) {
            finish(step(state, state.free_edges(), kNoPick));
            return;
        }
        std::vector<EdgeId> offer = strat.offer(state);
        for (EdgeId pick : offer) {
            auto fork = strat.clone();
            walk(step(state, offer, pick), *fork);
            if (!result.verified) return;
        }
    }

    void finish(const GameState& state) {
        ++result.branches;
        GameRecord rec;
        rec.final_state = state;
        rec.winner = winner_of(state);
        if (!contract(rec)) {
            result.verified = false;
            result.counterexample = serialize_record(rec);
        }
    }
};

struct ClientVerifier {
    const RecordPredicate& contract;
    bool use_memo;
    std::unordered_map<uint64_t, bool> memo;
    VerifyResult result;

    static uint64_t pack(const OwnershipVec& o) {
        uint64_t key = 0;
        for (size_t e = 0; e < o.size(); ++e) key |= static_cast<uint64_t>(o[e]) << (2 * e);
        return key;
    }

    bool walk(const GameState& state, ClientStrategy& strat) {
        if (!result.verified) return false;
        if (state.finished()) return finish(state);
        if (state.variant() == Variant::WaiterClient && state.free_count() < state.q() + 1)
            return finish(step(state, state.free_edges(), kNoPick));

        uint64_t key = 0;
        if (use_memo) {
            key = pack(state.ownership());
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        std::vector<EdgeId> free = state.free_edges();
        int lo = state.variant() == Variant::ClientWaiter ? 1 : state.q() + 1;
        int hi = std::min<int>(state.q() + 1, static_cast<int>(free.size()));
        bool ok = true;
        for (int sz = lo; sz <= hi && ok; ++sz) {
            combinations(static_cast<int>(free.size()), sz, [&](const std::vector<int>& c) {
                if (!ok || !result.verified) return;
                std::vector<EdgeId> offer;
                offer.reserve(sz);
                for (int i : c) offer.push_back(free[i]);
                auto fork = strat.clone();
                EdgeId pick = fork->pick(state, offer);
                if (!walk(step(state, offer, pick), *fork)) ok = false;
            });
        }
        if (use_memo && result.verified) memo[key] = ok;
        return ok;
    }

    bool finish(const GameState& state) {
        ++result.branches;
        GameRecord rec;
        rec.final_state = state;
        rec.winner = winner_of(state);
        if (!contract(rec)) {
            result.verified = false;
            result.counterexample = serialize_record(rec);
            return false;
        }
        return true;
    }
};

}  // namespace

VerifyResult verify_waiter_strategy(const GameState& start, const WaiterStrategy& proto,
                                    const RecordPredicate& contract, int max_edges) {
    if (start.board().edge_count() > max_edges)
        throw BudgetExceededError("verify_waiter_strategy: board exceeds edge budget");
    WaiterVerifier v{contract, {}};
    auto strat = proto.clone();
    v.walk(start, *strat);
    return v.result;
}

VerifyResult verify_client_strategy(const GameState& start, const ClientStrategy& proto,
                                    const RecordPredicate& contract, int max_edges) {
    if (start.board().edge_count() > max_edges)
        throw BudgetExceededError("verify_client_strategy: board exceeds edge budget");
    ClientVerifier v{contract, proto.stateless(), {}, {}};
    auto strat = proto.clone();
    v.walk(start, *strat);
    return v.result;
}

RecordPredicate wins_as(Player side) {
    return [side](const GameRecord& rec) { return rec.winner == side; };
}

}  // namespace cwg
