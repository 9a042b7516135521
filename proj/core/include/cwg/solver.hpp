#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwg/game.hpp"

namespace cwg {

struct SolveOptions {
    int max_edges = 16;
    bool pruning = true;        // restrict Waiter offers to goal-relevant edges
    bool canonicalize = false;  // isomorphism-aware memo keys (small boards)
    long long node_budget = -1; // -1 = unlimited
};

struct SolveStats {
    long long nodes = 0;
    long long memo_hits = 0;
};

/// Exact game-tree evaluation under perfect play. Positions are keyed by per
/// edge ownership only; move order never matters. Early exits reuse the
/// engine's monotone-goal cutoffs.
class Solver {
public:
    Solver(Graph board, Goal goal, int q, Variant variant, SolveOptions opts = {});

    Player solve();
    Player solve_from(const OwnershipVec& owner);

    /// A winning offer at this position when the mover (Waiter) wins;
    /// otherwise a least-resistance legal offer.
    std::vector<EdgeId> best_offer(const OwnershipVec& owner);

    const SolveStats& stats() const { return stats_; }
    const Graph& board() const { return board_; }
    int q() const { return q_; }
    Variant variant() const { return variant_; }

    /// Text move table: ownership string (f/c/w per edge) -> winning offer,
    /// breadth-first from the start position, capped.
    std::vector<std::pair<std::string, std::vector<EdgeId>>> policy_dump(size_t cap = 2000);

private:
    enum class Status { ClientWin, WaiterWin, Open };

    Status quick_status(const OwnershipVec& owner) const;
    Player value(OwnershipVec& owner);
    std::vector<std::vector<EdgeId>> candidate_offers(const OwnershipVec& owner) const;
    uint64_t pack(const OwnershipVec& owner) const;
    std::string memo_key(const OwnershipVec& owner) const;

    Graph board_;
    Goal goal_;
    int q_;
    Variant variant_;
    SolveOptions opts_;
    SolveStats stats_;
    std::vector<std::vector<EdgeId>> structures_;       // minimal winning sets, may be empty
    std::vector<std::vector<int>> structures_of_edge_;  // edge -> structure indices
    std::unordered_map<std::string, int8_t> memo_;
};

/// Second, independent implementation: plain recursion, no memo, no pruning,
/// evaluation only at exhausted boards.
Player naive_solve(const Graph& board, const Goal& goal, int q, Variant variant,
                   int max_edges = 10);

struct BiasScanResult {
    bool found = false;
    int q_c = 0;
    std::vector<Player> winners;  // index 0 <-> q=1
};

/// Critical bias: the largest q <= q_max at which the favored side (Client in
/// Client-Waiter, Waiter in Waiter-Client) still wins. The whole sweep is
/// solved and checked for the single-flip shape; a non-monotone sweep raises.
BiasScanResult critical_bias(const Graph& board, const Goal& goal, Variant variant, int q_max,
                             SolveOptions opts = {});

struct VerifyResult {
    bool verified = true;
    long long branches = 0;
    std::string counterexample;  // serialized record of a failing line
};

using RecordPredicate = std::function<bool(const GameRecord&)>;

/// Exhaustive adversary traversal against a deterministic Waiter strategy:
/// every Client reply sequence is explored (strategy state forked via
/// clone()), and the contract predicate must hold on every leaf.
VerifyResult verify_waiter_strategy(const GameState& start, const WaiterStrategy& proto,
                                    const RecordPredicate& contract, int max_edges = 16);

/// Exhaustive Waiter traversal against a deterministic Client strategy.
/// Stateless strategies get ownership-level memoization.
VerifyResult verify_client_strategy(const GameState& start, const ClientStrategy& proto,
                                    const RecordPredicate& contract, int max_edges = 16);

/// Contract: the favored side of the variant wins the game record.
RecordPredicate wins_as(Player side);

}  // namespace cwg
