#pragma once

#include <functional>
#include <memory>
#include <set>
#include <vector>

#include "cwg/density.hpp"
#include "cwg/game.hpp"
#include "cwg/solver.hpp"

namespace cwg {

/// Named analysis parameters with their derived defaults. eps drives the
/// rest: delta = eps/(1-eps), theta = exp(-2.5/delta - 1) for the component
/// game; delta1 = exp(-3/eps - 1), delta2 = delta1^2, gamma = (eps*delta2)^2
/// for the path game; m = (k(q+1))^2 for the tree game.
struct StrategyParams {
    double eps = 0, delta = 0, delta1 = 0, delta2 = 0, theta = 0, gamma = 0, d = 0;
    int k = 0, m = 0;

    static StrategyParams component_defaults(double eps);
    static StrategyParams path_defaults(double eps);
    static StrategyParams tree_defaults(int k, int q);
    void validate() const;
};

// ---------------------------------------------------------------- Waiter ---

/// Chases Client's newest endpoint, offering up to q+1 free edges there;
/// jumps to the lowest vertex with free edges when stuck. Keeps Client's
/// maximum degree at 2*ceil((n-1)/(q+2)) on complete boards.
std::unique_ptr<WaiterStrategy> waiter_star(int q);

/// Component-limiting strategy: stage I builds a perfect matching, stage II
/// caps components at three vertices, stage III recurses on the component
/// board at a third of the bias.
class ComponentWaiter : public WaiterStrategy {
public:
    explicit ComponentWaiter(int q);
    std::vector<EdgeId> offer(const GameState& state) override;
    std::string annotation() const override { return annotation_; }
    std::unique_ptr<WaiterStrategy> clone() const override;

    struct LevelRecord {
        int board_size = 0;
        int bias = 0;
    };
    /// Realized recursion: level 0 is the input board, later entries the
    /// auxiliary boards with their biases.
    const std::vector<LevelRecord>& realized_levels() const { return levels_; }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    std::vector<LevelRecord> levels_;
    std::string annotation_;
};

std::unique_ptr<ComponentWaiter> waiter_component(int q);

/// Path-limiting strategy: stage I leaves Client a union of stars with all
/// free edges inside the star centers, then restarts on the centers at the
/// same bias.
class PathWaiter : public WaiterStrategy {
public:
    explicit PathWaiter(int q);
    std::vector<EdgeId> offer(const GameState& state) override;
    std::string annotation() const override { return annotation_; }
    std::unique_ptr<WaiterStrategy> clone() const override;

    const std::vector<int>& realized_levels() const { return level_sizes_; }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    std::vector<int> level_sizes_;
    std::string annotation_;
};

std::unique_ptr<PathWaiter> waiter_path(int q);

/// Out-degree-capped orientation play (unbiased): offers pairs of out-edges
/// per vertex, bounding Client's max density below m(pattern).
std::unique_ptr<WaiterStrategy> waiter_orientation(const Graph& board, const Graph& pattern);

using ForestPairPolicy =
    std::function<std::unique_ptr<WaiterStrategy>(const Graph& pair_board, int q)>;

/// Forest-pair play (unbiased): partitions the board into ceil(ar) forests,
/// plays consecutive pairs with a policy that keeps Client acyclic inside
/// each pair. Default policy is solver-derived.
std::unique_ptr<WaiterStrategy> waiter_forest(const Graph& board, const Graph& pattern,
                                              ForestPairPolicy policy = nullptr);

/// Triangle prevention at bias 2 on boards with max density at most 2:
/// solver bases (<=6 vertices), sparse-cut splits, and the 4-regular
/// neighborhood case analysis.
std::unique_ptr<WaiterStrategy> waiter_k3_bias2(const Graph& board);

using InnerWaiterFactory = std::function<std::unique_ptr<WaiterStrategy>(const Graph& component)>;

/// Core reduction wrapper: wins each biconnected core component with the
/// inner strategy, replays the removal steps in reverse with their recorded
/// simultaneous offers, then clears the rest in legal chunks.
std::unique_ptr<WaiterStrategy> waiter_core_reduction(const Graph& board, const Graph& pattern,
                                                      int q, InnerWaiterFactory inner = nullptr);

std::unique_ptr<WaiterStrategy> waiter_random(uint64_t seed);
/// Threat-greedy triangle blocker for large boards.
std::unique_ptr<WaiterStrategy> waiter_greedy_blocker();
/// Adversarial Waiter for quota goals: piles offers onto the group where
/// Client is weakest.
std::unique_ptr<WaiterStrategy> waiter_anti_quota(std::vector<std::vector<EdgeId>> groups,
                                                  uint64_t seed);
/// Perfect play through the exact solver (small boards).
std::unique_ptr<WaiterStrategy> waiter_solver(SolveOptions opts = {});

// ---------------------------------------------------------------- Client ---

std::unique_ptr<ClientStrategy> client_random(uint64_t seed);

/// Random pick plus random marking: each marked edge lands in the marked set
/// with overall probability 1/(q+1) per offered element.
class MarkedRandomClient : public ClientStrategy {
public:
    MarkedRandomClient(int q, uint64_t seed);
    EdgeId pick(const GameState& state, const std::vector<EdgeId>& offer) override;
    std::unique_ptr<ClientStrategy> clone() const override;
    const std::vector<EdgeId>& marked() const { return marked_; }

private:
    int q_;
    uint64_t seed_;
    Rng rng_;
    std::vector<EdgeId> marked_;
};

std::unique_ptr<MarkedRandomClient> client_random_subset(int q, uint64_t seed);

/// Avoidance play (Waiter-Client): picks the offered edge minimizing the
/// alive-set potential sum (q+1)^{-free}; never lets the potential grow on
/// full-size offers.
std::unique_ptr<ClientStrategy> client_avoid_potential(Family family, int q);

/// Transversal play (Client-Waiter): picks the offered edge minimizing the
/// unhit-set potential sum e^{-free/(q+1)}, i.e. maximizing the danger it
/// removes. Ties go to the lowest edge id.
std::unique_ptr<ClientStrategy> client_transversal_potential(Family family, int q);

std::unique_ptr<ClientStrategy> client_greedy_star();
std::unique_ptr<ClientStrategy> client_greedy_component();
std::unique_ptr<ClientStrategy> client_greedy_path();
std::unique_ptr<ClientStrategy> client_greedy_triangle();
std::unique_ptr<ClientStrategy> client_solver(SolveOptions opts = {});

}  // namespace cwg
