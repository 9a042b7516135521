#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cwg/family.hpp"
#include "cwg/graph.hpp"
#include "cwg/ownership.hpp"

namespace cwg {

enum class Variant : uint8_t { ClientWaiter, WaiterClient };
enum class Player : uint8_t { Client, Waiter };

inline const char* to_string(Player p) { return p == Player::Client ? "Client" : "Waiter"; }

constexpr EdgeId kNoPick = -1;

/// Monotone increasing target property, always read from Client's side.
class GoalBase {
public:
    virtual ~GoalBase() = default;

    virtual void validate(const Graph& board) const {}

    /// Does the property hold on Client's edges? With include_free, free
    /// edges are counted as Client's (upper bound for early termination).
    virtual bool achieved(const Graph& board, const OwnershipVec& owner,
                          bool include_free) const = 0;

    /// Minimal winning edge sets when enumerable (pattern copies, family
    /// members); empty when the goal has no such representation.
    virtual std::vector<std::vector<EdgeId>> winning_structures(const Graph& board) const {
        return {};
    }

    virtual std::string describe() const = 0;
};

class Goal {
public:
    Goal() = default;
    explicit Goal(std::shared_ptr<const GoalBase> impl) : impl_(std::move(impl)) {}

    static Goal contains_copy(Graph pattern);
    static Goal contains_cycle();
    static Goal component_at_least(int vertices);
    static Goal path_at_least(int edges);
    static Goal max_degree_at_least(int degree);
    static Goal out_edge_quota(int quota, std::vector<std::pair<Vertex, std::vector<EdgeId>>> groups);
    static Goal cut_quota(std::vector<std::pair<std::vector<std::pair<Vertex, Vertex>>, int>> quotas);
    static Goal explicit_family(Family f);
    static Goal transversal(Family f);

    bool valid() const { return impl_ != nullptr; }
    const GoalBase& base() const { return *impl_; }
    void validate(const Graph& board) const { impl_->validate(board); }
    bool achieved(const Graph& board, const OwnershipVec& o, bool include_free = false) const {
        return impl_->achieved(board, o, include_free);
    }
    std::vector<std::vector<EdgeId>> winning_structures(const Graph& board) const {
        return impl_->winning_structures(board);
    }
    std::string describe() const { return impl_->describe(); }

private:
    std::shared_ptr<const GoalBase> impl_;
};

/// evaluate() from the spec surface: does the goal hold on this graph (taken
/// as Client's graph)? The graph's own edges are treated as Client edges.
bool evaluate(const Goal& goal, const Graph& client_graph);

struct Turn {
    std::vector<EdgeId> offer;
    EdgeId pick = kNoPick;  // kNoPick marks the Waiter-takes-all closing turn
};

class GameState {
public:
    GameState() = default;
    GameState(std::shared_ptr<const Graph> board, Goal goal, int q, Variant variant);

    const Graph& board() const { return *board_; }
    std::shared_ptr<const Graph> board_ptr() const { return board_; }
    const Goal& goal() const { return goal_; }
    int q() const { return q_; }
    Variant variant() const { return variant_; }

    Owner owner(EdgeId e) const { return owner_[e]; }
    const OwnershipVec& ownership() const { return owner_; }
    int free_count() const { return free_; }
    int client_count() const { return client_; }
    int waiter_count() const { return waiter_; }
    std::vector<EdgeId> free_edges() const { return edges_of(owner_, Owner::Free); }
    std::vector<EdgeId> client_edges() const { return edges_of(owner_, Owner::Client); }
    bool finished() const { return free_ == 0; }

    /// Client's edges as a spanning subgraph of the board.
    Graph client_graph() const;

    const std::vector<Turn>& history() const { return history_; }

    /// Free edges between two vertex sets (paper-style e_F(A,B) queries).
    int free_between(const std::vector<Vertex>& a, const std::vector<Vertex>& b) const;

private:
    friend GameState step(const GameState&, const std::vector<EdgeId>&, EdgeId);

    std::shared_ptr<const Graph> board_;
    Goal goal_;
    int q_ = 1;
    Variant variant_ = Variant::ClientWaiter;
    OwnershipVec owner_;
    int free_ = 0, client_ = 0, waiter_ = 0;
    std::vector<Turn> history_;
};

GameState new_game(std::shared_ptr<const Graph> board, Goal goal, int q, Variant variant);
GameState new_game(const Graph& board, Goal goal, int q, Variant variant);

/// Applies one turn. Offer must be free edges of legal size for the variant;
/// pick must be inside the offer (or kNoPick for the Waiter-takes-all turn in
/// Waiter-Client games when fewer than q+1 edges remain).
GameState step(const GameState& state, const std::vector<EdgeId>& offer, EdgeId pick);

class WaiterStrategy {
public:
    virtual ~WaiterStrategy() = default;
    virtual std::vector<EdgeId> offer(const GameState& state) = 0;
    virtual std::string annotation() const { return {}; }
    virtual std::unique_ptr<WaiterStrategy> clone() const = 0;
    /// True when moves depend only on the visible ownership state.
    virtual bool stateless() const { return false; }
};

class ClientStrategy {
public:
    virtual ~ClientStrategy() = default;
    virtual EdgeId pick(const GameState& state, const std::vector<EdgeId>& offer) = 0;
    virtual std::unique_ptr<ClientStrategy> clone() const = 0;
    virtual bool stateless() const { return false; }
};

struct GameRecord {
    GameState final_state;
    Player winner = Player::Waiter;
    std::vector<std::string> annotations;  // one per turn when recorded
};

struct PlayOptions {
    bool early_stop = true;
    bool record_annotations = false;
};

/// Drives a full game. Early termination fires when the goal is already
/// achieved or cannot be achieved even with every free edge; both exits are
/// sound for monotone goals. Illegal strategy moves raise, they are never
/// converted to forfeits.
GameRecord play(const GameState& start, WaiterStrategy& waiter, ClientStrategy& client,
                const PlayOptions& opts = {});

Player winner_of(const GameState& finished_or_stopped);

/// Line-oriented trace: "OFFER e1,e2,... PICK e" per turn and a terminal
/// "WAITER_TAKES e1,..." for the closing Waiter-Client turn.
std::string serialize_record(const GameRecord& rec);
GameRecord replay_record(const GameState& start, const std::string& text);

}  // namespace cwg
