#pragma once

#include <memory>
#include <string>

#include "cwg/game.hpp"

namespace cwg {

struct DispatchResult {
    std::unique_ptr<WaiterStrategy> strategy;  // null when no case applies
    std::string route;                         // case taken, or the reason nothing fired
    bool applicable() const { return strategy != nullptr; }
};

/// Case analysis on the pattern's maximum 2-density routing to the
/// low-degree-peeling, orientation, or forest-pair strategy. The pattern must
/// be strictly 2-balanced, not a forest, and not a triangle. Returns a null
/// strategy (never throws) when no case's premises hold on this board;
/// callers fall back to the solver.
DispatchResult waiter_dispatch(const Graph& board, const Graph& pattern, int q);

}  // namespace cwg
