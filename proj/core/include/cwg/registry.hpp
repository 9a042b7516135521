#pragma once

#include <memory>
#include <string>

#include "cwg/game.hpp"

namespace cwg {

/// Board specs: K<n>, C<n>, P<n> (path on n vertices), gnp:<n>,<p>[,<seed>],
/// tree:<m>,<k>, file:<path>.
Graph board_by_spec(const std::string& spec);

/// Goal specs: pattern names (K3, K4, C4, K5-e, ...), cycle, component:<s>,
/// path:<len>, maxdeg:<d>, treequota:<k>,<m> (child-edge quota on the m-ary
/// tree board).
Goal goal_by_spec(const std::string& spec, const Graph& board);

/// Waiter keys: star, component (alias sc), path (alias sp),
/// orientation:<pattern>, forest:<pattern>, k3q2, core:<pattern>,
/// dispatch:<pattern>, solver, random, blocker, antiquota:<m>.
std::unique_ptr<WaiterStrategy> make_waiter(const std::string& key, const Graph& board, int q,
                                            uint64_t seed);

/// Client keys: random, star, component, path, triangle, marked, solver,
/// transversal:tree:<k> (quota family on the tree board).
std::unique_ptr<ClientStrategy> make_client(const std::string& key, const Graph& board, int q,
                                            uint64_t seed);

}  // namespace cwg
