#pragma once

#include <cstdint>
#include <vector>

#include "cwg/graph.hpp"

namespace cwg {

enum class Owner : uint8_t { Free, Client, Waiter };

using OwnershipVec = std::vector<Owner>;

inline int count_owner(const OwnershipVec& o, Owner side) {
    int c = 0;
    for (Owner x : o)
        if (x == side) ++c;
    return c;
}

inline std::vector<EdgeId> edges_of(const OwnershipVec& o, Owner side) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(o.size()); ++e)
        if (o[e] == side) out.push_back(e);
    return out;
}

}  // namespace cwg
