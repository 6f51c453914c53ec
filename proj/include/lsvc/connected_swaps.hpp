#pragma once

#include <functional>

#include "lsvc/graph.hpp"

namespace lsvc {

// Enumerates every valid connected swap W with |W| ≤ kmax and W∩S ≠ ∅, each
// exactly once. `black` marks the cover; a black vertex with a `blocked`
// white neighbor never enters W. Swaps without cover vertices are single
// non-cover vertices and are not reported.
void for_each_connected_swap(const Graph& g, const std::vector<char>& black,
                             const std::vector<char>& blocked, int kmax,
                             const std::function<void(const VertexSet&)>& emit);

std::vector<VertexSet> enumerate_connected_swaps(const Instance& inst, int kmax,
                                                 bool balanced_only);

}  // namespace lsvc
