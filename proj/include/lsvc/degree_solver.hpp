#pragma once

#include "lsvc/graph.hpp"

namespace lsvc {

// members[j] holds W_j (index 0 unused).
struct SwapFamily {
  std::vector<std::optional<VertexSet>> members;

  const std::optional<VertexSet>& operator[](int j) const { return members[j]; }
  int size() const { return static_cast<int>(members.size()) - 1; }
};

SwapFamily compute_swap_family_unweighted(const Instance& inst);
SwapFamily compute_swap_family_weighted(const Instance& inst);

SolveReport solve_glsvc_by_degree(const Instance& inst);
SolveReport solve_glswvc_by_degree(const Instance& inst);
SolveReport solve_lswvc_by_degree(const Instance& inst);

}  // namespace lsvc
