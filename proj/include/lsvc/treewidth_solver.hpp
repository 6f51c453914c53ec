#pragma once

#include "lsvc/graph.hpp"
#include "lsvc/tree_decomposition.hpp"

namespace lsvc {

struct TwOutcome {
  Gain root_value = 0;  // D_root[∅,∅,k]
  VertexSet swap;       // traceback witness
  std::uint64_t cells = 0;
};

// Runs the DP with cap on |S_x ∪ C_x|; cap < 0 means k.
TwOutcome run_tw_dp(const Instance& inst, const NiceTreeDecomposition& td,
                    int cap);

SolveReport solve_max_improvement_tw(const Instance& inst,
                                     const NiceTreeDecomposition& td);
SolveReport solve_glsvc_tw(const Instance& inst,
                           const NiceTreeDecomposition& td);

}  // namespace lsvc
