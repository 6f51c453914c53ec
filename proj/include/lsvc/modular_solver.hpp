#pragma once

#include "lsvc/graph.hpp"
#include "lsvc/modular_decomposition.hpp"

namespace lsvc {

// Per-node tables D_x[k'] for k' ∈ [0,k] plus a witness for D_root[k].
struct ModularTables {
  std::vector<std::vector<Gain>> d;
  Gain root_value = 0;
  VertexSet swap;
  std::uint64_t cells = 0;
};

// cap bounds |S_x|; cap < 0 means no bound beyond k'.
ModularTables run_mw_dp(const Instance& inst, const ModularDecomposition& md,
                        int cap);
ModularTables run_delta_md(const Instance& inst, const ModularDecomposition& md,
                           Counters* counters = nullptr);

SolveReport solve_glswvc_mw(const Instance& inst, const ModularDecomposition& md);
SolveReport solve_glsvc_mw(const Instance& inst, const ModularDecomposition& md);
SolveReport solve_glsvc_delta_md(const Instance& inst,
                                 const ModularDecomposition& md);

}  // namespace lsvc
