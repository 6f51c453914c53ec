#pragma once

#include "lsvc/graph.hpp"
#include "lsvc/split_decomposition.hpp"

namespace lsvc {

enum class SplitTable { Plus = 0, Minus = 1, Circle = 2 };

struct SplitTables {
  // t[x][table][k'] for k' ∈ [0,k].
  std::vector<std::array<std::vector<Gain>, 3>> t;
  Gain root_value = 0;
  VertexSet swap;
  std::uint64_t cells = 0;
};

// cap bounds |S_x|; cap < 0 means no bound beyond k'.
SplitTables run_split_dp(const Instance& inst, const NiceSplitDecomposition& sd,
                         int cap);

SolveReport solve_glswvc_sw(const Instance& inst,
                            const NiceSplitDecomposition& sd);
SolveReport solve_glsvc_sw(const Instance& inst,
                           const NiceSplitDecomposition& sd);

}  // namespace lsvc
