#pragma once

#include "lsvc/graph.hpp"

namespace lsvc {

// An instance built from another one. `to_parent` maps local ids to the ids
// of the instance it was derived from.
struct DerivedInstance {
  Instance instance;
  std::vector<Vertex> to_parent;
};

struct SwapInstance : DerivedInstance {
  VertexSet extension;  // W' = W ∪ (N(W)\S), parent ids
  VertexSet removed;    // N(W∩S) ∪ W', parent ids
};

VertexSet lift(const std::vector<Vertex>& to_parent, const VertexSet& w);

VertexSet extension(const Instance& inst, const VertexSet& w);
SwapInstance make_swap_instance(const Instance& inst, const VertexSet& w);
DerivedInstance exclusion_instance(const Instance& inst, const VertexSet& vx);

Instance apply_parity_reduction(const Instance& inst);
int small_subset_bound(const Instance& inst);

// S* = {v ∈ S : N(v) ⊆ S}.
VertexSet isolated_cover_vertices(const Instance& inst);

SolveReport solve_k_le_2(const Instance& inst);
SolveReport solve_kd_le_4(const Instance& inst);
SolveReport solve_hindex_le_1(const Instance& inst);

// Lifts a child report through a swap-instance: the result's swap is
// extension ∪ lift(child swap), evaluated in `parent`.
SolveReport lift_report(const Instance& parent, const SwapInstance& si,
                        const SolveReport& child, const std::string& algorithm);

}  // namespace lsvc
