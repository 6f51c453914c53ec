#pragma once

#include "lsvc/graph.hpp"

namespace lsvc {

struct HIndexDecomposition {
  int h = 0;
  VertexSet high;  // H: vertices of degree ≥ h+1
  std::vector<std::vector<char>> adjacency;  // G[H], indexed like `high`
};

HIndexDecomposition compute_h_index(const Graph& g);

SolveReport solve_glswvc_by_hindex(const Instance& inst);

}  // namespace lsvc
