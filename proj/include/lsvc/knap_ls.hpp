#pragma once

#include "lsvc/graph.hpp"

namespace lsvc {

// Knapsack-flavored local search instance over a quotient graph.
struct KnapInstance {
  Graph graph;
  std::vector<char> in_cover;
  int k = 0;
  // gamma[v][c] for c ∈ [0,k]; gamma[v][0] = 0 and non-decreasing in c.
  std::vector<std::vector<Gain>> gamma;
  // δc(v) for v outside the cover; ignored for cover vertices.
  std::vector<Gain> cost;
  // Vertices with δc = ∞: they may never join the cover.
  std::vector<char> blocked;

  int n() const { return graph.n(); }
  // Throws PreconditionError on shape errors, non-monotone γ or a
  // non-cover S.
  void validate() const;
};

struct KnapSolution {
  Gain value = kNegInf;
  VertexSet swap;
  // Internal swap numbers c(v); zero for vertices of the new cover.
  std::vector<int> internal;
};

// δ^S(W,c) of a candidate solution, or kNegInf if it violates a constraint.
Gain knap_evaluate(const KnapInstance& ki, const VertexSet& w,
                   const std::vector<int>& c);

// Search tree over connected swaps and knapsack-swap instances.
KnapSolution solve_knap_ls(const KnapInstance& ki, Counters* counters = nullptr);

// Exhaustive enumeration over all (W, c). Refuses n > 12 or k > 8.
KnapSolution knap_brute_force(const KnapInstance& ki);

}  // namespace lsvc
