#pragma once

#include <random>

#include "lsvc/graph.hpp"

namespace lsvc {

using Rng = std::mt19937_64;

Graph gnp(int n, double p, Rng& rng);
// Uniform-ish random d-regular graph by the pairing model with restarts.
Graph random_regular(int n, int d, Rng& rng);
// A center clique completely joined to `arms` disjoint cliques; clique sizes
// are drawn from [1, max_clique]. Modular width stays small.
Graph stars_of_cliques(int arms, int max_clique, Rng& rng);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph complete_graph(int n);

// V minus a random maximal independent set, plus each independent vertex
// with probability `extra`.
VertexSet random_cover(const Graph& g, double extra, Rng& rng);
std::vector<Weight> random_weights(int n, Weight lo, Weight hi, Rng& rng);

}  // namespace lsvc
