#pragma once

#include <iosfwd>

#include "lsvc/graph.hpp"

namespace lsvc {

struct SplitNode {
  bool leaf = false;
  Vertex vertex = -1;  // leaves only
  int parent = -1;
  std::vector<int> children;
  // β(x) on the children (positions 0..c-1) and the marker x itself
  // (position c). At the root, position c is the isolated auxiliary marker.
  std::vector<std::vector<char>> adj;
  VertexSet vertices;  // V_x
  VertexSet border;
};

// Children precede parents; the root is the last node.
struct NiceSplitDecomposition {
  int n = 0;
  std::vector<SplitNode> nodes;
  int root = -1;
  int width = 0;  // largest quotient before nice-ification
};

// A split (V1, V2) of g as V1, or nothing if g is prime (n < 4 included).
std::optional<VertexSet> find_split(const Graph& g);

NiceSplitDecomposition compute_split_decomposition(const Graph& g);

// Graph obtained by composing all quotients.
Graph recompose(const NiceSplitDecomposition& sd);

// Throws std::logic_error if recomposition differs from g, a border set is
// inconsistent, or the tree shape is malformed.
void check_split_decomposition(const Graph& g, const NiceSplitDecomposition& sd);

void dump_split(std::ostream& out, const NiceSplitDecomposition& sd);

}  // namespace lsvc
