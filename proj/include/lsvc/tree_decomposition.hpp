#pragma once

#include <iosfwd>

#include "lsvc/graph.hpp"

namespace lsvc {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;  // between bag indices
};

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  Vertex vertex = -1;  // introduced or forgotten vertex
  std::vector<int> children;
  VertexSet bag;
};

// Children always precede their parent, so index order is a post-order.
struct NiceTreeDecomposition {
  int n = 0;
  std::vector<NiceNode> nodes;
  int root = -1;
  int width = 0;
};

// Throws InputError naming the first violated axiom.
void validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);
// Checks the nice-decomposition axioms; throws InputError on violation.
void check_nice(const Graph& g, const NiceTreeDecomposition& td);

// PACE .td format.
TreeDecomposition parse_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td, int n);
NiceTreeDecomposition load_tree_decomposition(const Graph& g,
                                              std::istream& in);
NiceTreeDecomposition load_tree_decomposition(const Graph& g,
                                              const std::string& path);

TreeDecomposition min_fill_decomposition(const Graph& g);
NiceTreeDecomposition heuristic_tree_decomposition(const Graph& g);

// Width ≤ 2 decomposition for graphs of maximum degree ≤ 2.
TreeDecomposition path_cycle_decomposition(const Graph& g);
// Width ≤ 4 decomposition for graphs with at most two vertices of degree
// ≥ 3: those vertices are added to every bag of a path/cycle decomposition.
TreeDecomposition low_hindex_decomposition(const Graph& g);

}  // namespace lsvc
