#pragma once

#include <iosfwd>

#include "lsvc/graph.hpp"

namespace lsvc {

enum class ModKind { Leaf, Parallel, Series, Prime };

const char* mod_kind_name(ModKind k);

struct ModNode {
  ModKind kind = ModKind::Leaf;
  Vertex vertex = -1;         // leaves only
  std::vector<int> children;  // node ids
  // Quotient graph on the children, indexed like `children`.
  std::vector<std::vector<char>> quotient;
  VertexSet vertices;  // V_x
};

// Children precede parents; the root is the last node.
struct ModularDecomposition {
  std::vector<ModNode> nodes;
  int root = -1;
  int width = 0;  // max |V(β(x))|
};

ModularDecomposition compute_modular_decomposition(const Graph& g);

// Max quotient degree over all nodes, and over prime nodes only.
int compute_delta_md(const ModularDecomposition& md);
int compute_delta_md_prime(const ModularDecomposition& md);

// Smallest module of g containing `seed`.
VertexSet module_closure(const Graph& g, const VertexSet& seed);
bool is_module(const Graph& g, const VertexSet& m);

// Throws std::logic_error when a child pair is neither complete nor
// anticomplete as the quotient claims, or the vertex sets do not partition.
void check_modular_decomposition(const Graph& g, const ModularDecomposition& md);

void dump_modular(std::ostream& out, const ModularDecomposition& md);

}  // namespace lsvc
