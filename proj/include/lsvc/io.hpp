#pragma once

#include <iosfwd>
#include <string>

#include "lsvc/graph.hpp"

namespace lsvc {

// DIMACS edge format: `c` comments, `p edge n m`, `e u v` with 1-based ids.
// Parse errors name the source and line.
Graph read_dimacs(std::istream& in, const std::string& source = "<graph>");
Graph load_dimacs(const std::string& path);
void write_dimacs(std::ostream& out, const Graph& g);

// Whitespace-separated 1-based vertex ids; `c` lines are comments.
VertexSet read_cover(std::istream& in, int n, const std::string& source = "<cover>");
VertexSet load_cover(const std::string& path, int n);
void write_cover(std::ostream& out, const VertexSet& cover);

// `<vertex> <weight>` pairs, one per vertex.
std::vector<Weight> read_weights(std::istream& in, int n,
                                 const std::string& source = "<weights>");
std::vector<Weight> load_weights(const std::string& path, int n);
void write_weights(std::ostream& out, const std::vector<Weight>& w);

// Throws InputError naming the first uncovered edge in 1-based ids.
void require_cover(const Graph& g, const VertexSet& cover);

// Both endpoints of a greedily built maximal matching.
VertexSet greedy2approx(const Graph& g);

struct InstancePaths {
  std::string graph;
  std::string cover;
  std::string weights;  // empty: none written / unit weights
};

void write_instance(const Instance& inst, const InstancePaths& paths);

}  // namespace lsvc
