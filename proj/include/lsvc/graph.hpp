#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsvc {

using Vertex = int;
using Weight = std::uint32_t;
using Gain = std::int64_t;
using VertexSet = std::vector<Vertex>;  // always sorted, no duplicates

// Sentinel for infeasible DP states. Far enough from the type limits that
// adding a few weights never wraps.
inline constexpr Gain kNegInf = std::numeric_limits<Gain>::min() / 4;

inline bool is_neg_inf(Gain g) { return g <= kNegInf / 2; }
inline Gain sat_add(Gain a, Gain b) {
  if (is_neg_inf(a) || is_neg_inf(b)) return kNegInf;
  return a + b;
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};
struct ModeError : std::logic_error {
  using std::logic_error::logic_error;
};
struct RefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Graph {
 public:
  Graph() = default;
  // Duplicate edges are merged; self-loops and out-of-range ids throw.
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t m() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Induced subgraph on `keep` (sorted). The returned map sends new ids to old.
  std::pair<Graph, std::vector<Vertex>> induced(const VertexSet& keep) const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

enum class Mode { LSVC, GLSVC, LSWVC, GLSWVC };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);
inline bool unit_weights(Mode m) { return m == Mode::LSVC || m == Mode::GLSVC; }

class Instance {
 public:
  Instance() = default;

  // Validated constructor for user-facing instances. Empty weights mean unit.
  static Instance create(Graph g, const VertexSet& cover,
                         std::vector<Weight> weights, int k, Gain d, Mode mode);

  // Instances produced by swap-instance and exclusion constructions. The
  // cover property is still checked; k and d are taken as given since they
  // may leave the mode's nominal range.
  static Instance derived(Graph g, std::vector<char> in_cover,
                          std::vector<Weight> weights, int k, Gain d,
                          Mode mode);

  const Graph& graph() const { return g_; }
  int n() const { return g_.n(); }
  bool in_cover(Vertex v) const { return in_cover_[v] != 0; }
  const std::vector<char>& cover_mask() const { return in_cover_; }
  Weight weight(Vertex v) const { return weights_[v]; }
  const std::vector<Weight>& weights() const { return weights_; }
  int k() const { return k_; }
  Gain d() const { return d_; }
  Mode mode() const { return mode_; }
  bool unit() const { return unit_weights(mode_); }
  VertexSet cover() const;

  Instance with_budget(int k, Gain d) const;

 private:
  Graph g_;
  std::vector<char> in_cover_;
  std::vector<Weight> weights_;
  int k_ = 0;
  Gain d_ = 0;
  Mode mode_ = Mode::GLSWVC;
};

struct Swap {
  VertexSet vertices;
  Gain improvement = 0;
  bool valid = false;
};

struct Counters {
  std::uint64_t branch_nodes = 0;
  std::uint64_t dp_cells = 0;
  int max_depth = 0;
};

enum class Outcome { Found, LocallyOptimal };

struct SolveReport {
  Outcome outcome = Outcome::LocallyOptimal;
  std::optional<Swap> swap;  // present iff outcome == Found
  // Largest improvement seen by solvers that compute it exactly.
  std::optional<Gain> best_improvement;
  std::string algorithm;
  Counters counters;
  double time_ms = 0;
  std::map<std::string, long long> params;

  bool yes() const { return outcome == Outcome::Found; }
};

bool is_valid_swap(const Instance& inst, const VertexSet& w);
// Second characterization: W∩S independent and N(W∩S)\S ⊆ W.
bool is_valid_swap_local(const Instance& inst, const VertexSet& w);
Gain improvement(const Instance& inst, const VertexSet& w);
Swap make_swap(const Instance& inst, VertexSet w);
std::vector<VertexSet> connected_components_of_swap(const Graph& g,
                                                    const VertexSet& w);

// Set helpers on sorted vectors.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet normalized(VertexSet s);
VertexSet open_neighborhood(const Graph& g, const VertexSet& w);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& w);

// Report helpers shared by the solvers.
SolveReport found(const Instance& inst, VertexSet w, std::string algorithm);
SolveReport not_found(std::string algorithm);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace lsvc
