#include "lsvc/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace lsvc {

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : adj_(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0," + std::to_string(n) +
                       ")");
    if (u == v)
      throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    m_ += a.size();
  }
  m_ /= 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex x = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), x);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::pair<Graph, std::vector<Vertex>> Graph::induced(
    const VertexSet& keep) const {
  std::vector<Vertex> new_id(n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = i;
  Graph h;
  h.adj_.resize(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : adj_[keep[i]])
      if (new_id[w] >= 0) h.adj_[i].push_back(new_id[w]);
    h.m_ += h.adj_[i].size();
  }
  h.m_ /= 2;
  return {std::move(h), keep};
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::LSVC: return "lsvc";
    case Mode::GLSVC: return "glsvc";
    case Mode::LSWVC: return "lswvc";
    case Mode::GLSWVC: return "glswvc";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), ::tolower);
  if (t == "lsvc") return Mode::LSVC;
  if (t == "glsvc") return Mode::GLSVC;
  if (t == "lswvc") return Mode::LSWVC;
  if (t == "glswvc") return Mode::GLSWVC;
  throw InputError("unknown mode '" + s + "'");
}

namespace {

void check_cover(const Graph& g, const std::vector<char>& in_cover) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && !in_cover[u] && !in_cover[v])
        throw InputError("not a vertex cover: edge (" + std::to_string(u) +
                         "," + std::to_string(v) + ") is uncovered");
}

}  // namespace

Instance Instance::create(Graph g, const VertexSet& cover,
                          std::vector<Weight> weights, int k, Gain d,
                          Mode mode) {
  const int n = g.n();
  std::vector<char> mask(n, 0);
  for (Vertex v : cover) {
    if (v < 0 || v >= n)
      throw InputError("cover vertex " + std::to_string(v) + " out of range");
    mask[v] = 1;
  }
  if (weights.empty()) weights.assign(n, 1);
  if (static_cast<int>(weights.size()) != n)
    throw InputError("weight count " + std::to_string(weights.size()) +
                     " does not match vertex count " + std::to_string(n));
  if (k < 0) throw InputError("k must be non-negative");
  if (unit_weights(mode))
    for (Weight w : weights)
      if (w != 1)
        throw ModeError(std::string(mode_name(mode)) +
                        " requires unit weights");
  switch (mode) {
    case Mode::LSVC:
    case Mode::LSWVC:
      if (d != 1)
        throw ModeError(std::string(mode_name(mode)) + " requires d = 1");
      break;
    case Mode::GLSVC:
      if (d < 1 || d > k) throw ModeError("glsvc requires 1 <= d <= k");
      break;
    case Mode::GLSWVC:
      if (d < 0) throw ModeError("glswvc requires d >= 0");
      break;
  }
  check_cover(g, mask);
  Instance inst;
  inst.g_ = std::move(g);
  inst.in_cover_ = std::move(mask);
  inst.weights_ = std::move(weights);
  inst.k_ = k;
  inst.d_ = d;
  inst.mode_ = mode;
  return inst;
}

Instance Instance::derived(Graph g, std::vector<char> in_cover,
                           std::vector<Weight> weights, int k, Gain d,
                           Mode mode) {
  check_cover(g, in_cover);
  Instance inst;
  inst.g_ = std::move(g);
  inst.in_cover_ = std::move(in_cover);
  inst.weights_ = std::move(weights);
  inst.k_ = k;
  inst.d_ = d;
  inst.mode_ = mode;
  return inst;
}

VertexSet Instance::cover() const {
  VertexSet s;
  for (Vertex v = 0; v < n(); ++v)
    if (in_cover_[v]) s.push_back(v);
  return s;
}

Instance Instance::with_budget(int k, Gain d) const {
  Instance copy = *this;
  copy.k_ = k;
  copy.d_ = d;
  return copy;
}

bool is_valid_swap(const Instance& inst, const VertexSet& w) {
  const Graph& g = inst.graph();
  std::vector<char> in_new(inst.cover_mask());
  for (Vertex v : w) in_new[v] = !in_new[v];
  for (Vertex u = 0; u < g.n(); ++u)
    if (!in_new[u])
      for (Vertex v : g.neighbors(u))
        if (!in_new[v]) return false;
  return true;
}

bool is_valid_swap_local(const Instance& inst, const VertexSet& w) {
  const Graph& g = inst.graph();
  std::vector<char> in_w(g.n(), 0);
  for (Vertex v : w) in_w[v] = 1;
  for (Vertex v : w) {
    if (!inst.in_cover(v)) continue;
    for (Vertex u : g.neighbors(v)) {
      if (inst.in_cover(u) && in_w[u]) return false;
      if (!inst.in_cover(u) && !in_w[u]) return false;
    }
  }
  return true;
}

Gain improvement(const Instance& inst, const VertexSet& w) {
  Gain total = 0;
  for (Vertex v : w)
    total += inst.in_cover(v) ? Gain(inst.weight(v)) : -Gain(inst.weight(v));
  return total;
}

Swap make_swap(const Instance& inst, VertexSet w) {
  Swap s;
  s.vertices = normalized(std::move(w));
  s.improvement = improvement(inst, s.vertices);
  s.valid = is_valid_swap_local(inst, s.vertices);
  return s;
}

std::vector<VertexSet> connected_components_of_swap(const Graph& g,
                                                    const VertexSet& w) {
  std::vector<int> comp(g.n(), -2);
  for (Vertex v : w) comp[v] = -1;
  std::vector<VertexSet> out;
  for (Vertex s : w) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      out[id].push_back(v);
      for (Vertex u : g.neighbors(v))
        if (comp[u] == -1) {
          comp[u] = id;
          q.push(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& w) {
  VertexSet out;
  for (Vertex v : w)
    for (Vertex u : g.neighbors(v)) out.push_back(u);
  return set_minus(normalized(std::move(out)), w);
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& w) {
  return set_union(open_neighborhood(g, w), w);
}

SolveReport found(const Instance& inst, VertexSet w, std::string algorithm) {
  SolveReport r;
  r.outcome = Outcome::Found;
  r.swap = make_swap(inst, std::move(w));
  r.algorithm = std::move(algorithm);
  return r;
}

SolveReport not_found(std::string algorithm) {
  SolveReport r;
  r.algorithm = std::move(algorithm);
  return r;
}

}  // namespace lsvc
