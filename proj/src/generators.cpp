#include "lsvc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lsvc {

Graph gnp(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_regular(int n, int d, Rng& rng) {
  if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
    throw PreconditionError("random_regular needs 0 <= d < n and n*d even");
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) points.push_back(v);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<Vertex, Vertex>> seen;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < points.size() && ok; i += 2) {
      Vertex u = std::min(points[i], points[i + 1]);
      Vertex v = std::max(points[i], points[i + 1]);
      if (u == v || !seen.insert({u, v}).second) ok = false;
    }
    if (ok) return Graph(n, {seen.begin(), seen.end()});
  }
  throw RefusalError("random_regular: pairing model did not converge");
}

Graph stars_of_cliques(int arms, int max_clique, Rng& rng) {
  std::uniform_int_distribution<int> size(1, std::max(1, max_clique));
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<VertexSet> cliques;
  Vertex next = 0;
  for (int c = 0; c <= arms; ++c) {
    VertexSet q;
    for (int i = size(rng); i > 0; --i) q.push_back(next++);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j) edges.emplace_back(q[i], q[j]);
    cliques.push_back(std::move(q));
  }
  for (int c = 1; c <= arms; ++c)
    for (Vertex u : cliques[0])
      for (Vertex v : cliques[c]) edges.emplace_back(u, v);
  return Graph(next, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

VertexSet random_cover(const Graph& g, double extra, Rng& rng) {
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> indep(g.n(), 0), blocked(g.n(), 0);
  for (Vertex v : order) {
    if (blocked[v]) continue;
    indep[v] = 1;
    for (Vertex u : g.neighbors(v)) blocked[u] = 1;
  }
  std::bernoulli_distribution coin(extra);
  VertexSet cover;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!indep[v] || coin(rng)) cover.push_back(v);
  return cover;
}

std::vector<Weight> random_weights(int n, Weight lo, Weight hi, Rng& rng) {
  std::uniform_int_distribution<Weight> dist(lo, hi);
  std::vector<Weight> w(n);
  for (auto& x : w) x = dist(rng);
  return w;
}

}  // namespace lsvc
