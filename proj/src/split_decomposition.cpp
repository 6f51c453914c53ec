#include "lsvc/split_decomposition.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <ostream>

namespace lsvc {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> rows_of(const Graph& g) {
  std::vector<Bits> rows(g.n(), Bits(g.n()));
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v)) rows[v].set(u);
  return rows;
}

// Smallest V1 ⊇ {x, a} avoiding y such that all edges leaving V1 form a
// complete bipartite graph containing the edge xy.
std::optional<Bits> closure(const std::vector<Bits>& adj, Vertex x, Vertex y,
                            Vertex a) {
  const std::size_t n = adj.size();
  Bits in(n);
  in.set(x);
  in.set(a);
  std::vector<Vertex> queue{a};
  while (!queue.empty()) {
    Vertex p = queue.back();
    queue.pop_back();
    Bits row = adj[p][y] ? (adj[p] ^ adj[x]) : adj[p];
    row -= in;
    if (row[y]) return std::nullopt;
    for (auto z = row.find_first(); z != Bits::npos; z = row.find_next(z)) {
      in.set(z);
      queue.push_back(static_cast<Vertex>(z));
    }
    if (in.count() + 2 > n) return std::nullopt;
  }
  return in;
}

VertexSet to_set(const Bits& b) {
  VertexSet out;
  for (auto z = b.find_first(); z != Bits::npos; z = b.find_next(z))
    out.push_back(static_cast<Vertex>(z));
  return out;
}

}  // namespace

std::optional<VertexSet> find_split(const Graph& g) {
  const int n = g.n();
  if (n < 4) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0) return normalized({v, v == 0 ? 1 : 0});
  // Disconnected: one component against the rest.
  {
    std::vector<char> seen(n, 0);
    VertexSet comp{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex u : g.neighbors(comp[i]))
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    if (static_cast<int>(comp.size()) < n) return normalized(std::move(comp));
  }
  const std::vector<Bits> adj = rows_of(g);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : g.neighbors(x))
      for (Vertex a = 0; a < n; ++a) {
        if (a == x || a == y) continue;
        if (auto in = closure(adj, x, y, a)) return to_set(*in);
      }
  return std::nullopt;
}

namespace {

// Intermediate split tree: bags whose items are real vertices (≥ 0) or
// markers (-(id+1)); each marker occurs in exactly two bags.
struct Bag {
  std::vector<int> items;
  std::vector<std::vector<char>> adj;
};

Graph bag_graph(const Bag& b) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < b.items.size(); ++i)
    for (std::size_t j = i + 1; j < b.items.size(); ++j)
      if (b.adj[i][j]) edges.emplace_back(i, j);
  return Graph(static_cast<int>(b.items.size()), edges);
}

std::vector<Bag> split_into_bags(const Graph& g) {
  Bag all;
  for (Vertex v = 0; v < g.n(); ++v) all.items.push_back(v);
  all.adj.assign(g.n(), std::vector<char>(g.n(), 0));
  for (auto [u, v] : g.edges()) all.adj[u][v] = all.adj[v][u] = 1;
  std::vector<Bag> work{std::move(all)}, done;
  int next_marker = 0;
  while (!work.empty()) {
    Bag b = std::move(work.back());
    work.pop_back();
    auto v1 = find_split(bag_graph(b));
    if (!v1) {
      done.push_back(std::move(b));
      continue;
    }
    const std::size_t sz = b.items.size();
    std::vector<char> side(sz, 1);
    for (Vertex i : *v1) side[i] = 0;
    const int marker = -(next_marker++ + 1);
    for (int s = 0; s < 2; ++s) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < sz; ++i)
        if (side[i] == s) idx.push_back(i);
      Bag part;
      const std::size_t m = idx.size();
      part.adj.assign(m + 1, std::vector<char>(m + 1, 0));
      for (std::size_t i = 0; i < m; ++i) {
        part.items.push_back(b.items[idx[i]]);
        bool crosses = false;
        for (std::size_t j = 0; j < sz; ++j)
          if (side[j] != s && b.adj[idx[i]][j]) crosses = true;
        part.adj[i][m] = part.adj[m][i] = crosses;
        for (std::size_t j = 0; j < m; ++j)
          part.adj[i][j] = b.adj[idx[i]][idx[j]];
      }
      part.items.push_back(marker);
      work.push_back(std::move(part));
    }
  }
  return done;
}

class NiceBuilder {
 public:
  NiceBuilder(const std::vector<Bag>& bags, int n) : bags_(bags) {
    sd_.n = n;
    for (std::size_t b = 0; b < bags.size(); ++b) {
      sd_.width = std::max<int>(sd_.width, bags[b].items.size());
      for (int item : bags[b].items)
        if (item < 0) owners_[item].push_back(static_cast<int>(b));
    }
  }

  NiceSplitDecomposition run() {
    sd_.root = build(0, kNoParent);
    for (std::size_t x = 0; x < sd_.nodes.size(); ++x)
      for (int c : sd_.nodes[x].children) sd_.nodes[c].parent = static_cast<int>(x);
    return std::move(sd_);
  }

 private:
  int leaf(Vertex v) {
    SplitNode node;
    node.leaf = true;
    node.vertex = v;
    node.vertices = {v};
    node.border = {v};
    sd_.nodes.push_back(std::move(node));
    return static_cast<int>(sd_.nodes.size()) - 1;
  }

  static constexpr int kNoParent = std::numeric_limits<int>::max();

  int build(int b, int parent_marker) {
    const Bag& bag = bags_[b];
    std::vector<std::size_t> order;
    std::size_t up = bag.items.size();
    for (std::size_t i = 0; i < bag.items.size(); ++i) {
      if (bag.items[i] == parent_marker) up = i;
      else order.push_back(i);
    }
    SplitNode node;
    for (std::size_t i : order) {
      int item = bag.items[i];
      if (item >= 0) {
        node.children.push_back(leaf(item));
      } else {
        const auto& own = owners_.at(item);
        int other = own[0] == b ? own[1] : own[0];
        node.children.push_back(build(other, item));
      }
    }
    const std::size_t c = order.size();
    node.adj.assign(c + 1, std::vector<char>(c + 1, 0));
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < c; ++j)
        node.adj[i][j] = bag.adj[order[i]][order[j]];
      if (up < bag.items.size())
        node.adj[i][c] = node.adj[c][i] = bag.adj[order[i]][up];
    }
    for (std::size_t i = 0; i < c; ++i) {
      const SplitNode& ch = sd_.nodes[node.children[i]];
      node.vertices = set_union(node.vertices, ch.vertices);
      if (node.adj[i][c]) node.border = set_union(node.border, ch.border);
    }
    sd_.nodes.push_back(std::move(node));
    return static_cast<int>(sd_.nodes.size()) - 1;
  }

  const std::vector<Bag>& bags_;
  std::map<int, std::vector<int>> owners_;
  NiceSplitDecomposition sd_;
};

int position_in_parent(const NiceSplitDecomposition& sd, int x) {
  const auto& ch = sd.nodes[sd.nodes[x].parent].children;
  return static_cast<int>(std::find(ch.begin(), ch.end(), x) - ch.begin());
}

// Real vertices reachable from node x entered at position `pos` along
// adjacent marker pairs. `down_only` keeps the walk inside the subtree.
void walk(const NiceSplitDecomposition& sd, int x, int pos, bool down_only,
          VertexSet& out) {
  const SplitNode& node = sd.nodes[x];
  if (node.leaf) {
    out.push_back(node.vertex);
    return;
  }
  const int c = static_cast<int>(node.children.size());
  for (int s = 0; s <= c; ++s) {
    if (s == pos || !node.adj[pos][s]) continue;
    if (s < c) {
      int y = node.children[s];
      walk(sd, y, static_cast<int>(sd.nodes[y].children.size()), true, out);
    } else if (!down_only && x != sd.root) {
      walk(sd, node.parent, position_in_parent(sd, x), false, out);
    }
  }
}

}  // namespace

NiceSplitDecomposition compute_split_decomposition(const Graph& g) {
  if (g.n() == 0) throw PreconditionError("split decomposition needs n >= 1");
  if (g.n() == 1) {
    NiceSplitDecomposition sd;
    sd.n = 1;
    SplitNode node;
    node.leaf = true;
    node.vertex = 0;
    node.vertices = node.border = {0};
    sd.nodes.push_back(node);
    sd.root = 0;
    sd.width = 1;
    return sd;
  }
  return NiceBuilder(split_into_bags(g), g.n()).run();
}

Graph recompose(const NiceSplitDecomposition& sd) {
  std::vector<int> leaf_of(sd.n, -1);
  for (std::size_t x = 0; x < sd.nodes.size(); ++x)
    if (sd.nodes[x].leaf) leaf_of[sd.nodes[x].vertex] = static_cast<int>(x);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < sd.n; ++u) {
    int l = leaf_of[u];
    if (l < 0 || l == sd.root) continue;
    VertexSet reach;
    walk(sd, sd.nodes[l].parent, position_in_parent(sd, l), false, reach);
    for (Vertex v : reach)
      if (u < v) edges.emplace_back(u, v);
  }
  return Graph(sd.n, edges);
}

void check_split_decomposition(const Graph& g, const NiceSplitDecomposition& sd) {
  auto fail = [](const std::string& why) { throw std::logic_error(why); };
  if (sd.n != g.n()) fail("split decomposition vertex count mismatch");
  std::vector<int> seen(g.n(), 0);
  for (std::size_t x = 0; x < sd.nodes.size(); ++x) {
    const SplitNode& node = sd.nodes[x];
    if (node.leaf) {
      if (node.vertex < 0 || node.vertex >= g.n()) fail("leaf out of range");
      ++seen[node.vertex];
      continue;
    }
    const std::size_t c = node.children.size();
    if (node.adj.size() != c + 1) fail("quotient size mismatch");
    for (std::size_t i = 0; i <= c; ++i)
      for (std::size_t j = 0; j <= c; ++j)
        if (node.adj[i][j] != node.adj[j][i] || (i == j && node.adj[i][j]))
          fail("quotient adjacency is not a simple graph");
    for (int ch : node.children)
      if (sd.nodes[ch].parent != static_cast<int>(x) || ch >= static_cast<int>(x))
        fail("child/parent links are inconsistent");
    if (static_cast<int>(x) == sd.root) {
      for (std::size_t i = 0; i < c; ++i)
        if (node.adj[i][c]) fail("root auxiliary marker has a neighbor");
      if (!node.border.empty()) fail("root border is not empty");
    } else {
      VertexSet reach;
      walk(sd, static_cast<int>(x), static_cast<int>(c), true, reach);
      if (normalized(reach) != node.border)
        fail("border of node " + std::to_string(x) + " is inconsistent");
    }
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (seen[v] != 1) fail("vertex " + std::to_string(v + 1) + " is not a unique leaf");
  Graph r = recompose(sd);
  if (r.edges() != g.edges()) fail("recomposition does not reproduce the graph");
}

void dump_split(std::ostream& out, const NiceSplitDecomposition& sd) {
  for (std::size_t x = 0; x < sd.nodes.size(); ++x) {
    const SplitNode& node = sd.nodes[x];
    const char* kind = node.leaf ? "leaf"
                       : static_cast<int>(x) == sd.root ? "root"
                                                        : "internal";
    out << "node " << x << " kind=" << kind << " children=";
    for (std::size_t i = 0; i < node.children.size(); ++i)
      out << (i ? "," : "") << node.children[i];
    out << " quotient-edges=";
    bool first = true;
    const std::size_t c = node.children.size();
    auto name = [&](std::size_t i) {
      return i < c ? std::to_string(node.children[i]) : std::to_string(x);
    };
    for (std::size_t i = 0; i <= c && !node.leaf; ++i)
      for (std::size_t j = i + 1; j <= c; ++j)
        if (node.adj[i][j]) {
          out << (first ? "" : ",") << name(i) << '-' << name(j);
          first = false;
        }
    out << " marker=" << x;
    if (node.leaf) out << " vertex=" << node.vertex + 1;
    out << '\n';
  }
}

}  // namespace lsvc
