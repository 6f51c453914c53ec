#include "lsvc/tree_decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace lsvc {

void validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) {
    if (g.n() == 0) return;
    throw InputError("tree decomposition has no bags");
  }
  std::vector<std::vector<int>> tree(nb);
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb || a == b)
      throw InputError("tree edge (" + std::to_string(a + 1) + "," +
                       std::to_string(b + 1) + ") is malformed");
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  if (static_cast<int>(td.edges.size()) != nb - 1)
    throw InputError("decomposition is not a tree: " +
                     std::to_string(td.edges.size()) + " edges for " +
                     std::to_string(nb) + " bags");
  {
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      ++count;
      for (int u : tree[t])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    if (count != nb) throw InputError("decomposition tree is disconnected");
  }
  std::vector<std::vector<int>> holders(g.n());
  for (int t = 0; t < nb; ++t)
    for (Vertex v : td.bags[t]) {
      if (v < 0 || v >= g.n())
        throw InputError("bag " + std::to_string(t + 1) +
                         " contains unknown vertex " + std::to_string(v + 1));
      holders[v].push_back(t);
    }
  for (Vertex v = 0; v < g.n(); ++v)
    if (holders[v].empty())
      throw InputError("vertex " + std::to_string(v + 1) + " is in no bag");
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int t : holders[u])
      if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), v)) {
        covered = true;
        break;
      }
    if (!covered)
      throw InputError("edge (" + std::to_string(u + 1) + "," +
                       std::to_string(v + 1) + ") is in no bag");
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<char> has(nb, 0), seen(nb, 0);
    for (int t : holders[v]) has[t] = 1;
    std::vector<int> stack{holders[v][0]};
    seen[holders[v][0]] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      ++count;
      for (int u : tree[t])
        if (has[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    if (count != holders[v].size())
      throw InputError("bags containing vertex " + std::to_string(v + 1) +
                       " are not connected in the tree");
  }
}

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  NiceTreeDecomposition out;
  out.n = g.n();
  auto add = [&](NodeKind kind, Vertex v, std::vector<int> children,
                 VertexSet bag) {
    out.nodes.push_back({kind, v, std::move(children), std::move(bag)});
    return static_cast<int>(out.nodes.size()) - 1;
  };
  // Walks from node `cur` (bag `from`) to bag `to` via forgets then
  // introduces.
  auto morph = [&](int cur, const VertexSet& from, const VertexSet& to) {
    VertexSet bag = from;
    for (Vertex v : set_minus(from, to)) {
      bag = set_minus(bag, {v});
      cur = add(NodeKind::Forget, v, {cur}, bag);
    }
    for (Vertex v : set_minus(to, from)) {
      bag = set_union(bag, {v});
      cur = add(NodeKind::Introduce, v, {cur}, bag);
    }
    return cur;
  };

  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) {
    out.root = add(NodeKind::Leaf, -1, {}, {});
    return out;
  }
  std::vector<std::vector<int>> tree(nb);
  for (auto [a, b] : td.edges) {
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  std::vector<int> order, parent(nb, -1);
  std::vector<char> seen(nb, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int t = queue[i];
    order.push_back(t);
    for (int u : tree[t])
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = t;
        queue.push_back(u);
      }
  }
  std::vector<int> built(nb, -1);
  std::vector<std::vector<int>> kids(nb);
  for (int t : order)
    if (parent[t] >= 0) kids[parent[t]].push_back(t);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int t = *it;
    const VertexSet& bag = td.bags[t];
    std::vector<int> branches;
    for (int c : kids[t]) branches.push_back(morph(built[c], td.bags[c], bag));
    if (branches.empty()) branches.push_back(morph(add(NodeKind::Leaf, -1, {}, {}), {}, bag));
    int cur = branches[0];
    for (std::size_t i = 1; i < branches.size(); ++i)
      cur = add(NodeKind::Join, -1, {cur, branches[i]}, bag);
    built[t] = cur;
  }
  out.root = morph(built[0], td.bags[0], {});
  std::size_t widest = 0;
  for (const auto& b : td.bags) widest = std::max(widest, b.size());
  out.width = widest == 0 ? 0 : static_cast<int>(widest) - 1;
  return out;
}

void check_nice(const Graph& g, const NiceTreeDecomposition& td) {
  const int nn = static_cast<int>(td.nodes.size());
  if (td.root != nn - 1) throw InputError("root must be the last node");
  if (!td.nodes[td.root].bag.empty()) throw InputError("root bag not empty");
  std::vector<int> parents(nn, 0);
  std::size_t widest = 0;
  for (int x = 0; x < nn; ++x) {
    const NiceNode& node = td.nodes[x];
    widest = std::max(widest, node.bag.size());
    for (int c : node.children) {
      if (c >= x) throw InputError("child after parent");
      ++parents[c];
    }
    switch (node.kind) {
      case NodeKind::Leaf:
        if (!node.children.empty() || !node.bag.empty())
          throw InputError("leaf node " + std::to_string(x) + " malformed");
        break;
      case NodeKind::Introduce:
        if (node.children.size() != 1 ||
            set_union(td.nodes[node.children[0]].bag, {node.vertex}) !=
                node.bag ||
            std::binary_search(td.nodes[node.children[0]].bag.begin(),
                               td.nodes[node.children[0]].bag.end(),
                               node.vertex))
          throw InputError("introduce node " + std::to_string(x) +
                           " malformed");
        break;
      case NodeKind::Forget:
        if (node.children.size() != 1 ||
            set_minus(td.nodes[node.children[0]].bag, {node.vertex}) !=
                node.bag ||
            !std::binary_search(td.nodes[node.children[0]].bag.begin(),
                                td.nodes[node.children[0]].bag.end(),
                                node.vertex))
          throw InputError("forget node " + std::to_string(x) + " malformed");
        break;
      case NodeKind::Join:
        if (node.children.size() != 2 ||
            td.nodes[node.children[0]].bag != node.bag ||
            td.nodes[node.children[1]].bag != node.bag)
          throw InputError("join node " + std::to_string(x) + " malformed");
        break;
    }
  }
  for (int x = 0; x < nn; ++x)
    if ((x == td.root) != (parents[x] == 0) || parents[x] > 1)
      throw InputError("nodes do not form a rooted tree");
  if (static_cast<int>(widest) - 1 > td.width)
    throw InputError("reported width too small");
  // Convert to a plain decomposition and reuse the axiom checks.
  TreeDecomposition plain;
  for (const auto& node : td.nodes) plain.bags.push_back(node.bag);
  for (int x = 0; x < nn; ++x)
    for (int c : td.nodes[x].children) plain.edges.emplace_back(x, c);
  if (g.n() == 0) return;
  validate_tree_decomposition(g, plain);
}

TreeDecomposition parse_td(std::istream& in) {
  TreeDecomposition td;
  std::string line;
  int line_no = 0;
  bool header = false;
  int nbags = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") continue;
    auto fail = [&](const std::string& why) {
      throw InputError("td line " + std::to_string(line_no) + ": " + why);
    };
    if (first == "s") {
      std::string tag;
      int maxbag = 0, nv = 0;
      if (!(ls >> tag >> nbags >> maxbag >> nv) || tag != "td")
        fail("malformed header");
      td.bags.assign(nbags, {});
      header = true;
    } else if (first == "b") {
      if (!header) fail("bag before header");
      int id;
      if (!(ls >> id) || id < 1 || id > nbags) fail("bad bag id");
      VertexSet bag;
      long long v;
      while (ls >> v) {
        if (v < 1) fail("bad vertex id");
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      td.bags[id - 1] = normalized(std::move(bag));
    } else {
      if (!header) fail("edge before header");
      int a, b;
      try {
        a = std::stoi(first);
      } catch (...) {
        fail("unrecognized line");
      }
      if (!(ls >> b)) fail("tree edge needs two bag ids");
      td.edges.emplace_back(a - 1, b - 1);
    }
  }
  if (!header) throw InputError("td file has no 's td' header");
  return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
  std::size_t widest = 0;
  for (const auto& b : td.bags) widest = std::max(widest, b.size());
  out << "s td " << td.bags.size() << ' ' << widest << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

NiceTreeDecomposition load_tree_decomposition(const Graph& g,
                                              std::istream& in) {
  TreeDecomposition td = parse_td(in);
  validate_tree_decomposition(g, td);
  return make_nice(g, td);
}

NiceTreeDecomposition load_tree_decomposition(const Graph& g,
                                              const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return load_tree_decomposition(g, in);
}

TreeDecomposition min_fill_decomposition(const Graph& g) {
  const int n = g.n();
  TreeDecomposition td;
  if (n == 0) return td;
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v)
    adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  auto fill_of = [&](Vertex v) {
    long long missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].count(*b)) ++missing;
    return missing;
  };
  using Key = std::tuple<long long, int, Vertex>;
  std::set<Key> queue;
  std::vector<Key> key(n);
  for (Vertex v = 0; v < n; ++v) {
    key[v] = {fill_of(v), static_cast<int>(adj[v].size()), v};
    queue.insert(key[v]);
  }
  std::vector<int> position(n, -1), bag_of(n, -1);
  std::vector<Vertex> order;
  while (!queue.empty()) {
    Vertex v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());
    position[v] = static_cast<int>(order.size());
    order.push_back(v);
    VertexSet bag(adj[v].begin(), adj[v].end());
    bag.push_back(v);
    bag_of[v] = static_cast<int>(td.bags.size());
    td.bags.push_back(normalized(bag));
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (Vertex a : nb) adj[a].erase(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    adj[v].clear();
    std::set<Vertex> touched(nb.begin(), nb.end());
    for (Vertex a : nb) touched.insert(adj[a].begin(), adj[a].end());
    for (Vertex u : touched) {
      queue.erase(key[u]);
      key[u] = {fill_of(u), static_cast<int>(adj[u].size()), u};
      queue.insert(key[u]);
    }
  }
  // Bag of v hangs below the bag of its earliest-eliminated later neighbor.
  int last_root = -1;
  for (Vertex v : order) {
    int best = -1;
    for (Vertex u : td.bags[bag_of[v]])
      if (u != v && (best < 0 || position[u] < position[best])) best = u;
    if (best >= 0) {
      td.edges.emplace_back(bag_of[v], bag_of[best]);
    } else {
      if (last_root >= 0) td.edges.emplace_back(last_root, bag_of[v]);
      last_root = bag_of[v];
    }
  }
  return td;
}

NiceTreeDecomposition heuristic_tree_decomposition(const Graph& g) {
  return make_nice(g, min_fill_decomposition(g));
}

namespace {

TreeDecomposition path_cycle_on(const Graph& g, const std::vector<char>& skip) {
  TreeDecomposition td;
  std::vector<char> seen(g.n(), 0);
  auto chain = [&](VertexSet bag) {
    td.bags.push_back(normalized(std::move(bag)));
    int id = static_cast<int>(td.bags.size()) - 1;
    if (id > 0) td.edges.emplace_back(id - 1, id);
  };
  auto live_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex u : g.neighbors(v))
      if (!skip[u]) out.push_back(u);
    return out;
  };
  auto walk = [&](Vertex start) {
    std::vector<Vertex> seq{start};
    seen[start] = 1;
    for (;;) {
      Vertex next = -1;
      for (Vertex u : live_neighbors(seq.back()))
        if (!seen[u]) {
          next = u;
          break;
        }
      if (next < 0) break;
      seen[next] = 1;
      seq.push_back(next);
    }
    return seq;
  };
  for (Vertex v = 0; v < g.n(); ++v) {
    if (skip[v] || seen[v]) continue;
    if (live_neighbors(v).size() > 2)
      throw PreconditionError("path/cycle decomposition needs max degree 2");
    if (live_neighbors(v).size() > 1) continue;  // start paths at endpoints
    std::vector<Vertex> seq = walk(v);
    if (seq.size() == 1) chain({v});
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      chain({seq[i], seq[i + 1]});
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (skip[v] || seen[v]) continue;
    if (live_neighbors(v).size() > 2)
      throw PreconditionError("path/cycle decomposition needs max degree 2");
    std::vector<Vertex> seq = walk(v);  // a cycle
    for (std::size_t i = 1; i + 1 < seq.size(); ++i)
      chain({seq[0], seq[i], seq[i + 1]});
  }
  return td;
}

}  // namespace

TreeDecomposition path_cycle_decomposition(const Graph& g) {
  return path_cycle_on(g, std::vector<char>(g.n(), 0));
}

TreeDecomposition low_hindex_decomposition(const Graph& g) {
  std::vector<char> high(g.n(), 0);
  VertexSet hs;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) >= 3) {
      high[v] = 1;
      hs.push_back(v);
    }
  if (hs.size() > 2)
    throw PreconditionError("needs at most two vertices of degree >= 3");
  TreeDecomposition td = path_cycle_on(g, high);
  if (td.bags.empty() && !hs.empty()) td.bags.push_back({});
  for (auto& bag : td.bags) bag = set_union(bag, hs);
  return td;
}

}  // namespace lsvc
