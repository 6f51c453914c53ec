#include "lsvc/modular_decomposition.hpp"

#include <algorithm>
#include <ostream>

namespace lsvc {

const char* mod_kind_name(ModKind k) {
  switch (k) {
    case ModKind::Leaf: return "leaf";
    case ModKind::Parallel: return "parallel";
    case ModKind::Series: return "series";
    case ModKind::Prime: return "prime";
  }
  return "?";
}

namespace {

// Closure inside the vertex set marked by `inside`: keep adding splitters.
VertexSet closure_within(const Graph& g, const std::vector<char>& inside,
                         const VertexSet& domain, const VertexSet& seed) {
  std::vector<char> in_m(g.n(), 0);
  std::vector<int> cnt(g.n(), 0);
  VertexSet m;
  auto add = [&](Vertex v) {
    in_m[v] = 1;
    m.push_back(v);
    for (Vertex u : g.neighbors(v)) ++cnt[u];
  };
  for (Vertex v : seed) add(v);
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex z : domain) {
      if (in_m[z] || !inside[z]) continue;
      if (cnt[z] > 0 && cnt[z] < static_cast<int>(m.size())) {
        add(z);
        grew = true;
      }
    }
  }
  return normalized(std::move(m));
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& xs,
                                  bool complement) {
  std::vector<char> inside(g.n(), 0), seen(g.n(), 0);
  for (Vertex v : xs) inside[v] = 1;
  std::vector<VertexSet> out;
  for (Vertex s : xs) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      Vertex v = comp[i];
      if (!complement) {
        for (Vertex u : g.neighbors(v))
          if (inside[u] && !seen[u]) {
            seen[u] = 1;
            comp.push_back(u);
          }
      } else {
        for (Vertex u : xs)
          if (!seen[u] && u != v && !g.adjacent(u, v)) {
            seen[u] = 1;
            comp.push_back(u);
          }
      }
    }
    out.push_back(normalized(std::move(comp)));
  }
  return out;
}

class Builder {
 public:
  explicit Builder(const Graph& g) : g_(g), inside_(g.n(), 0) {}

  int build(const VertexSet& xs) {
    if (xs.size() == 1) {
      ModNode leaf;
      leaf.vertex = xs[0];
      leaf.vertices = xs;
      return push(std::move(leaf));
    }
    ModKind kind;
    std::vector<VertexSet> parts = components(g_, xs, false);
    if (parts.size() > 1) {
      kind = ModKind::Parallel;
    } else {
      parts = components(g_, xs, true);
      kind = parts.size() > 1 ? ModKind::Series : ModKind::Prime;
      if (kind == ModKind::Prime) parts = maximal_modules(xs);
    }
    ModNode node;
    node.kind = kind;
    node.vertices = xs;
    for (const VertexSet& p : parts) node.children.push_back(build(p));
    const std::size_t c = parts.size();
    node.quotient.assign(c, std::vector<char>(c, 0));
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j)
        node.quotient[i][j] = i != j && g_.adjacent(parts[i][0], parts[j][0]);
    return push(std::move(node));
  }

  ModularDecomposition finish(int root) {
    md_.root = root;
    for (const auto& node : md_.nodes)
      md_.width = std::max<int>(
          md_.width, node.kind == ModKind::Leaf ? 1 : node.children.size());
    return std::move(md_);
  }

 private:
  int push(ModNode node) {
    md_.nodes.push_back(std::move(node));
    return static_cast<int>(md_.nodes.size()) - 1;
  }

  // With G[X] and its complement connected, the maximal proper modules
  // partition X. Grow each class by merging in closures that stay proper.
  std::vector<VertexSet> maximal_modules(const VertexSet& xs) {
    for (Vertex v : xs) inside_[v] = 1;
    std::vector<char> assigned(g_.n(), 0);
    std::vector<VertexSet> parts;
    for (Vertex v : xs) {
      if (assigned[v]) continue;
      VertexSet cls{v};
      for (Vertex u : xs) {
        if (assigned[u] || std::binary_search(cls.begin(), cls.end(), u))
          continue;
        VertexSet grown = closure_within(g_, inside_, xs, set_union(cls, {u}));
        if (grown.size() < xs.size()) cls = std::move(grown);
      }
      for (Vertex u : cls) assigned[u] = 1;
      parts.push_back(std::move(cls));
    }
    for (Vertex v : xs) inside_[v] = 0;
    return parts;
  }

  const Graph& g_;
  std::vector<char> inside_;
  ModularDecomposition md_;
};

}  // namespace

ModularDecomposition compute_modular_decomposition(const Graph& g) {
  if (g.n() == 0) throw PreconditionError("modular decomposition needs n >= 1");
  Builder b(g);
  VertexSet all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  int root = b.build(all);
  return b.finish(root);
}

int compute_delta_md(const ModularDecomposition& md) {
  int best = 0;
  for (const auto& node : md.nodes)
    for (const auto& row : node.quotient)
      best = std::max<int>(best, std::count(row.begin(), row.end(), 1));
  return best;
}

int compute_delta_md_prime(const ModularDecomposition& md) {
  int best = 0;
  for (const auto& node : md.nodes) {
    if (node.kind != ModKind::Prime) continue;
    for (const auto& row : node.quotient)
      best = std::max<int>(best, std::count(row.begin(), row.end(), 1));
  }
  return best;
}

VertexSet module_closure(const Graph& g, const VertexSet& seed) {
  std::vector<char> inside(g.n(), 1);
  VertexSet all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  return closure_within(g, inside, all, seed);
}

bool is_module(const Graph& g, const VertexSet& m) {
  std::vector<char> in_m(g.n(), 0);
  for (Vertex v : m) in_m[v] = 1;
  for (Vertex z = 0; z < g.n(); ++z) {
    if (in_m[z]) continue;
    std::size_t c = 0;
    for (Vertex u : g.neighbors(z)) c += in_m[u];
    if (c != 0 && c != m.size()) return false;
  }
  return true;
}

void check_modular_decomposition(const Graph& g,
                                 const ModularDecomposition& md) {
  auto fail = [](const std::string& why) { throw std::logic_error(why); };
  if (md.nodes[md.root].vertices.size() != static_cast<std::size_t>(g.n()))
    fail("root does not cover V(G)");
  for (std::size_t x = 0; x < md.nodes.size(); ++x) {
    const ModNode& node = md.nodes[x];
    if (node.kind == ModKind::Leaf) {
      if (node.vertices != VertexSet{node.vertex}) fail("bad leaf");
      continue;
    }
    VertexSet joined;
    for (int c : node.children)
      joined = set_union(joined, md.nodes[c].vertices);
    std::size_t total = 0;
    for (int c : node.children) total += md.nodes[c].vertices.size();
    if (joined != node.vertices || total != joined.size())
      fail("children of node " + std::to_string(x) + " do not partition V_x");
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (!is_module(g, md.nodes[node.children[i]].vertices))
        fail("child of node " + std::to_string(x) + " is not a module");
      for (std::size_t j = 0; j < node.children.size(); ++j) {
        if (i == j) continue;
        for (Vertex a : md.nodes[node.children[i]].vertices)
          for (Vertex b : md.nodes[node.children[j]].vertices)
            if (g.adjacent(a, b) != static_cast<bool>(node.quotient[i][j]))
              fail("node " + std::to_string(x) + ": children " +
                   std::to_string(i) + "," + std::to_string(j) +
                   " are neither complete nor anticomplete as recorded");
      }
    }
    const std::size_t c = node.children.size();
    std::size_t edges = 0;
    for (const auto& row : node.quotient)
      edges += std::count(row.begin(), row.end(), 1);
    if (node.kind == ModKind::Parallel && edges != 0)
      fail("parallel node with quotient edges");
    if (node.kind == ModKind::Series && edges != c * (c - 1))
      fail("series node whose quotient is not complete");
  }
}

void dump_modular(std::ostream& out, const ModularDecomposition& md) {
  for (std::size_t x = 0; x < md.nodes.size(); ++x) {
    const ModNode& node = md.nodes[x];
    out << "node " << x << " kind=" << mod_kind_name(node.kind) << " children=";
    for (std::size_t i = 0; i < node.children.size(); ++i)
      out << (i ? "," : "") << node.children[i];
    out << " quotient-edges=";
    bool first = true;
    for (std::size_t i = 0; i < node.children.size(); ++i)
      for (std::size_t j = i + 1; j < node.children.size(); ++j)
        if (node.quotient[i][j]) {
          out << (first ? "" : ",") << node.children[i] << '-'
              << node.children[j];
          first = false;
        }
    if (node.kind == ModKind::Leaf) out << " vertex=" << node.vertex + 1;
    out << '\n';
  }
}

}  // namespace lsvc
