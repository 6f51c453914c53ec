#include <gtest/gtest.h>

#include <sstream>

#include "lsvc/knap_ls.hpp"
#include "lsvc/modular_decomposition.hpp"
#include "lsvc/modular_solver.hpp"
#include "lsvc/oracle.hpp"
#include "test_support.hpp"

namespace lsvc {
namespace {

using testing::weighted_path_instance;
using testing::random_instance;
using testing::unit_instance;

// Every vertex of one P4 adjacent to every vertex of another.
Graph joined_p4s() {
  std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {1, 2}, {2, 3},
                                           {4, 5}, {5, 6}, {6, 7}};
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 4; v < 8; ++v) e.emplace_back(u, v);
  return Graph(8, e);
}

// Brute-force module test over all subsets.
bool has_nontrivial_module(const Graph& g) {
  for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
    VertexSet m;
    for (Vertex v = 0; v < g.n(); ++v)
      if (mask >> v & 1) m.push_back(v);
    if (m.size() >= 2 && static_cast<int>(m.size()) < g.n() && is_module(g, m))
      return true;
  }
  return false;
}

TEST(ModularDecomposition, Examples) {
  ModularDecomposition edgeless = compute_modular_decomposition(Graph(4, {}));
  EXPECT_EQ(edgeless.nodes[edgeless.root].kind, ModKind::Parallel);
  EXPECT_EQ(edgeless.width, 4);
  EXPECT_EQ(compute_delta_md(edgeless), 0);

  Graph p4 = path_graph(4);
  EXPECT_FALSE(has_nontrivial_module(p4));
  ModularDecomposition pmd = compute_modular_decomposition(p4);
  EXPECT_EQ(pmd.nodes[pmd.root].kind, ModKind::Prime);
  EXPECT_EQ(pmd.nodes[pmd.root].children.size(), 4u);
  EXPECT_EQ(pmd.width, 4);
  EXPECT_EQ(compute_delta_md(pmd), 2);

  ModularDecomposition join = compute_modular_decomposition(joined_p4s());
  const ModNode& root = join.nodes[join.root];
  EXPECT_EQ(root.kind, ModKind::Series);
  ASSERT_EQ(root.children.size(), 2u);
  for (int c : root.children) {
    EXPECT_EQ(join.nodes[c].kind, ModKind::Prime);
    EXPECT_EQ(join.nodes[c].children.size(), 4u);
  }
  EXPECT_EQ(join.width, 4);
}

TEST(ModularDecomposition, ModuleClosure) {
  Graph p4 = path_graph(4);
  EXPECT_EQ(module_closure(p4, {0, 1}), (VertexSet{0, 1, 2, 3}));
  Graph star = star_graph(3);
  EXPECT_EQ(module_closure(star, {1, 2}), (VertexSet{1, 2}));
  EXPECT_TRUE(is_module(star, {1, 2, 3}));
  EXPECT_FALSE(is_module(star, {0, 1}));
}

TEST(ModularDecomposition, RandomGraphsPassChecks) {
  Rng rng(71);
  for (int it = 0; it < 400; ++it) {
    Graph g = it % 2 ? gnp(std::uniform_int_distribution<int>(1, 30)(rng),
                           0.3, rng)
                     : stars_of_cliques(3, 4, rng);
    ModularDecomposition md = compute_modular_decomposition(g);
    EXPECT_NO_THROW(check_modular_decomposition(g, md));
    EXPECT_LE(compute_delta_md(md), g.max_degree());
    EXPECT_LT(compute_delta_md_prime(md), std::max(md.width, 1));
    // Prime quotients have no module of the graph spanning several children.
    for (const ModNode& x : md.nodes) {
      if (x.kind != ModKind::Prime) continue;
      Graph q(static_cast<int>(x.children.size()), {});
      std::vector<std::pair<Vertex, Vertex>> e;
      for (std::size_t i = 0; i < x.children.size(); ++i)
        for (std::size_t j = i + 1; j < x.children.size(); ++j)
          if (x.quotient[i][j]) e.emplace_back(i, j);
      q = Graph(static_cast<int>(x.children.size()), e);
      if (q.n() <= 12) EXPECT_FALSE(has_nontrivial_module(q));
    }
  }
}

TEST(ModularDecomposition, DumpListsEveryNode) {
  ModularDecomposition md = compute_modular_decomposition(path_graph(4));
  std::ostringstream out;
  dump_modular(out, md);
  std::string text = out.str();
  EXPECT_EQ(static_cast<std::size_t>(
                std::count(text.begin(), text.end(), '\n')),
            md.nodes.size());
  EXPECT_NE(text.find("kind=prime"), std::string::npos);
}

KnapInstance knap(Graph g, std::vector<char> cover, int k) {
  KnapInstance ki;
  const int n = g.n();
  ki.graph = std::move(g);
  ki.in_cover = std::move(cover);
  ki.k = k;
  ki.gamma.assign(n, std::vector<Gain>(k + 1, 0));
  ki.cost.assign(n, 1);
  ki.blocked.assign(n, 0);
  return ki;
}

TEST(KnapLs, Examples) {
  KnapInstance additive = knap(Graph(3, {}), {0, 0, 0}, 4);
  for (auto& g : additive.gamma)
    for (int c = 0; c <= 4; ++c) g[c] = c;
  EXPECT_EQ(solve_knap_ls(additive).value, 4);
  EXPECT_EQ(knap_brute_force(additive).value, 4);

  KnapInstance edge = knap(Graph(2, {{0, 1}}), {1, 0}, 2);
  edge.gamma[0] = {0, 5, 5};
  KnapSolution s = solve_knap_ls(edge);
  EXPECT_EQ(s.value, 4);
  EXPECT_EQ(s.swap, (VertexSet{0, 1}));
  EXPECT_EQ(knap_evaluate(edge, s.swap, s.internal), 4);
  EXPECT_EQ(knap_brute_force(edge).value, 4);

  KnapInstance none = knap(Graph(2, {{0, 1}}), {1, 0}, 0);
  KnapSolution z = solve_knap_ls(none);
  EXPECT_EQ(z.value, 0);
  EXPECT_TRUE(z.swap.empty());
  EXPECT_EQ(z.internal, (std::vector<int>{0, 0}));
}

TEST(KnapLs, RejectsNonMonotoneGamma) {
  KnapInstance bad = knap(Graph(1, {}), {0}, 2);
  bad.gamma[0] = {0, 3, 1};
  EXPECT_THROW(solve_knap_ls(bad), PreconditionError);
}

TEST(KnapLs, AgreesWithBruteForce) {
  Rng rng(72);
  std::uniform_int_distribution<int> inc(0, 3), cost(0, 3);
  for (int it = 0; it < 5000; ++it) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    Graph g = gnp(n, std::uniform_real_distribution<double>(0.1, 0.7)(rng), rng);
    std::vector<char> cover(n, 0);
    for (Vertex v : random_cover(g, 0.3, rng)) cover[v] = 1;
    KnapInstance ki = knap(g, cover, std::uniform_int_distribution<int>(0, 5)(rng));
    for (Vertex v = 0; v < n; ++v) {
      for (int c = 1; c <= ki.k; ++c) ki.gamma[v][c] = ki.gamma[v][c - 1] + inc(rng);
      ki.cost[v] = cost(rng);
      ki.blocked[v] = !cover[v] && std::bernoulli_distribution(0.15)(rng);
    }
    KnapSolution a = solve_knap_ls(ki);
    ASSERT_EQ(a.value, knap_brute_force(ki).value);
    ASSERT_EQ(knap_evaluate(ki, a.swap, a.internal), a.value);
  }
}

TEST(ModularSolver, Examples) {
  Graph edgeless(5, {});
  Instance all = unit_instance(edgeless, {0, 1, 2, 3, 4}, 3, 3);
  ModularDecomposition md = compute_modular_decomposition(edgeless);
  SolveReport r = solve_glswvc_mw(all, md);
  ASSERT_TRUE(r.yes());
  EXPECT_EQ(r.swap->vertices.size(), 3u);

  Instance wp = weighted_path_instance(2, 2);
  SolveReport w = solve_glswvc_mw(wp, compute_modular_decomposition(wp.graph()));
  ASSERT_TRUE(w.yes());
  EXPECT_EQ(w.swap->improvement, 2);

  auto both = [](const Instance& inst) {
    ModularDecomposition m = compute_modular_decomposition(inst.graph());
    bool a = solve_glsvc_mw(inst, m).yes();
    EXPECT_EQ(a, solve_glsvc_delta_md(inst, m).yes());
    EXPECT_EQ(a, solve_glswvc_mw(inst, m).yes());
    return a;
  };
  EXPECT_TRUE(both(unit_instance(star_graph(3), {1, 2, 3}, 4, 2)));
  EXPECT_FALSE(both(unit_instance(complete_graph(3), {0, 1}, 3, 1)));
}

TEST(ModularSolver, DeltaMdRejectsWeights) {
  Instance wp = weighted_path_instance(2, 2);
  EXPECT_THROW(
      solve_glsvc_delta_md(wp, compute_modular_decomposition(wp.graph())),
      ModeError);
}

TEST(ModularSolver, TablesAgreeAcrossAlgorithms) {
  Rng rng(73);
  for (int it = 0; it < 1000; ++it) {
    Instance inst = random_instance(rng, Mode::GLSVC);
    ModularDecomposition md = compute_modular_decomposition(inst.graph());
    ModularTables mw = run_mw_dp(inst, md, -1);
    ModularTables dm = run_delta_md(inst, md);
    ASSERT_EQ(mw.d, dm.d);
    ASSERT_EQ(mw.root_value, oracle_solve(inst).best_any.improvement);
    EXPECT_EQ(improvement(inst, dm.swap), dm.root_value);
    EXPECT_TRUE(is_valid_swap(inst, dm.swap));
  }
}

TEST(ModularSolver, AgreesWithOracle) {
  Rng rng(74);
  for (int it = 0; it < 2000; ++it) {
    const Mode mode = static_cast<Mode>(it % 4);
    Instance inst = random_instance(rng, mode);
    ModularDecomposition md = compute_modular_decomposition(inst.graph());
    const bool expect = oracle_solve(inst).yes();
    std::vector<SolveReport> reports{solve_glswvc_mw(inst, md)};
    if (inst.unit()) {
      reports.push_back(solve_glsvc_mw(inst, md));
      reports.push_back(solve_glsvc_delta_md(inst, md));
    }
    for (const SolveReport& r : reports) {
      ASSERT_EQ(r.yes(), expect);
      if (r.yes()) {
        EXPECT_TRUE(is_valid_swap(inst, r.swap->vertices));
        EXPECT_GE(r.swap->improvement, inst.d());
        EXPECT_LE(static_cast<int>(r.swap->vertices.size()), inst.k());
      }
    }
  }
}

}  // namespace
}  // namespace lsvc
