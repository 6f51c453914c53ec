#include <gtest/gtest.h>

#include <set>

#include "lsvc/connected_swaps.hpp"
#include "lsvc/degree_solver.hpp"
#include "lsvc/oracle.hpp"
#include "test_support.hpp"

namespace lsvc {
namespace {

using testing::weighted_path_instance;
using testing::random_instance;
using testing::unit_instance;

Graph two_p3_stars() { return Graph(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}}); }

bool contains(const std::vector<VertexSet>& sets, const VertexSet& s) {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

bool connected(const Graph& g, const VertexSet& w) {
  return connected_components_of_swap(g, w).size() == 1;
}

TEST(ConnectedSwaps, Examples) {
  auto p3 = enumerate_connected_swaps(
      unit_instance(path_graph(3), {0, 2}, 3, 1), 3, false);
  EXPECT_TRUE(contains(p3, {0, 1, 2}));
  auto wp = enumerate_connected_swaps(weighted_path_instance(2, 2), 2, false);
  EXPECT_TRUE(contains(wp, {0}));
  EXPECT_TRUE(contains(wp, {1, 2}));
  auto single = enumerate_connected_swaps(
      Instance::create(Graph(1, {}), {0}, {}, 1, 1, Mode::GLSWVC), 1, false);
  EXPECT_EQ(single, std::vector<VertexSet>{{0}});
}

// Brute force over all subsets: valid, connected, containing a cover vertex.
TEST(ConnectedSwaps, MatchBruteForceExactlyOnce) {
  Rng rng(41);
  for (int it = 0; it < 300; ++it) {
    Instance inst = random_instance(rng, Mode::GLSVC, {.n_max = 10});
    for (int kmax = 1; kmax <= 5; ++kmax) {
      for (bool balanced : {false, true}) {
        auto got = enumerate_connected_swaps(inst, kmax, balanced);
        std::set<VertexSet> unique(got.begin(), got.end());
        ASSERT_EQ(unique.size(), got.size());
        std::set<VertexSet> want;
        for (std::uint32_t mask = 1; mask < (1u << inst.n()); ++mask) {
          VertexSet w;
          int black = 0;
          for (Vertex v = 0; v < inst.n(); ++v)
            if (mask >> v & 1) {
              w.push_back(v);
              black += inst.in_cover(v);
            }
          if (static_cast<int>(w.size()) > kmax || black == 0) continue;
          if (!is_valid_swap(inst, w) || !connected(inst.graph(), w)) continue;
          if (balanced && black != static_cast<int>(w.size()) - black + 1)
            continue;
          want.insert(w);
        }
        ASSERT_EQ(unique, want);
      }
    }
  }
}

TEST(SwapFamilyUnweighted, StarExample) {
  Instance inst = unit_instance(star_graph(3), {1, 2, 3}, 4, 2);
  SwapFamily f = compute_swap_family_unweighted(inst);
  ASSERT_EQ(f.size(), 2);
  ASSERT_TRUE(f[1].has_value());
  EXPECT_EQ(improvement(inst, *f[1]), 1);
  EXPECT_EQ(f[1]->size(), 3u);
  ASSERT_TRUE(f[2].has_value());
  EXPECT_EQ(*f[2], (VertexSet{0, 1, 2, 3}));
}

TEST(SwapFamilyUnweighted, TriangleHasNone) {
  SwapFamily f =
      compute_swap_family_unweighted(unit_instance(complete_graph(3), {0, 1}, 3, 1));
  for (int j = 1; j <= f.size(); ++j) EXPECT_FALSE(f[j].has_value());
}

// W_j is capped at k-d+j vertices: at k=3, d=2 a star's 3-swap exceeds the
// cap for W_1, at k=4 it fits.
TEST(SwapFamilyUnweighted, TwoStars) {
  SwapFamily tight = compute_swap_family_unweighted(
      unit_instance(two_p3_stars(), {1, 2, 4, 5}, 3, 2));
  EXPECT_FALSE(tight[1].has_value());
  EXPECT_FALSE(tight[2].has_value());
  Instance inst = unit_instance(two_p3_stars(), {1, 2, 4, 5}, 4, 2);
  SwapFamily f = compute_swap_family_unweighted(inst);
  ASSERT_TRUE(f[1].has_value());
  EXPECT_EQ(f[1]->size(), 3u);
  EXPECT_TRUE(connected(inst.graph(), *f[1]));
  EXPECT_FALSE(f[2].has_value());
}

TEST(SwapFamilyWeighted, Examples) {
  Instance wp = weighted_path_instance(2, 2);
  SwapFamily f = compute_swap_family_weighted(wp);
  EXPECT_EQ(f[1], VertexSet{0});
  EXPECT_EQ(f[2], (VertexSet{1, 2}));

  SwapFamily empty = compute_swap_family_weighted(
      Instance::create(Graph(3, {}), {}, {}, 3, 1, Mode::GLSWVC));
  for (int j = 1; j <= empty.size(); ++j) EXPECT_FALSE(empty[j].has_value());

  SwapFamily one = compute_swap_family_weighted(
      Instance::create(Graph(1, {}), {0}, {5}, 3, 1, Mode::GLSWVC));
  EXPECT_EQ(one[1], VertexSet{0});
  for (int j = 2; j <= one.size(); ++j) EXPECT_FALSE(one[j].has_value());
}

TEST(SwapFamily, MembersAreValidConnectedAndOptimal) {
  Rng rng(42);
  for (int it = 0; it < 300; ++it) {
    Instance inst = random_instance(rng, Mode::GLSWVC, {.n_max = 10});
    if (inst.k() == 0) continue;
    SwapFamily f = compute_swap_family_weighted(inst);
    auto all = enumerate_connected_swaps(inst, inst.k(), false);
    for (int j = 1; j <= f.size(); ++j) {
      Gain best = kNegInf;
      for (const VertexSet& w : all)
        if (static_cast<int>(w.size()) == j)
          best = std::max(best, improvement(inst, w));
      if (!f[j]) {
        EXPECT_TRUE(is_neg_inf(best));
        continue;
      }
      EXPECT_EQ(static_cast<int>(f[j]->size()), j);
      EXPECT_TRUE(is_valid_swap(inst, *f[j]));
      EXPECT_TRUE(connected(inst.graph(), *f[j]));
      EXPECT_EQ(improvement(inst, *f[j]), best);
    }
  }
}

TEST(DegreeSolver, GlsvcExamples) {
  SolveReport star =
      solve_glsvc_by_degree(unit_instance(star_graph(3), {1, 2, 3}, 4, 2));
  ASSERT_TRUE(star.yes());
  EXPECT_EQ(star.swap->vertices, (VertexSet{0, 1, 2, 3}));
  SolveReport two =
      solve_glsvc_by_degree(unit_instance(two_p3_stars(), {1, 2, 4, 5}, 6, 2));
  ASSERT_TRUE(two.yes());
  EXPECT_EQ(two.swap->vertices.size(), 6u);
  EXPECT_FALSE(
      solve_glsvc_by_degree(unit_instance(complete_graph(3), {0, 1}, 3, 1)).yes());
}

TEST(DegreeSolver, GlswvcExamples) {
  SolveReport a = solve_glswvc_by_degree(weighted_path_instance(2, 2));
  ASSERT_TRUE(a.yes());
  EXPECT_EQ(a.swap->vertices, (VertexSet{1, 2}));
  SolveReport b = solve_glswvc_by_degree(weighted_path_instance(1, 1));
  ASSERT_TRUE(b.yes());
  EXPECT_EQ(b.swap->vertices, VertexSet{0});
  Instance light = Instance::create(path_graph(3), {0, 1}, {1, 1, 1}, 2, 2,
                                    Mode::GLSWVC);
  EXPECT_FALSE(solve_glswvc_by_degree(light).yes());
}

TEST(DegreeSolver, LswvcExamples) {
  Instance wp = Instance::create(path_graph(3), {0, 1}, {1, 3, 1}, 1, 1,
                                 Mode::LSWVC);
  SolveReport a = solve_lswvc_by_degree(wp);
  ASSERT_TRUE(a.yes());
  EXPECT_EQ(a.swap->vertices, VertexSet{0});
  auto p3 = [](const VertexSet& s) {
    return Instance::create(path_graph(3), s, {}, 3, 1, Mode::LSWVC);
  };
  EXPECT_FALSE(solve_lswvc_by_degree(p3({1})).yes());
  SolveReport c = solve_lswvc_by_degree(p3({0, 2}));
  ASSERT_TRUE(c.yes());
  EXPECT_EQ(c.swap->vertices, (VertexSet{0, 1, 2}));
}

TEST(DegreeSolver, AgreesWithOracle) {
  Rng rng(43);
  testing::RandomInstanceSpec spec{.n_max = 14, .p = {0.15, 0.3}};
  for (int it = 0; it < 2000; ++it) {
    const Mode mode = it % 3 == 0   ? Mode::GLSVC
                      : it % 3 == 1 ? Mode::GLSWVC
                                    : Mode::LSWVC;
    Instance inst = random_instance(rng, mode, spec);
    if (inst.graph().max_degree() > 5) continue;
    SolveReport r = mode == Mode::GLSVC    ? solve_glsvc_by_degree(inst)
                    : mode == Mode::GLSWVC ? solve_glswvc_by_degree(inst)
                                           : solve_lswvc_by_degree(inst);
    ASSERT_EQ(r.yes(), oracle_solve(inst).yes());
    if (r.yes()) {
      EXPECT_TRUE(is_valid_swap(inst, r.swap->vertices));
      EXPECT_GE(r.swap->improvement, inst.d());
      EXPECT_LE(static_cast<int>(r.swap->vertices.size()), inst.k());
    }
  }
}

}  // namespace
}  // namespace lsvc
