#include <gtest/gtest.h>

#include "lsvc/connected_swaps.hpp"
#include "lsvc/oracle.hpp"
#include "lsvc/swap_algebra.hpp"
#include "test_support.hpp"

namespace lsvc {
namespace {

using testing::eight_vertex_instance;
using testing::weighted_path_instance;
using testing::random_instance;
using testing::unit_instance;

TEST(Oracle, Examples) {
  OracleResult p3 = oracle_solve(unit_instance(path_graph(3), {0, 2}, 3, 1));
  ASSERT_TRUE(p3.yes());
  EXPECT_EQ(p3.best->vertices, (VertexSet{0, 1, 2}));
  EXPECT_EQ(p3.best->improvement, 1);

  OracleResult wp = oracle_solve(weighted_path_instance(2, 2));
  ASSERT_TRUE(wp.yes());
  EXPECT_EQ(wp.best->vertices, (VertexSet{1, 2}));
}

// Frozen regression fixture: the eight-vertex cover admits no improving 4-swap.
TEST(Oracle, EightVertexIsLocallyOptimalAtK4) {
  OracleResult r = oracle_solve(eight_vertex_instance(4, 1));
  EXPECT_FALSE(r.yes());
  EXPECT_EQ(r.best_any.improvement, 0);
}

TEST(Oracle, RefusesLargeInstancesUnlessForced) {
  Graph g = path_graph(30);
  Rng rng(1);
  Instance inst = unit_instance(g, random_cover(g, 0, rng), 5, 1);
  EXPECT_THROW(oracle_solve(inst), RefusalError);
  EXPECT_NO_THROW(oracle_solve(inst.with_budget(4, 1)));
}

TEST(OracleConstrained, Examples) {
  Instance f = eight_vertex_instance(6, 1);
  EXPECT_EQ(oracle_constrained(f, {}, {}).yes(), oracle_solve(f).yes());
  VertexSet all{0, 1, 2, 3, 4, 5, 6, 7};
  OracleOptions opt;
  opt.collect_all = true;
  OracleResult none = oracle_constrained(f.with_budget(6, 0), {}, all, opt);
  ASSERT_EQ(none.all_good.size(), 1u);
  EXPECT_TRUE(none.all_good[0].vertices.empty());

  OracleResult with_v1 = oracle_constrained(f.with_budget(6, -10), {0}, {}, opt);
  const VertexSet forced{0, 3, 4};
  EXPECT_FALSE(with_v1.all_good.empty());
  for (const Swap& s : with_v1.all_good)
    EXPECT_TRUE(std::includes(s.vertices.begin(), s.vertices.end(),
                              forced.begin(), forced.end()));
  EXPECT_EQ(oracle_constrained(f, {0}, {}).yes(),
            oracle_solve(make_swap_instance(f, {0}).instance).yes());
}

TEST(Oracle, EverySwapReportedIsGood) {
  Rng rng(31);
  for (int it = 0; it < 200; ++it) {
    Instance inst = random_instance(rng, Mode::GLSWVC, {.n_max = 9});
    OracleOptions opt;
    opt.collect_all = true;
    OracleResult r = oracle_solve(inst, opt);
    for (const Swap& s : r.all_good) {
      EXPECT_TRUE(is_valid_swap(inst, s.vertices));
      EXPECT_GE(s.improvement, inst.d());
      EXPECT_LE(static_cast<int>(s.vertices.size()), inst.k());
      EXPECT_EQ(s.improvement, improvement(inst, s.vertices));
    }
    EXPECT_EQ(r.yes(), !r.all_good.empty());
  }
}

TEST(Oracle, Monotonicity) {
  Rng rng(32);
  for (int it = 0; it < 100; ++it) {
    Instance base = random_instance(rng, Mode::GLSWVC, {.n_max = 10});
    Gain prev = kNegInf;
    for (int k = 0; k <= 5; ++k) {
      Gain best = oracle_solve(base.with_budget(k, 0)).best_any.improvement;
      EXPECT_GE(best, prev);
      prev = best;
      bool prev_yes = true;
      for (Gain d = 0; d <= 12; ++d) {
        bool yes = oracle_solve(base.with_budget(k, d)).yes();
        EXPECT_TRUE(prev_yes || !yes);
        prev_yes = yes;
      }
    }
  }
}

TEST(Oracle, ConnectedWitnessInLocalSearchMode) {
  Rng rng(33);
  for (int it = 0; it < 300; ++it) {
    Instance inst = random_instance(rng, Mode::LSWVC, {.n_max = 10});
    OracleOptions opt;
    opt.collect_all = true;
    OracleResult r = oracle_solve(inst, opt);
    if (!r.yes()) continue;
    bool connected = false;
    for (const Swap& s : r.all_good)
      if (connected_components_of_swap(inst.graph(), s.vertices).size() == 1)
        connected = true;
    EXPECT_TRUE(connected);
  }
}

TEST(Oracle, MinimalGoodSwapsRespectSubsetBound) {
  Rng rng(34);
  for (int it = 0; it < 200; ++it) {
    Instance inst = random_instance(rng, Mode::GLSVC, {.n_max = 10});
    OracleOptions opt;
    opt.collect_all = true;
    OracleResult r = oracle_solve(inst, opt);
    for (const Swap& s : r.all_good) {
      bool minimal = true;
      for (const Swap& t : r.all_good)
        if (t.vertices.size() < s.vertices.size() &&
            std::includes(s.vertices.begin(), s.vertices.end(),
                          t.vertices.begin(), t.vertices.end()))
          minimal = false;
      if (!minimal) continue;
      VertexSet sx;
      for (Vertex v : s.vertices)
        if (inst.in_cover(v)) sx.push_back(v);
      VertexSet cx =
          set_minus(s.vertices, closed_neighborhood(inst.graph(), sx));
      EXPECT_LE(static_cast<int>(set_union(sx, cx).size()),
                small_subset_bound(inst));
    }
  }
}

}  // namespace
}  // namespace lsvc
