#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "lsvc/degree_solver.hpp"
#include "lsvc/hindex_solver.hpp"
#include "lsvc/modular_solver.hpp"
#include "lsvc/oracle.hpp"
#include "lsvc/run.hpp"
#include "lsvc/split_solver.hpp"
#include "lsvc/swap_algebra.hpp"
#include "lsvc/treewidth_solver.hpp"
#include "test_support.hpp"

using namespace lsvc;
using lsvc::testing::random_instance;
using lsvc::testing::RandomInstanceSpec;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Records the first failure only so the summary line stays short.
void fail(Verdict& o, const std::string& msg) {
  if (o.pass) o.detail = msg;
  o.pass = false;
}

std::string describe(const Instance& inst) {
  std::ostringstream out;
  out << mode_name(inst.mode()) << " n=" << inst.n() << " k=" << inst.k()
      << " d=" << inst.d() << " S={";
  for (Vertex v : inst.cover()) out << ' ' << v;
  out << " } E={";
  for (auto [u, v] : inst.graph().edges()) out << ' ' << u << '-' << v;
  out << " }";
  if (!inst.unit()) {
    out << " w={";
    for (Weight w : inst.weights()) out << ' ' << w;
    out << " }";
  }
  return out.str();
}

Mode pick_mode(Rng& rng) {
  static const Mode modes[] = {Mode::LSVC, Mode::GLSVC, Mode::LSWVC,
                               Mode::GLSWVC};
  return modes[std::uniform_int_distribution<int>(0, 3)(rng)];
}

// Random instance with d ≤ k in every gap mode.
Instance criterion_instance(Rng& rng, Mode mode) {
  Instance inst = random_instance(rng, mode);
  if (mode == Mode::GLSWVC) {
    Gain d = std::uniform_int_distribution<int>(0, inst.k())(rng);
    inst = inst.with_budget(inst.k(), d);
  }
  return inst;
}

Verdict oracle_equivalence() {
  Verdict o;
  Rng rng(101);
  const Algorithm algos[] = {Algorithm::Degree,  Algorithm::HIndex,
                             Algorithm::Treewidth, Algorithm::Modular,
                             Algorithm::ModularDegree, Algorithm::Split};
  int yes_count = 0, runs = 0;
  for (int i = 0; i < 2000; ++i) {
    Instance inst = criterion_instance(rng, pick_mode(rng));
    const bool expect = oracle_solve(inst).yes();
    yes_count += expect;
    for (Algorithm a : algos) {
      if (a == Algorithm::ModularDegree && !inst.unit()) continue;
      SolveReport r;
      ++runs;
      try {
        r = solve_with(inst, a);
      } catch (const std::exception& e) {
        fail(o, std::string(algorithm_name(a)) + " threw '" + e.what() +
                    "' on " + describe(inst));
        continue;
      }
      if (r.yes() != expect)
        fail(o, std::string(algorithm_name(a)) + " answered " +
                    (r.yes() ? "yes" : "no") + " on " + describe(inst));
      if (r.yes()) {
        const VertexSet& w = r.swap->vertices;
        if (!is_valid_swap(inst, w) || static_cast<int>(w.size()) > inst.k() ||
            improvement(inst, w) < inst.d())
          fail(o, std::string(algorithm_name(a)) + " bad witness on " +
                      describe(inst));
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(runs) + " solver runs, " +
               std::to_string(yes_count) + "/2000 yes-instances";
  return o;
}

Verdict eight_vertex_fixture() {
  Verdict o;
  const int k = 6;
  const Gain d = 1;
  Instance inst = testing::eight_vertex_instance(k, d);
  SwapInstance si = make_swap_instance(inst, {0, 5});
  const Instance& c = si.instance;
  if (si.to_parent != std::vector<Vertex>{2, 6, 7})
    fail(o, "surviving vertices differ from {v3,v7,v8}");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : c.graph().edges())
    edges.emplace_back(si.to_parent[u], si.to_parent[v]);
  std::sort(edges.begin(), edges.end());
  if (edges != std::vector<std::pair<Vertex, Vertex>>{{2, 6}, {2, 7}})
    fail(o, "edges differ from {v3v7, v3v8}");
  if (lift(si.to_parent, c.cover()) != VertexSet{2})
    fail(o, "S' differs from {v3}");
  if (c.k() != k - 4) fail(o, "k' != k-4");
  if (c.d() != d + 2) fail(o, "d' != d+2");
  if (si.extension != VertexSet{0, 3, 4, 5}) fail(o, "extension differs");
  return o;
}

Verdict weighted_path_fixture() {
  Verdict o;
  const Algorithm algos[] = {Algorithm::Oracle, Algorithm::Degree,
                             Algorithm::HIndex, Algorithm::Treewidth,
                             Algorithm::Modular, Algorithm::Split};
  for (Algorithm a : algos) {
    SolveReport yes = solve_with(testing::weighted_path_instance(2, 2), a);
    if (!yes.yes() || yes.swap->vertices != VertexSet{1, 2})
      fail(o, std::string(algorithm_name(a)) + " missed {v,w} at k=2 d=2");
    if (solve_with(testing::weighted_path_instance(2, 3), a).yes())
      fail(o, std::string(algorithm_name(a)) + " answered yes at k=2 d=3");
  }
  return o;
}

Verdict parity_lemma() {
  Verdict o;
  Rng rng(202);
  int done = 0, yes_count = 0;
  while (done < 500) {
    Instance inst = random_instance(rng, Mode::GLSVC);
    if ((inst.k() + inst.d()) % 2 == 0) continue;
    ++done;
    Instance reduced = apply_parity_reduction(inst);
    if (reduced.k() != inst.k() - 1) fail(o, "k not reduced on " + describe(inst));
    const bool before = oracle_solve(inst).yes();
    yes_count += before;
    if (before != oracle_solve(reduced).yes())
      fail(o, "answer changed on " + describe(inst));
  }
  if (o.pass) o.detail = std::to_string(yes_count) + "/500 yes-instances";
  return o;
}

// A random seed W with |W| ≤ 2 whose cover part is independent.
VertexSet random_seed(const Instance& inst, Rng& rng) {
  std::uniform_int_distribution<int> size(0, 2), vd(0, inst.n() - 1);
  VertexSet w;
  for (int s = size(rng); s > 0; --s) w.push_back(vd(rng));
  w = normalized(w);
  if (w.size() == 2 && inst.in_cover(w[0]) && inst.in_cover(w[1]) &&
      inst.graph().adjacent(w[0], w[1]))
    w.pop_back();
  return w;
}

Verdict swap_instance_equivalence() {
  Verdict o;
  Rng rng(303);
  int yes_count = 0, nonempty = 0;
  for (int i = 0; i < 500; ++i) {
    Instance inst = random_instance(rng, pick_mode(rng));
    VertexSet w = random_seed(inst, rng);
    nonempty += !w.empty();
    const bool direct = oracle_constrained(inst, w, {}).yes();
    yes_count += direct;
    SwapInstance si = make_swap_instance(inst, w);
    const bool via = oracle_solve(si.instance).yes();
    if (direct != via) fail(o, "mismatch on " + describe(inst));
  }
  if (o.pass)
    o.detail = std::to_string(nonempty) + " non-empty seeds, " +
               std::to_string(yes_count) + "/500 yes";
  return o;
}

Verdict small_subset_lemma() {
  Verdict o;
  Rng rng(404);
  RandomInstanceSpec spec;
  spec.n_max = 10;
  std::size_t checked = 0;
  for (int i = 0; i < 200; ++i) {
    Instance inst = random_instance(rng, Mode::GLSVC, spec);
    OracleOptions opt;
    opt.collect_all = true;
    OracleResult r = oracle_solve(inst, opt);
    if (r.truncated) fail(o, "enumeration truncated");
    for (const Swap& s : r.all_good) {
      bool minimal = true;
      for (const Swap& t : r.all_good)
        if (t.vertices.size() < s.vertices.size() &&
            std::includes(s.vertices.begin(), s.vertices.end(),
                          t.vertices.begin(), t.vertices.end()))
          minimal = false;
      if (!minimal) continue;
      ++checked;
      VertexSet sx;
      for (Vertex v : s.vertices)
        if (inst.in_cover(v)) sx.push_back(v);
      VertexSet cx = set_minus(s.vertices, closed_neighborhood(inst.graph(), sx));
      const int size = static_cast<int>(set_union(sx, cx).size());
      if (2 * size > inst.k() + inst.d())
        fail(o, "minimal swap too large on " + describe(inst));
    }
  }
  if (checked == 0) fail(o, "no minimal good swaps generated");
  if (o.pass) o.detail = std::to_string(checked) + " minimal good swaps checked";
  return o;
}

Verdict cross_decomposition() {
  Verdict o;
  Rng rng(505);
  for (int i = 0; i < 500; ++i) {
    const bool unit = i % 2 == 0;
    Instance inst = random_instance(rng, unit ? Mode::GLSVC : Mode::GLSWVC);
    const Gain best = oracle_solve(inst).best_any.improvement;
    if (unit) {
      ModularDecomposition md = compute_modular_decomposition(inst.graph());
      ModularTables mw = run_mw_dp(inst, md, -1);
      ModularTables dm = run_delta_md(inst, md);
      if (mw.d != dm.d) fail(o, "modular tables differ on " + describe(inst));
      if (mw.root_value != best)
        fail(o, "modular root value differs from oracle on " + describe(inst));
    }
    TwOutcome tw = run_tw_dp(inst, heuristic_tree_decomposition(inst.graph()), -1);
    if (tw.root_value != best)
      fail(o, "treewidth value differs from oracle on " + describe(inst));
    SplitTables sw =
        run_split_dp(inst, compute_split_decomposition(inst.graph()), -1);
    if (sw.root_value != best)
      fail(o, "split value differs from oracle on " + describe(inst));
  }
  return o;
}

// Least-squares slope of log(time) against log(n).
double loglog_slope(const std::vector<int>& ns, const std::vector<double>& ts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    double x = std::log(ns[i]), y = std::log(std::max(ts[i], 1e-3));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

// Median of several timed runs, in milliseconds.
double time_ms(const std::function<void()>& f, int reps = 5) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    Stopwatch sw;
    f();
    t.push_back(sw.ms());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

Verdict scaling_sanity() {
  Verdict o;
  const std::vector<int> ns{100, 400, 1600, 6400};
  std::vector<double> deg_t, tw_t;
  Rng rng(606);
  for (int n : ns) {
    Graph g = random_regular(n, 3, rng);
    Instance inst = Instance::create(g, random_cover(g, 0.0, rng), {}, 4, 1,
                                     Mode::GLSVC);
    deg_t.push_back(time_ms([&] { solve_glsvc_by_degree(inst); }));
    Graph p = path_graph(n);
    Instance pinst = Instance::create(p, random_cover(p, 0.0, rng), {}, 4, 1,
                                      Mode::GLSVC);
    tw_t.push_back(time_ms([&] { solve_with(pinst, Algorithm::Treewidth); }));
  }
  const double ds = loglog_slope(ns, deg_t), ts = loglog_slope(ns, tw_t);
  std::ostringstream detail;
  detail << "degree slope " << ds << ", treewidth slope " << ts;
  o.detail = detail.str();
  o.pass = ds <= 1.3 && ts <= 1.3;
  return o;
}

Verdict decomposition_validity() {
  Verdict o;
  Rng rng(707);
  std::uniform_int_distribution<int> nd(1, 40);
  std::uniform_real_distribution<double> pd(0.05, 0.6);
  for (int i = 0; i < 1000; ++i) {
    Graph g;
    switch (i % 4) {
      case 0:
      case 1: g = gnp(nd(rng), pd(rng), rng); break;
      case 2: g = stars_of_cliques(std::uniform_int_distribution<int>(0, 6)(rng), 5, rng); break;
      default: g = gnp(nd(rng), 0.08, rng); break;
    }
    try {
      check_modular_decomposition(g, compute_modular_decomposition(g));
    } catch (const std::exception& e) {
      fail(o, std::string("modular: ") + e.what());
    }
    try {
      check_split_decomposition(g, compute_split_decomposition(g));
    } catch (const std::exception& e) {
      fail(o, std::string("split: ") + e.what());
    }
    try {
      check_nice(g, heuristic_tree_decomposition(g));
    } catch (const std::exception& e) {
      fail(o, std::string("tree: ") + e.what());
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"1 oracle equivalence on 2000 random instances", oracle_equivalence},
      {"2 eight-vertex swap-instance fixture", eight_vertex_fixture},
      {"3 weighted path fixture under every solver", weighted_path_fixture},
      {"4 parity reduction preserves answers", parity_lemma},
      {"5 swap-instance equivalence", swap_instance_equivalence},
      {"6 minimal good swaps are small", small_subset_lemma},
      {"7 cross-decomposition consistency", cross_decomposition},
      {"8 scaling sanity", scaling_sanity},
      {"9 decomposition validity", decomposition_validity},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Stopwatch sw;
    Verdict o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.name << "  ("
              << static_cast<long>(sw.ms()) << " ms)";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
