#include "lsvc/hindex_solver.hpp"

#include <algorithm>

#include "lsvc/degree_solver.hpp"
#include "lsvc/swap_algebra.hpp"
#include "lsvc/tree_decomposition.hpp"
#include "lsvc/treewidth_solver.hpp"

namespace lsvc {

HIndexDecomposition compute_h_index(const Graph& g) {
  const int n = g.n();
  std::vector<int> count(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) ++count[std::min(g.degree(v), n)];
  HIndexDecomposition out;
  int at_least = 0;
  for (int h = n; h >= 0; --h) {
    at_least += count[h];
    if (at_least >= h) {
      out.h = h;
      break;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) >= out.h + 1) out.high.push_back(v);
  const std::size_t m = out.high.size();
  out.adjacency.assign(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.adjacency[i][j] = i != j && g.adjacent(out.high[i], out.high[j]);
  return out;
}

namespace {

class HighSubsets {
 public:
  HighSubsets(const Instance& inst, const HIndexDecomposition& hd,
              Counters& counters)
      : inst_(inst), hd_(hd), counters_(counters) {}

  std::optional<VertexSet> run() {
    const int limit = std::min<int>(inst_.k(), hd_.high.size());
    for (int size = 0; size <= limit; ++size) {
      std::vector<int> pick;
      if (auto w = choose(size, 0, pick)) return w;
    }
    return std::nullopt;
  }

 private:
  std::optional<VertexSet> choose(int size, std::size_t from,
                                  std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) == size) return evaluate(pick);
    for (std::size_t i = from; i < hd_.high.size(); ++i) {
      bool ok = true;
      if (inst_.in_cover(hd_.high[i]))
        for (int j : pick)
          if (inst_.in_cover(hd_.high[j]) && hd_.adjacency[i][j]) ok = false;
      if (!ok) continue;
      pick.push_back(static_cast<int>(i));
      auto w = choose(size, i + 1, pick);
      pick.pop_back();
      if (w) return w;
    }
    return std::nullopt;
  }

  std::optional<VertexSet> evaluate(const std::vector<int>& pick) {
    std::vector<char> chosen(hd_.high.size(), 0);
    for (int i : pick) chosen[i] = 1;
    // Skip rule: high non-cover neighbors of chosen cover vertices belong to
    // the extension, so they must be chosen too.
    for (int i : pick) {
      if (!inst_.in_cover(hd_.high[i])) continue;
      for (std::size_t j = 0; j < hd_.high.size(); ++j)
        if (hd_.adjacency[i][j] && !inst_.in_cover(hd_.high[j]) && !chosen[j])
          return std::nullopt;
    }
    ++counters_.branch_nodes;
    VertexSet wh;
    for (int i : pick) wh.push_back(hd_.high[i]);
    SwapInstance si = make_swap_instance(inst_, wh);
    if (si.instance.k() < 0) return std::nullopt;
    if (si.instance.k() == 0 || static_cast<int>(wh.size()) == inst_.k()) {
      if (si.instance.d() <= 0) return si.extension;
      return std::nullopt;
    }
    // Exclude the surviving high vertices.
    std::vector<Vertex> local_of(inst_.n(), -1);
    for (std::size_t i = 0; i < si.to_parent.size(); ++i)
      local_of[si.to_parent[i]] = static_cast<Vertex>(i);
    VertexSet survivors;
    for (Vertex v : hd_.high)
      if (local_of[v] >= 0) survivors.push_back(local_of[v]);
    DerivedInstance ex = exclusion_instance(si.instance, normalized(survivors));
    if (ex.instance.graph().max_degree() > hd_.h)
      throw std::logic_error("h-index branch left a vertex of degree > h");
    SolveReport r = solve_glswvc_by_degree(ex.instance);
    counters_.branch_nodes += r.counters.branch_nodes;
    counters_.dp_cells += r.counters.dp_cells;
    if (!r.yes()) return std::nullopt;
    return set_union(si.extension,
                     lift(si.to_parent, lift(ex.to_parent, r.swap->vertices)));
  }

  const Instance& inst_;
  const HIndexDecomposition& hd_;
  Counters& counters_;
};

}  // namespace

SolveReport solve_glswvc_by_hindex(const Instance& inst) {
  Stopwatch sw;
  auto done = [&](SolveReport r, const HIndexDecomposition* hd) {
    r.algorithm = "hindex";
    if (hd) r.params["h"] = hd->h;
    r.time_ms = sw.ms();
    return r;
  };
  if (inst.k() < 0) return done(not_found("hindex"), nullptr);
  if (inst.d() <= 0) return done(found(inst, {}, "hindex"), nullptr);
  if (inst.k() <= 2) return done(solve_k_le_2(inst), nullptr);
  HIndexDecomposition hd = compute_h_index(inst.graph());
  if (hd.h <= 1) return done(solve_hindex_le_1(inst), &hd);
  if (hd.h == 2) {
    NiceTreeDecomposition td =
        make_nice(inst.graph(), low_hindex_decomposition(inst.graph()));
    return done(solve_max_improvement_tw(inst, td), &hd);
  }
  Counters counters;
  auto w = HighSubsets(inst, hd, counters).run();
  SolveReport r = w ? found(inst, *w, "hindex") : not_found("hindex");
  r.counters = counters;
  return done(r, &hd);
}

}  // namespace lsvc
