#include "lsvc/degree_solver.hpp"

#include <algorithm>
#include <set>

#include "lsvc/connected_swaps.hpp"
#include "lsvc/swap_algebra.hpp"
#include "lsvc/tree_decomposition.hpp"
#include "lsvc/treewidth_solver.hpp"

namespace lsvc {

namespace {

bool shorter(const VertexSet& a, const VertexSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

// Largest independent set of size ≤ limit in G[vs], by branching on a
// vertex of maximum degree.
class BoundedMis {
 public:
  BoundedMis(const Graph& g, const VertexSet& vs, int limit)
      : g_(g), vs_(vs), limit_(limit), alive_(vs.size(), 1) {}

  VertexSet run() {
    VertexSet cur;
    search(cur);
    return best_;
  }

 private:
  int degree(std::size_t i) const {
    int d = 0;
    for (std::size_t j = 0; j < vs_.size(); ++j)
      if (j != i && alive_[j] && g_.adjacent(vs_[i], vs_[j])) ++d;
    return d;
  }

  void search(VertexSet& cur) {
    if (static_cast<int>(best_.size()) >= limit_) return;
    int remaining = 0;
    std::size_t pick = vs_.size();
    int pick_deg = -1;
    for (std::size_t i = 0; i < vs_.size(); ++i) {
      if (!alive_[i]) continue;
      ++remaining;
      int d = degree(i);
      if (d > pick_deg) {
        pick_deg = d;
        pick = i;
      }
    }
    if (static_cast<int>(cur.size()) + remaining <= static_cast<int>(best_.size()))
      return;
    if (remaining == 0 || static_cast<int>(cur.size()) == limit_) {
      if (cur.size() > best_.size()) best_ = normalized(cur);
      return;
    }
    if (pick_deg == 0) {
      // Only isolated vertices remain: take them in id order.
      VertexSet take = cur;
      for (std::size_t i = 0; i < vs_.size() &&
                              static_cast<int>(take.size()) < limit_;
           ++i)
        if (alive_[i]) take.push_back(vs_[i]);
      if (take.size() > best_.size()) best_ = normalized(take);
      return;
    }
    // Include pick.
    std::vector<std::size_t> killed;
    for (std::size_t j = 0; j < vs_.size(); ++j)
      if (alive_[j] && (j == pick || g_.adjacent(vs_[pick], vs_[j]))) {
        alive_[j] = 0;
        killed.push_back(j);
      }
    cur.push_back(vs_[pick]);
    search(cur);
    cur.pop_back();
    for (std::size_t j : killed) alive_[j] = 1;
    // Exclude pick.
    alive_[pick] = 0;
    search(cur);
    alive_[pick] = 1;
  }

  const Graph& g_;
  const VertexSet& vs_;
  int limit_;
  std::vector<char> alive_;
  VertexSet best_;
};

}  // namespace

SwapFamily compute_swap_family_unweighted(const Instance& inst) {
  if (!inst.unit()) throw ModeError("unweighted swap family needs unit weights");
  if (!isolated_cover_vertices(inst).empty())
    throw PreconditionError(
        "swap family needs every cover vertex to have a non-cover neighbor");
  const Graph& g = inst.graph();
  const int d = static_cast<int>(std::max<Gain>(inst.d(), 0));
  SwapFamily fam;
  fam.members.assign(d + 1, std::nullopt);
  const int kmax = inst.k() - d + 1;
  if (d == 0 || kmax < 1) return fam;
  std::vector<char> in_w(inst.n(), 0);
  for (const VertexSet& base : enumerate_connected_swaps(inst, kmax, true)) {
    for (Vertex v : base) in_w[v] = 1;
    // Auxiliary vertices: cover vertices outside W' adjacent to W'\S whose
    // whole neighborhood lies in S ⊕ W'.
    VertexSet aux;
    for (Vertex v : open_neighborhood(g, base)) {
      if (!inst.in_cover(v)) continue;
      bool touches_white = false, ok = true;
      for (Vertex u : g.neighbors(v)) {
        if (inst.in_cover(u)) {
          if (in_w[u]) ok = false;
        } else if (in_w[u]) {
          touches_white = true;
        } else {
          ok = false;
        }
      }
      if (ok && touches_white) aux.push_back(v);
    }
    for (Vertex v : base) in_w[v] = 0;
    VertexSet j_set = BoundedMis(g, aux, d - 1).run();
    for (std::size_t r = 0; r <= j_set.size(); ++r) {
      VertexSet cand = base;
      cand.insert(cand.end(), j_set.begin(), j_set.begin() + r);
      cand = normalized(std::move(cand));
      auto& slot = fam.members[r + 1];
      if (!slot || shorter(cand, *slot)) slot = std::move(cand);
    }
  }
  return fam;
}

SwapFamily compute_swap_family_weighted(const Instance& inst) {
  const int k = std::max(inst.k(), 0);
  SwapFamily fam;
  fam.members.assign(k + 1, std::nullopt);
  std::vector<Gain> best(k + 1, 0);
  for (const VertexSet& w : enumerate_connected_swaps(inst, k, false)) {
    const std::size_t j = w.size();
    Gain d = improvement(inst, w);
    auto& slot = fam.members[j];
    if (!slot || d > best[j] || (d == best[j] && w < *slot)) {
      slot = w;
      best[j] = d;
    }
  }
  return fam;
}

namespace {

NiceTreeDecomposition low_degree_decomposition(const Graph& g) {
  return make_nice(g, path_cycle_decomposition(g));
}

std::optional<VertexSet> try_branches(
    const Instance& inst, const std::vector<VertexSet>& branches,
    Counters& counters, int depth,
    std::optional<VertexSet> (*rec)(const Instance&, Counters&, int)) {
  std::set<VertexSet> tried;
  for (const VertexSet& w : branches) {
    if (!tried.insert(w).second) continue;
    SwapInstance si = make_swap_instance(inst, w);
    if (si.instance.k() < 0) continue;
    if (auto sub = rec(si.instance, counters, depth + 1))
      return set_union(si.extension, lift(si.to_parent, *sub));
  }
  return std::nullopt;
}

std::optional<VertexSet> glsvc_rec(const Instance& inst, Counters& counters,
                                   int depth) {
  ++counters.branch_nodes;
  counters.max_depth = std::max(counters.max_depth, depth);
  if (inst.k() < 0) return std::nullopt;
  if (inst.d() <= 0) return VertexSet{};
  if (inst.d() > inst.k()) return std::nullopt;
  if (inst.k() + inst.d() <= 4) {
    SolveReport r = solve_kd_le_4(inst);
    if (r.yes()) return r.swap->vertices;
    return std::nullopt;
  }
  if (inst.graph().max_degree() <= 2) {
    SolveReport r = solve_glsvc_tw(inst, low_degree_decomposition(inst.graph()));
    counters.dp_cells += r.counters.dp_cells;
    if (r.yes()) return r.swap->vertices;
    return std::nullopt;
  }
  std::vector<VertexSet> branches;
  VertexSet sstar = isolated_cover_vertices(inst);
  if (!sstar.empty()) {
    // Branch on a free cover vertex or a non-adjacent pair of its neighbors.
    Vertex v = sstar.front();
    branches.push_back({v});
    auto nb = inst.graph().neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!inst.graph().adjacent(nb[i], nb[j]))
          branches.push_back({nb[i], nb[j]});
  } else {
    SwapFamily fam = compute_swap_family_unweighted(inst);
    const int d = static_cast<int>(inst.d());
    if (fam[d]) return *fam[d];
    // Branch on a small family member or one of its neighbors.
    for (int j = 1; 2 * j <= d; ++j) {
      if (!fam[j]) continue;
      branches.push_back(*fam[j]);
      for (Vertex w : open_neighborhood(inst.graph(), *fam[j]))
        branches.push_back({w});
    }
  }
  return try_branches(inst, branches, counters, depth, glsvc_rec);
}

std::optional<VertexSet> glswvc_rec(const Instance& inst, Counters& counters,
                                    int depth) {
  ++counters.branch_nodes;
  counters.max_depth = std::max(counters.max_depth, depth);
  if (inst.k() < 0) return std::nullopt;
  if (inst.d() <= 0) return VertexSet{};
  if (inst.k() <= 2) {
    SolveReport r = solve_k_le_2(inst);
    if (r.yes()) return r.swap->vertices;
    return std::nullopt;
  }
  if (inst.graph().max_degree() <= 2) {
    SolveReport r = solve_max_improvement_tw(
        inst, low_degree_decomposition(inst.graph()));
    counters.dp_cells += r.counters.dp_cells;
    if (r.yes()) return r.swap->vertices;
    return std::nullopt;
  }
  SwapFamily fam = compute_swap_family_weighted(inst);
  for (int j = 1; j <= fam.size(); ++j)
    if (fam[j] && improvement(inst, *fam[j]) >= inst.d()) return *fam[j];
  // Branch on the neighborhoods of the family members.
  std::vector<char> s1(inst.n(), 0);
  for (Vertex v : isolated_cover_vertices(inst)) s1[v] = 1;
  std::vector<VertexSet> branches;
  if (fam.size() >= 1 && fam[1])
    for (Vertex w : closed_neighborhood(inst.graph(), *fam[1]))
      branches.push_back({w});
  for (int j = 2; 2 * j <= inst.k(); ++j) {
    if (!fam[j]) continue;
    branches.push_back(*fam[j]);
    for (Vertex w : open_neighborhood(inst.graph(), *fam[j]))
      if (!s1[w]) branches.push_back({w});
  }
  return try_branches(inst, branches, counters, depth, glswvc_rec);
}

SolveReport finish(const Instance& inst, const std::optional<VertexSet>& w,
                   const Counters& counters, const Stopwatch& sw,
                   const char* name) {
  SolveReport r = w ? found(inst, *w, name) : not_found(name);
  r.counters = counters;
  r.params["max_degree"] = inst.graph().max_degree();
  r.time_ms = sw.ms();
  return r;
}

}  // namespace

SolveReport solve_glsvc_by_degree(const Instance& inst) {
  if (!inst.unit()) throw ModeError("solve_glsvc_by_degree needs unit weights");
  Stopwatch sw;
  Counters counters;
  auto w = glsvc_rec(inst, counters, 0);
  return finish(inst, w, counters, sw, "degree");
}

SolveReport solve_glswvc_by_degree(const Instance& inst) {
  Stopwatch sw;
  Counters counters;
  auto w = glswvc_rec(inst, counters, 0);
  return finish(inst, w, counters, sw, "degree");
}

SolveReport solve_lswvc_by_degree(const Instance& inst) {
  if (inst.d() != 1) throw ModeError("solve_lswvc_by_degree needs d = 1");
  Stopwatch sw;
  Counters counters;
  std::optional<VertexSet> best;
  Gain best_gain = 0;
  for (const VertexSet& w : enumerate_connected_swaps(inst, inst.k(), false)) {
    ++counters.branch_nodes;
    Gain g = improvement(inst, w);
    if (g < 1) continue;
    if (!best || g > best_gain || (g == best_gain && shorter(w, *best))) {
      best = w;
      best_gain = g;
    }
  }
  return finish(inst, best, counters, sw, "degree");
}

}  // namespace lsvc
