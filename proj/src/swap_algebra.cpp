#include "lsvc/swap_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace lsvc {

VertexSet lift(const std::vector<Vertex>& to_parent, const VertexSet& w) {
  VertexSet out;
  out.reserve(w.size());
  for (Vertex v : w) out.push_back(to_parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_independent_cover_part(const Instance& inst, const VertexSet& w) {
  for (Vertex v : w) {
    if (v < 0 || v >= inst.n())
      throw InputError("vertex " + std::to_string(v) + " out of range");
    if (!inst.in_cover(v)) continue;
    for (Vertex u : w)
      if (u != v && inst.in_cover(u) && inst.graph().adjacent(u, v))
        throw PreconditionError("W∩S is not independent: edge (" +
                                std::to_string(std::min(u, v)) + "," +
                                std::to_string(std::max(u, v)) + ")");
  }
}

DerivedInstance remove_vertices(const Instance& inst, const VertexSet& gone,
                                int k, Gain d) {
  std::vector<char> drop(inst.n(), 0);
  for (Vertex v : gone) drop[v] = 1;
  VertexSet keep;
  for (Vertex v = 0; v < inst.n(); ++v)
    if (!drop[v]) keep.push_back(v);
  auto [g, map] = inst.graph().induced(keep);
  std::vector<char> cover(keep.size());
  std::vector<Weight> weights(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    cover[i] = inst.in_cover(keep[i]);
    weights[i] = inst.weight(keep[i]);
  }
  DerivedInstance out;
  out.instance = Instance::derived(std::move(g), std::move(cover),
                                   std::move(weights), k, d, inst.mode());
  out.to_parent = std::move(map);
  return out;
}

}  // namespace

VertexSet extension(const Instance& inst, const VertexSet& w) {
  require_independent_cover_part(inst, w);
  VertexSet out = normalized(w);
  for (Vertex v : w)
    for (Vertex u : inst.graph().neighbors(v))
      if (!inst.in_cover(u)) out.push_back(u);
  return normalized(std::move(out));
}

SwapInstance make_swap_instance(const Instance& inst, const VertexSet& w) {
  VertexSet ext = extension(inst, w);
  VertexSet black;
  for (Vertex v : w)
    if (inst.in_cover(v)) black.push_back(v);
  black = normalized(std::move(black));
  VertexSet removed = set_union(open_neighborhood(inst.graph(), black), ext);
  int k2 = inst.k() - static_cast<int>(ext.size());
  Gain d2 = inst.d() - improvement(inst, ext);
  SwapInstance si;
  static_cast<DerivedInstance&>(si) = remove_vertices(inst, removed, k2, d2);
  si.extension = std::move(ext);
  si.removed = std::move(removed);
  if (inst.unit())
    assert(k2 + d2 == inst.k() + inst.d() - 2 * Gain(black.size()));
  return si;
}

DerivedInstance exclusion_instance(const Instance& inst, const VertexSet& vx) {
  VertexSet white;
  for (Vertex v : vx)
    if (!inst.in_cover(v)) white.push_back(v);
  VertexSet gone =
      set_union(normalized(vx), open_neighborhood(inst.graph(),
                                                  normalized(white)));
  return remove_vertices(inst, gone, inst.k(), inst.d());
}

Instance apply_parity_reduction(const Instance& inst) {
  if (!inst.unit()) throw ModeError("parity reduction needs unit weights");
  if ((inst.k() + inst.d()) % 2 != 0 && inst.k() >= 1)
    return inst.with_budget(inst.k() - 1, inst.d());
  return inst;
}

int small_subset_bound(const Instance& inst) {
  if (!inst.unit()) throw ModeError("small-subset bound needs unit weights");
  Gain s = inst.k() + inst.d();
  return static_cast<int>(s >= 0 ? s / 2 : -((-s + 1) / 2));
}

VertexSet isolated_cover_vertices(const Instance& inst) {
  VertexSet out;
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (!inst.in_cover(v)) continue;
    bool ok = true;
    for (Vertex u : inst.graph().neighbors(v))
      if (!inst.in_cover(u)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  return out;
}

namespace {

// Candidate ordering: larger improvement, then fewer vertices, then
// lexicographically smaller.
bool better(Gain da, const VertexSet& a, Gain db, const VertexSet& b) {
  if (da != db) return da > db;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct Best {
  Gain value = 0;
  VertexSet w;
  void offer(Gain v, VertexSet cand) {
    cand = normalized(std::move(cand));
    if (better(v, cand, value, w)) {
      value = v;
      w = std::move(cand);
    }
  }
};

// The yes/no procedure for k ≤ 2: S*, v*, the pair set 𝒲*, and the S≥/S<
// split of S* for pairs of non-adjacent vertices.
bool decide_k_le_2(const Instance& inst, const VertexSet& sstar) {
  const Graph& g = inst.graph();
  const Gain d = inst.d();
  if (d <= 0) return true;
  if (inst.k() >= 1 && !sstar.empty()) {
    Gain top = 0;
    for (Vertex v : sstar) top = std::max<Gain>(top, inst.weight(v));
    if (top >= d) return true;
  }
  if (inst.k() < 2) return false;
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (!inst.in_cover(v)) continue;
    Vertex only = -1;
    int whites = 0;
    for (Vertex u : g.neighbors(v))
      if (!inst.in_cover(u)) {
        only = u;
        ++whites;
      }
    if (whites == 1 && inst.weight(v) > inst.weight(only) &&
        Gain(inst.weight(v)) - Gain(inst.weight(only)) >= d)
      return true;
  }
  std::vector<char> in_ge(inst.n(), 0);
  VertexSet ge, lt;
  for (Vertex v : sstar) {
    if (2 * Gain(inst.weight(v)) >= d) {
      ge.push_back(v);
      in_ge[v] = 1;
    } else {
      lt.push_back(v);
    }
  }
  for (Vertex v : ge) {
    std::size_t inside = 0;
    for (Vertex u : g.neighbors(v)) inside += in_ge[u];
    if (inside + 1 < ge.size()) return true;  // a non-neighbor in S≥
  }
  // S≥ is a clique: pair each w ∈ S< with the heaviest non-neighbor in S≥,
  // found among the first |N(w)|+1 entries of the sorted list.
  std::sort(ge.begin(), ge.end(), [&](Vertex a, Vertex b) {
    return inst.weight(a) != inst.weight(b) ? inst.weight(a) > inst.weight(b)
                                            : a < b;
  });
  for (Vertex w : lt) {
    std::size_t limit = std::min(ge.size(), g.neighbors(w).size() + 1);
    for (std::size_t i = 0; i < limit; ++i) {
      if (g.adjacent(w, ge[i])) continue;
      if (Gain(inst.weight(w)) + inst.weight(ge[i]) >= d) return true;
      break;
    }
  }
  return false;
}

}  // namespace

SolveReport solve_k_le_2(const Instance& inst) {
  if (inst.k() > 2) throw PreconditionError("solve_k_le_2 needs k <= 2");
  Stopwatch sw;
  const Graph& g = inst.graph();
  VertexSet sstar = isolated_cover_vertices(inst);
  Best best;
  if (inst.k() >= 1)
    for (Vertex v : sstar) best.offer(inst.weight(v), {v});
  if (inst.k() >= 2) {
    // Pairs from 𝒲*.
    for (Vertex v = 0; v < inst.n(); ++v) {
      if (!inst.in_cover(v)) continue;
      Vertex only = -1;
      int whites = 0;
      for (Vertex u : g.neighbors(v))
        if (!inst.in_cover(u)) {
          only = u;
          ++whites;
        }
      if (whites == 1)
        best.offer(Gain(inst.weight(v)) - Gain(inst.weight(only)), {v, only});
    }
    // Non-adjacent pairs in S*: for each v the first non-neighbor in the
    // weight-sorted order is its best partner.
    VertexSet sorted = sstar;
    std::sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) {
      return inst.weight(a) != inst.weight(b)
                 ? inst.weight(a) > inst.weight(b)
                 : a < b;
    });
    for (Vertex v : sstar) {
      for (Vertex u : sorted) {
        if (u == v || g.adjacent(u, v)) continue;
        best.offer(Gain(inst.weight(u)) + inst.weight(v), {u, v});
        break;
      }
    }
  }
  bool yes = best.value >= inst.d();
  if (yes != decide_k_le_2(inst, sstar))
    throw std::logic_error("solve_k_le_2: case analysis disagrees");
  SolveReport r = yes ? found(inst, best.w, "k<=2") : not_found("k<=2");
  r.best_improvement = best.value;
  r.counters.branch_nodes = 1;
  r.time_ms = sw.ms();
  return r;
}

SolveReport solve_kd_le_4(const Instance& inst) {
  if (!inst.unit()) throw ModeError("solve_kd_le_4 needs unit weights");
  if (inst.k() + inst.d() > 4) throw PreconditionError("needs k + d <= 4");
  if (inst.d() <= 0 && inst.k() >= 0) return found(inst, {}, "k+d<=4");
  if (inst.k() <= 2) {
    SolveReport r = solve_k_le_2(inst);
    r.algorithm = "k+d<=4";
    return r;
  }
  // k = 3, d = 1.
  const Graph& g = inst.graph();
  VertexSet sstar = isolated_cover_vertices(inst);
  if (!sstar.empty()) return found(inst, {sstar.front()}, "k+d<=4");
  std::vector<Vertex> unique_white(inst.n(), -1);
  std::vector<VertexSet> group(inst.n());
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (!inst.in_cover(v)) continue;
    int whites = 0;
    for (Vertex u : g.neighbors(v))
      if (!inst.in_cover(u)) {
        unique_white[v] = u;
        ++whites;
      }
    if (whites == 1)
      group[unique_white[v]].push_back(v);
    else
      unique_white[v] = -1;
  }
  for (Vertex c = 0; c < inst.n(); ++c) {
    const VertexSet& members = group[c];
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!g.adjacent(members[i], members[j]))
          return found(inst, {members[i], c, members[j]}, "k+d<=4");
  }
  return not_found("k+d<=4");
}

namespace {

struct Valued {
  Gain value;
  VertexSet w;
};

Valued best_hindex_le_1(const Instance& inst) {
  const Graph& g = inst.graph();
  const int k = inst.k();
  Vertex hub = -1;
  for (Vertex v = 0; v < inst.n(); ++v)
    if (g.degree(v) >= 2) hub = v;
  if (hub >= 0) {
    Valued out{0, {}};
    SwapInstance in = make_swap_instance(inst, {hub});
    if (in.instance.k() >= 0) {
      Valued sub = best_hindex_le_1(in.instance);
      Gain v = improvement(inst, in.extension) + sub.value;
      VertexSet w = set_union(in.extension, lift(in.to_parent, sub.w));
      if (better(v, w, out.value, out.w)) out = {v, w};
    }
    DerivedInstance out_branch = exclusion_instance(inst, {hub});
    Valued sub = best_hindex_le_1(out_branch.instance);
    VertexSet w = lift(out_branch.to_parent, sub.w);
    if (better(sub.value, w, out.value, out.w)) out = {sub.value, w};
    return out;
  }
  // Maximum degree ≤ 1. An edge inside S keeps only its heavier endpoint as
  // a candidate; the other endpoint can never be swapped with it.
  struct Item {
    Gain gain;
    VertexSet w;
  };
  std::vector<Item> singles, pairs;
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (!inst.in_cover(v)) continue;
    if (g.degree(v) == 0) {
      singles.push_back({Gain(inst.weight(v)), {v}});
      continue;
    }
    Vertex u = g.neighbors(v)[0];
    if (inst.in_cover(u)) {
      bool keep_v = inst.weight(v) > inst.weight(u) ||
                    (inst.weight(v) == inst.weight(u) && v < u);
      if (keep_v) singles.push_back({Gain(inst.weight(v)), {v}});
    } else if (inst.weight(v) > inst.weight(u)) {
      pairs.push_back({Gain(inst.weight(v)) - inst.weight(u),
                       normalized({u, v})});
    }
  }
  auto order = [](const Item& a, const Item& b) {
    return a.gain != b.gain ? a.gain > b.gain : a.w < b.w;
  };
  std::sort(singles.begin(), singles.end(), order);
  std::sort(pairs.begin(), pairs.end(), order);
  // Exact merge: take the best t pairs and fill the rest with singles.
  std::vector<Gain> p1(singles.size() + 1, 0), p2(pairs.size() + 1, 0);
  for (std::size_t i = 0; i < singles.size(); ++i)
    p1[i + 1] = p1[i] + singles[i].gain;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    p2[i + 1] = p2[i] + pairs[i].gain;
  Gain best_value = 0;
  std::size_t best_t = 0, best_s = 0;
  for (std::size_t t = 0; t <= pairs.size() && 2 * Gain(t) <= k; ++t) {
    std::size_t s = std::min<std::size_t>(singles.size(), k - 2 * t);
    Gain v = p2[t] + p1[s];
    if (v > best_value ||
        (v == best_value && 2 * t + s < 2 * best_t + best_s)) {
      best_value = v;
      best_t = t;
      best_s = s;
    }
  }
  VertexSet w;
  for (std::size_t i = 0; i < best_t; ++i)
    w.insert(w.end(), pairs[i].w.begin(), pairs[i].w.end());
  for (std::size_t i = 0; i < best_s; ++i) w.push_back(singles[i].w[0]);
  return {best_value, normalized(std::move(w))};
}

}  // namespace

SolveReport solve_hindex_le_1(const Instance& inst) {
  int high = 0;
  for (Vertex v = 0; v < inst.n(); ++v)
    if (inst.graph().degree(v) >= 2) ++high;
  if (high >= 2) throw PreconditionError("solve_hindex_le_1 needs h(G) <= 1");
  Stopwatch sw;
  Valued best = best_hindex_le_1(inst);
  SolveReport r = best.value >= inst.d() ? found(inst, best.w, "h<=1")
                                         : not_found("h<=1");
  r.best_improvement = best.value;
  r.counters.branch_nodes = 1;
  r.time_ms = sw.ms();
  return r;
}

SolveReport lift_report(const Instance& parent, const SwapInstance& si,
                        const SolveReport& child,
                        const std::string& algorithm) {
  SolveReport r;
  r.algorithm = algorithm;
  r.counters = child.counters;
  if (child.yes()) {
    VertexSet w = set_union(si.extension, lift(si.to_parent,
                                               child.swap->vertices));
    r.outcome = Outcome::Found;
    r.swap = make_swap(parent, std::move(w));
  }
  return r;
}

}  // namespace lsvc
