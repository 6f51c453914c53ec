#include "lsvc/knap_ls.hpp"

#include <algorithm>

#include "lsvc/connected_swaps.hpp"

namespace lsvc {

void KnapInstance::validate() const {
  const int nv = n();
  if (static_cast<int>(in_cover.size()) != nv ||
      static_cast<int>(gamma.size()) != nv ||
      static_cast<int>(cost.size()) != nv ||
      static_cast<int>(blocked.size()) != nv)
    throw PreconditionError("knap instance: per-vertex arrays have wrong size");
  if (k < 0) return;
  for (Vertex v = 0; v < nv; ++v) {
    const auto& g = gamma[v];
    if (static_cast<int>(g.size()) < k + 1)
      throw PreconditionError("knap instance: gamma shorter than k+1");
    if (g[0] != 0)
      throw PreconditionError("knap instance: gamma(v,0) must be 0");
    for (int c = 1; c <= k; ++c)
      if (g[c] < g[c - 1])
        throw PreconditionError("knap instance: gamma is not monotone");
    if (!in_cover[v] && cost[v] < 0)
      throw PreconditionError("knap instance: negative cover cost");
  }
  for (auto [u, v] : graph.edges())
    if (!in_cover[u] && !in_cover[v])
      throw PreconditionError("knap instance: S is not a vertex cover");
}

namespace {

struct Item {
  Vertex v;
  int lo;
};

// Group knapsack over items with c(v) ≥ lo: f[i][b] is the best total reward
// of the first i items with Σc ≤ b.
class GroupKnapsack {
 public:
  GroupKnapsack(const KnapInstance& ki, std::vector<Item> items, int budget)
      : items_(std::move(items)), budget_(budget) {
    const std::size_t t = items_.size();
    f_.assign(t + 1, std::vector<Gain>(budget + 1, 0));
    pick_.assign(t + 1, std::vector<int>(budget + 1, 0));
    for (std::size_t i = 1; i <= t; ++i) {
      const auto& g = ki.gamma[items_[i - 1].v];
      const int lo = items_[i - 1].lo;
      for (int b = 0; b <= budget; ++b) {
        Gain best = kNegInf;
        int arg = 0;
        for (int c = lo; c <= b; ++c) {
          Gain val = sat_add(g[c], f_[i - 1][b - c]);
          if (val > best) {
            best = val;
            arg = c;
          }
        }
        f_[i][b] = best;
        pick_[i][b] = arg;
      }
    }
  }

  Gain best(int b) const { return b < 0 ? kNegInf : f_.back()[b]; }

  void recover(int b, std::vector<int>& c) const {
    for (std::size_t i = items_.size(); i >= 1; --i) {
      int take = pick_[i][b];
      c[items_[i - 1].v] = take;
      b -= take;
    }
  }

 private:
  std::vector<Item> items_;
  int budget_;
  std::vector<std::vector<Gain>> f_;
  std::vector<std::vector<int>> pick_;
};

std::vector<Item> independent_items(const KnapInstance& ki,
                                    const std::vector<char>& in_w) {
  std::vector<Item> items;
  for (Vertex v = 0; v < ki.n(); ++v) {
    if (ki.in_cover[v] && in_w[v]) items.push_back({v, 1});
    if (!ki.in_cover[v] && !in_w[v]) items.push_back({v, 0});
  }
  return items;
}

struct KnapChild {
  KnapInstance ki;
  std::vector<Vertex> to_parent;
  Gain penalty = 0;
  VertexSet joined;  // N(w)\S, parent ids
};

std::optional<KnapChild> knap_swap(const KnapInstance& ki, Vertex w) {
  KnapChild out;
  const bool black = ki.in_cover[w];
  if (black)
    for (Vertex u : ki.graph.neighbors(w)) {
      if (ki.in_cover[u]) continue;
      if (ki.blocked[u]) return std::nullopt;
      out.penalty += ki.cost[u];
      out.joined.push_back(u);
    }
  const Gain kk = static_cast<Gain>(ki.k) - 1 - out.penalty;
  if (kk < 0) return std::nullopt;
  const int k2 = static_cast<int>(kk);
  VertexSet keep = set_minus(
      [&] {
        VertexSet all(ki.n());
        for (Vertex v = 0; v < ki.n(); ++v) all[v] = v;
        return all;
      }(),
      open_neighborhood(ki.graph, {w}));
  auto [g, map] = ki.graph.induced(keep);
  out.ki.graph = std::move(g);
  out.to_parent = map;
  out.ki.k = k2;
  const std::size_t m = map.size();
  out.ki.in_cover.resize(m);
  out.ki.gamma.resize(m);
  out.ki.cost.resize(m);
  out.ki.blocked.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vertex v = map[i];
    const auto& g0 = ki.gamma[v];
    if (v == w) {
      out.ki.in_cover[i] = 0;
      out.ki.gamma[i].assign(g0.begin() + 1, g0.begin() + 2 + k2);
      out.ki.cost[i] = 0;
      out.ki.blocked[i] = 1;
    } else {
      out.ki.in_cover[i] = ki.in_cover[v];
      out.ki.gamma[i].assign(g0.begin(), g0.begin() + 1 + k2);
      out.ki.cost[i] = ki.cost[v];
      out.ki.blocked[i] = ki.blocked[v];
    }
  }
  return out;
}

class KnapSearch {
 public:
  explicit KnapSearch(Counters* counters) : counters_(counters) {}

  KnapSolution solve(const KnapInstance& ki, int depth) {
    if (counters_) {
      ++counters_->branch_nodes;
      counters_->max_depth = std::max(counters_->max_depth, depth);
    }
    KnapSolution best;
    best.internal.assign(ki.n(), 0);
    if (ki.k < 0) return best;
    const int k = ki.k;
    std::vector<char> in_w(ki.n(), 0);
    {
      GroupKnapsack base(ki, independent_items(ki, in_w), k);
      best.value = base.best(k);
      base.recover(k, best.internal);
    }
    if (k == 0) return best;

    // Best connected swap per budget i ∈ [1,k].
    std::vector<std::optional<VertexSet>> top(k + 1);
    std::vector<Gain> top_val(k + 1, kNegInf);
    int zero_cost = 0;
    for (Vertex v = 0; v < ki.n(); ++v)
      if (!ki.in_cover[v] && !ki.blocked[v] && ki.cost[v] == 0) ++zero_cost;
    for_each_connected_swap(
        ki.graph, ki.in_cover, ki.blocked, k + zero_cost,
        [&](const VertexSet& cw) {
          Gain cw_cost = 0;
          int blacks = 0;
          for (Vertex v : cw) {
            if (ki.in_cover[v]) ++blacks;
            else cw_cost += ki.cost[v];
          }
          if (blacks + cw_cost > k) return;
          for (Vertex v : cw) in_w[v] = 1;
          const int room = static_cast<int>(k - cw_cost);
          GroupKnapsack t(ki, independent_items(ki, in_w), room);
          for (Vertex v : cw) in_w[v] = 0;
          for (int i = std::max<Gain>(1, blacks + cw_cost); i <= k; ++i) {
            Gain val = sat_add(t.best(static_cast<int>(i - cw_cost)), -cw_cost);
            if (val > top_val[i]) {
              top_val[i] = val;
              top[i] = cw;
            }
          }
        });

    VertexSet candidates;
    for (int i = 1; i <= k; ++i)
      if (top[i])
        candidates = set_union(candidates, closed_neighborhood(ki.graph, *top[i]));

    for (Vertex w : candidates) {
      auto child = knap_swap(ki, w);
      if (!child) continue;
      KnapSolution sub = solve(child->ki, depth + 1);
      if (is_neg_inf(sub.value)) continue;
      Gain val = sub.value - child->penalty;
      if (val <= best.value) continue;
      best.value = val;
      VertexSet w_set = lift(child->to_parent, sub.swap);
      if (ki.in_cover[w]) w_set = set_union(w_set, set_union({w}, child->joined));
      best.swap = std::move(w_set);
      best.internal.assign(ki.n(), 0);
      for (std::size_t i = 0; i < child->to_parent.size(); ++i)
        best.internal[child->to_parent[i]] = sub.internal[i];
      best.internal[w] += 1;
    }
    return best;
  }

 private:
  static VertexSet lift(const std::vector<Vertex>& to_parent,
                        const VertexSet& w) {
    VertexSet out;
    for (Vertex v : w) out.push_back(to_parent[v]);
    return normalized(std::move(out));
  }

  Counters* counters_;
};

}  // namespace

Gain knap_evaluate(const KnapInstance& ki, const VertexSet& w,
                   const std::vector<int>& c) {
  std::vector<char> in_w(ki.n(), 0);
  for (Vertex v : w) in_w[v] = 1;
  for (auto [u, v] : ki.graph.edges()) {
    bool cu = ki.in_cover[u] != in_w[u];
    bool cv = ki.in_cover[v] != in_w[v];
    if (!cu && !cv) return kNegInf;
  }
  Gain spent = 0, value = 0;
  for (Vertex v = 0; v < ki.n(); ++v) {
    const bool new_cover = ki.in_cover[v] != in_w[v];
    if (c[v] < 0) return kNegInf;
    if (new_cover) {
      if (c[v] != 0) return kNegInf;
      if (in_w[v]) {
        if (ki.blocked[v]) return kNegInf;
        spent += ki.cost[v];
        value -= ki.cost[v];
      }
      continue;
    }
    if (ki.in_cover[v] && c[v] < 1) return kNegInf;
    if (c[v] >= static_cast<int>(ki.gamma[v].size())) return kNegInf;
    spent += c[v];
    value += ki.gamma[v][c[v]];
  }
  if (spent > ki.k) return kNegInf;
  return value;
}

KnapSolution solve_knap_ls(const KnapInstance& ki, Counters* counters) {
  ki.validate();
  return KnapSearch(counters).solve(ki, 0);
}

namespace {

class KnapBrute {
 public:
  explicit KnapBrute(const KnapInstance& ki) : ki_(ki), c_(ki.n(), 0) {}

  KnapSolution run() {
    best_.internal.assign(ki_.n(), 0);
    const int nv = ki_.n();
    for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
      w_.clear();
      for (Vertex v = 0; v < nv; ++v)
        if (mask >> v & 1) w_.push_back(v);
      std::fill(c_.begin(), c_.end(), 0);
      // Feasibility with c ≡ minimal.
      Gain spent = 0;
      items_.clear();
      bool ok = true;
      std::vector<char> in_w(nv, 0);
      for (Vertex v : w_) in_w[v] = 1;
      for (auto [u, v] : ki_.graph.edges())
        if (ki_.in_cover[u] == in_w[u] && ki_.in_cover[v] == in_w[v]) ok = false;
      for (Vertex v = 0; v < nv && ok; ++v) {
        if (!ki_.in_cover[v] && in_w[v]) {
          if (ki_.blocked[v]) ok = false;
          spent += ki_.cost[v];
        }
        if (ki_.in_cover[v] && in_w[v]) items_.push_back({v, 1});
        if (!ki_.in_cover[v] && !in_w[v]) items_.push_back({v, 0});
      }
      if (!ok || spent > ki_.k) continue;
      distribute(0, ki_.k - spent, -spent);
    }
    return best_;
  }

 private:
  void distribute(std::size_t i, Gain room, Gain acc) {
    if (i == items_.size()) {
      if (acc > best_.value) {
        best_.value = acc;
        best_.swap = w_;
        best_.internal = c_;
      }
      return;
    }
    const Item& it = items_[i];
    for (int c = it.lo; c <= room; ++c) {
      c_[it.v] = c;
      distribute(i + 1, room - c, acc + ki_.gamma[it.v][c]);
    }
    c_[it.v] = 0;
  }

  const KnapInstance& ki_;
  VertexSet w_;
  std::vector<int> c_;
  std::vector<Item> items_;
  KnapSolution best_;
};

}  // namespace

KnapSolution knap_brute_force(const KnapInstance& ki) {
  if (ki.n() > 12 || ki.k > 8)
    throw RefusalError("knap brute force is limited to n <= 12 and k <= 8");
  ki.validate();
  if (ki.k < 0) return {};
  return KnapBrute(ki).run();
}

}  // namespace lsvc
