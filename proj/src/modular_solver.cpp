#include "lsvc/modular_solver.hpp"

#include <algorithm>

#include "lsvc/knap_ls.hpp"

namespace lsvc {

namespace {

void check_matches(const Instance& inst, const ModularDecomposition& md) {
  if (md.root < 0 ||
      md.nodes[md.root].vertices.size() != static_cast<std::size_t>(inst.n()))
    throw PreconditionError(
        "modular decomposition does not match the instance's vertex count");
}

Gain leaf_value(const Instance& inst, Vertex v, int budget) {
  return inst.in_cover(v) && budget > 0 ? inst.weight(v) : 0;
}

class MwDp {
 public:
  MwDp(const Instance& inst, const ModularDecomposition& md, int cap)
      : inst_(inst), md_(md), k_(inst.k()), cap_(cap < 0 ? k_ : cap) {}

  ModularTables run() {
    const std::size_t nn = md_.nodes.size();
    out_.d.assign(nn, std::vector<Gain>(k_ + 1, 0));
    choice_.assign(nn, std::vector<Choice>(k_ + 1));
    for (std::size_t x = 0; x < nn; ++x) compute(static_cast<int>(x));
    out_.root_value = out_.d[md_.root][k_];
    trace(md_.root, k_, out_.swap);
    out_.swap = normalized(std::move(out_.swap));
    return std::move(out_);
  }

 private:
  struct Choice {
    std::vector<int> members;  // child positions
    std::vector<int> budgets;
    VertexSet wstar;
  };

  void compute(int x) {
    const ModNode& node = md_.nodes[x];
    auto& d = out_.d[x];
    if (node.kind == ModKind::Leaf) {
      for (int b = 0; b <= k_; ++b) d[b] = leaf_value(inst_, node.vertex, b);
      return;
    }
    const std::size_t c = node.children.size();
    has_black_.assign(c, 0);
    for (std::size_t i = 0; i < c; ++i)
      for (Vertex v : md_.nodes[node.children[i]].vertices)
        if (inst_.in_cover(v)) has_black_[i] = 1;
    // S_x = ∅ gives W = ∅.
    std::fill(d.begin(), d.end(), 0);
    for (auto& ch : choice_[x]) ch = Choice{};
    std::vector<int> members;
    enumerate(x, 0, members);
  }

  void enumerate(int x, std::size_t from, std::vector<int>& members) {
    const ModNode& node = md_.nodes[x];
    if (!members.empty()) evaluate(x, members);
    if (static_cast<int>(members.size()) >= std::min(k_, cap_)) return;
    for (std::size_t i = from; i < node.children.size(); ++i) {
      if (!has_black_[i]) continue;
      bool indep = true;
      for (int j : members)
        if (node.quotient[i][j]) indep = false;
      if (!indep) continue;
      members.push_back(static_cast<int>(i));
      enumerate(x, i + 1, members);
      members.pop_back();
    }
  }

  void evaluate(int x, const std::vector<int>& members) {
    const ModNode& node = md_.nodes[x];
    const std::size_t c = node.children.size();
    std::vector<char> in_s(c, 0);
    for (int i : members) in_s[i] = 1;
    VertexSet wstar;
    Gain wcost = 0;
    for (std::size_t i = 0; i < c; ++i) {
      if (in_s[i]) continue;
      bool nb = false;
      for (int j : members)
        if (node.quotient[i][j]) nb = true;
      if (!nb) continue;
      for (Vertex v : md_.nodes[node.children[i]].vertices)
        if (!inst_.in_cover(v)) {
          wstar.push_back(v);
          wcost += inst_.weight(v);
        }
    }
    const int wsz = static_cast<int>(wstar.size());
    if (wsz + static_cast<int>(members.size()) > k_) return;
    // q[i][b]: best with the first i members and budget ≤ b, each member
    // receiving at least one unit.
    const std::size_t m = members.size();
    std::vector<std::vector<Gain>> q(m + 1, std::vector<Gain>(k_ + 1, kNegInf));
    std::vector<std::vector<int>> arg(m + 1, std::vector<int>(k_ + 1, 0));
    std::fill(q[0].begin(), q[0].end(), 0);
    for (std::size_t i = 1; i <= m; ++i) {
      const auto& dy = out_.d[node.children[members[i - 1]]];
      for (int b = 0; b <= k_; ++b) {
        ++out_.cells;
        for (int kk = 1; kk <= b; ++kk) {
          Gain val = sat_add(dy[kk], q[i - 1][b - kk]);
          if (val > q[i][b]) {
            q[i][b] = val;
            arg[i][b] = kk;
          }
        }
      }
    }
    auto& d = out_.d[x];
    for (int b = 0; b <= k_; ++b) {
      if (static_cast<int>(m) > std::min(b, cap_) || b < wsz) continue;
      Gain val = sat_add(q[m][b - wsz], -wcost);
      if (val <= d[b]) continue;
      d[b] = val;
      Choice& ch = choice_[x][b];
      ch.members = members;
      ch.budgets.assign(m, 0);
      int rest = b - wsz;
      for (std::size_t i = m; i >= 1; --i) {
        ch.budgets[i - 1] = arg[i][rest];
        rest -= arg[i][rest];
      }
      ch.wstar = normalized(wstar);
    }
  }

  void trace(int x, int budget, VertexSet& w) const {
    const ModNode& node = md_.nodes[x];
    if (node.kind == ModKind::Leaf) {
      if (leaf_value(inst_, node.vertex, budget) > 0) w.push_back(node.vertex);
      return;
    }
    const Choice& ch = choice_[x][budget];
    w.insert(w.end(), ch.wstar.begin(), ch.wstar.end());
    for (std::size_t i = 0; i < ch.members.size(); ++i)
      trace(node.children[ch.members[i]], ch.budgets[i], w);
  }

  const Instance& inst_;
  const ModularDecomposition& md_;
  int k_;
  int cap_;
  std::vector<char> has_black_;
  std::vector<std::vector<Choice>> choice_;
  ModularTables out_;
};

class DeltaMd {
 public:
  DeltaMd(const Instance& inst, const ModularDecomposition& md,
          Counters* counters)
      : inst_(inst), md_(md), k_(inst.k()), counters_(counters) {}

  ModularTables run() {
    const std::size_t nn = md_.nodes.size();
    out_.d.assign(nn, std::vector<Gain>(k_ + 1, 0));
    sol_.assign(nn, std::vector<KnapSolution>(k_ + 1));
    for (std::size_t x = 0; x < nn; ++x) compute(static_cast<int>(x));
    out_.root_value = out_.d[md_.root][k_];
    trace(md_.root, k_, out_.swap);
    out_.swap = normalized(std::move(out_.swap));
    return std::move(out_);
  }

 private:
  void compute(int x) {
    const ModNode& node = md_.nodes[x];
    auto& d = out_.d[x];
    if (node.kind == ModKind::Leaf) {
      for (int b = 0; b <= k_; ++b) d[b] = leaf_value(inst_, node.vertex, b);
      return;
    }
    const std::size_t c = node.children.size();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = i + 1; j < c; ++j)
        if (node.quotient[i][j]) edges.emplace_back(i, j);
    KnapInstance ki;
    ki.graph = Graph(static_cast<int>(c), edges);
    ki.in_cover.assign(c, 1);
    ki.cost.assign(c, 0);
    ki.blocked.assign(c, 0);
    for (std::size_t i = 0; i < c; ++i) {
      const ModNode& child = md_.nodes[node.children[i]];
      for (Vertex v : child.vertices)
        if (!inst_.in_cover(v)) {
          ki.in_cover[i] = 0;
          ++ki.cost[i];
        }
      ki.gamma.push_back(out_.d[node.children[i]]);
    }
    for (int b = 0; b <= k_; ++b) {
      ki.k = b;
      sol_[x][b] = solve_knap_ls(ki, counters_);
      d[b] = sol_[x][b].value;
      ++out_.cells;
    }
  }

  void trace(int x, int budget, VertexSet& w) const {
    const ModNode& node = md_.nodes[x];
    if (node.kind == ModKind::Leaf) {
      if (leaf_value(inst_, node.vertex, budget) > 0) w.push_back(node.vertex);
      return;
    }
    const KnapSolution& s = sol_[x][budget];
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const int y = node.children[i];
      const bool in_w = std::binary_search(s.swap.begin(), s.swap.end(),
                                           static_cast<Vertex>(i));
      bool black = true;
      for (Vertex v : md_.nodes[y].vertices)
        if (!inst_.in_cover(v)) black = false;
      if (in_w && !black) {
        for (Vertex v : md_.nodes[y].vertices)
          if (!inst_.in_cover(v)) w.push_back(v);
      } else if (s.internal[i] > 0) {
        trace(y, s.internal[i], w);
      }
    }
  }

  const Instance& inst_;
  const ModularDecomposition& md_;
  int k_;
  Counters* counters_;
  std::vector<std::vector<KnapSolution>> sol_;
  ModularTables out_;
};

SolveReport report(const Instance& inst, const ModularTables& t,
                   const ModularDecomposition& md, const char* name,
                   const Stopwatch& sw) {
  SolveReport r = t.root_value >= inst.d() ? found(inst, t.swap, name)
                                            : not_found(name);
  r.best_improvement = t.root_value;
  r.counters.dp_cells = t.cells;
  r.params["mw"] = md.width;
  r.params["delta_md"] = compute_delta_md(md);
  r.params["delta_md_prime"] = compute_delta_md_prime(md);
  r.time_ms = sw.ms();
  return r;
}

SolveReport negative_budget(const char* name) {
  SolveReport r = not_found(name);
  return r;
}

}  // namespace

ModularTables run_mw_dp(const Instance& inst, const ModularDecomposition& md,
                        int cap) {
  check_matches(inst, md);
  if (inst.k() < 0) throw PreconditionError("run_mw_dp needs k >= 0");
  return MwDp(inst, md, cap).run();
}

ModularTables run_delta_md(const Instance& inst, const ModularDecomposition& md,
                           Counters* counters) {
  check_matches(inst, md);
  if (inst.k() < 0) throw PreconditionError("run_delta_md needs k >= 0");
  return DeltaMd(inst, md, counters).run();
}

SolveReport solve_glswvc_mw(const Instance& inst,
                            const ModularDecomposition& md) {
  Stopwatch sw;
  check_matches(inst, md);
  if (inst.k() < 0) return negative_budget("modular");
  return report(inst, run_mw_dp(inst, md, -1), md, "modular", sw);
}

SolveReport solve_glsvc_mw(const Instance& inst,
                           const ModularDecomposition& md) {
  if (!inst.unit()) throw ModeError("solve_glsvc_mw needs unit weights");
  Stopwatch sw;
  check_matches(inst, md);
  if (inst.k() < 0) return negative_budget("modular");
  if (inst.d() <= 0) return found(inst, {}, "modular");
  const int cap = static_cast<int>((inst.k() + inst.d()) / 2);
  return report(inst, run_mw_dp(inst, md, cap), md, "modular", sw);
}

SolveReport solve_glsvc_delta_md(const Instance& inst,
                                 const ModularDecomposition& md) {
  if (!inst.unit()) throw ModeError("solve_glsvc_delta_md needs unit weights");
  Stopwatch sw;
  check_matches(inst, md);
  if (inst.k() < 0) return negative_budget("modular-degree");
  Counters counters;
  ModularTables t = run_delta_md(inst, md, &counters);
  SolveReport r = report(inst, t, md, "modular-degree", sw);
  r.counters.branch_nodes = counters.branch_nodes;
  r.counters.max_depth = counters.max_depth;
  return r;
}

}  // namespace lsvc
