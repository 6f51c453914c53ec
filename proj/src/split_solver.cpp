#include "lsvc/split_solver.hpp"

#include <algorithm>

namespace lsvc {

namespace {

constexpr int kPlus = 0, kMinus = 1, kCircle = 2;

class SplitDp {
 public:
  SplitDp(const Instance& inst, const NiceSplitDecomposition& sd, int cap)
      : inst_(inst), sd_(sd), k_(inst.k()), cap_(cap < 0 ? k_ : cap) {}

  SplitTables run() {
    const std::size_t nn = sd_.nodes.size();
    out_.t.resize(nn);
    choice_.resize(nn);
    for (std::size_t x = 0; x < nn; ++x) compute(static_cast<int>(x));
    out_.root_value = out_.t[sd_.root][kPlus][k_];
    trace(sd_.root, kPlus, k_, out_.swap);
    out_.swap = normalized(std::move(out_.swap));
    return std::move(out_);
  }

 private:
  struct Choice {
    std::vector<char> types;
    std::vector<int> budgets;
  };

  void compute(int x) {
    const SplitNode& node = sd_.nodes[x];
    auto& t = out_.t[x];
    for (auto& row : t) row.assign(k_ + 1, kNegInf);
    for (auto& row : choice_[x]) row.assign(k_ + 1, Choice{});
    if (node.leaf) {
      const Vertex v = node.vertex;
      const bool black = inst_.in_cover(v);
      const Gain w = inst_.weight(v);
      for (int b = 0; b <= k_; ++b) {
        t[kPlus][b] = black && b > 0 ? w : 0;
        t[kMinus][b] = black ? 0 : (b == 0 ? kNegInf : -w);
        t[kCircle][b] = 0;
      }
      return;
    }
    std::vector<int> members;
    enumerate(x, 0, members);
  }

  void enumerate(int x, std::size_t from, std::vector<int>& members) {
    const SplitNode& node = sd_.nodes[x];
    evaluate(x, members);
    if (static_cast<int>(members.size()) >= std::min(k_, cap_)) return;
    for (std::size_t i = from; i < node.children.size(); ++i) {
      bool indep = true;
      for (int j : members)
        if (node.adj[i][j]) indep = false;
      if (!indep) continue;
      members.push_back(static_cast<int>(i));
      enumerate(x, i + 1, members);
      members.pop_back();
    }
  }

  // Combines the children under fixed table types, budget ≤ b per entry.
  void combine(int x, const std::vector<char>& types,
               std::vector<Gain>& best, std::vector<std::vector<int>>& arg) {
    const SplitNode& node = sd_.nodes[x];
    const std::size_t c = node.children.size();
    std::vector<std::vector<Gain>> q(c + 1, std::vector<Gain>(k_ + 1, kNegInf));
    arg.assign(c + 1, std::vector<int>(k_ + 1, 0));
    std::fill(q[0].begin(), q[0].end(), 0);
    for (std::size_t i = 1; i <= c; ++i) {
      const auto& dy = out_.t[node.children[i - 1]][types[i - 1]];
      for (int b = 0; b <= k_; ++b) {
        ++out_.cells;
        for (int kk = 0; kk <= b; ++kk) {
          Gain val = sat_add(dy[kk], q[i - 1][b - kk]);
          if (val > q[i][b]) {
            q[i][b] = val;
            arg[i][b] = kk;
          }
        }
      }
    }
    best = q[c];
  }

  void record(int x, int table, const std::vector<char>& types,
              const std::vector<Gain>& best,
              const std::vector<std::vector<int>>& arg, std::size_t size) {
    auto& row = out_.t[x][table];
    const std::size_t c = types.size();
    for (int b = 0; b <= k_; ++b) {
      if (static_cast<int>(size) > std::min(b, cap_)) continue;
      if (best[b] <= row[b]) continue;
      row[b] = best[b];
      Choice& ch = choice_[x][table][b];
      ch.types = types;
      ch.budgets.assign(c, 0);
      int rest = b;
      for (std::size_t i = c; i >= 1; --i) {
        ch.budgets[i - 1] = arg[i][rest];
        rest -= arg[i][rest];
      }
    }
  }

  void evaluate(int x, const std::vector<int>& members) {
    const SplitNode& node = sd_.nodes[x];
    const std::size_t c = node.children.size();
    std::vector<char> types(c, kCircle);
    bool touches_marker = false;
    for (int j : members) {
      types[j] = kPlus;
      if (node.adj[j][c]) touches_marker = true;
    }
    for (std::size_t i = 0; i < c; ++i) {
      if (types[i] == kPlus) continue;
      for (int j : members)
        if (node.adj[i][j]) types[i] = kMinus;
    }
    std::vector<Gain> best;
    std::vector<std::vector<int>> arg;
    combine(x, types, best, arg);
    record(x, kPlus, types, best, arg, members.size());
    if (touches_marker) return;
    record(x, kCircle, types, best, arg, members.size());
    for (std::size_t i = 0; i < c; ++i)
      if (node.adj[i][c]) types[i] = kMinus;
    combine(x, types, best, arg);
    record(x, kMinus, types, best, arg, members.size());
  }

  void trace(int x, int table, int budget, VertexSet& w) const {
    const SplitNode& node = sd_.nodes[x];
    if (node.leaf) {
      const Vertex v = node.vertex;
      const bool black = inst_.in_cover(v);
      if (table == kPlus && black && budget > 0) w.push_back(v);
      if (table == kMinus && !black) w.push_back(v);
      return;
    }
    const Choice& ch = choice_[x][table][budget];
    for (std::size_t i = 0; i < ch.types.size(); ++i)
      trace(node.children[i], ch.types[i], ch.budgets[i], w);
  }

  const Instance& inst_;
  const NiceSplitDecomposition& sd_;
  int k_;
  int cap_;
  std::vector<std::array<std::vector<Choice>, 3>> choice_;
  SplitTables out_;
};

void check_matches(const Instance& inst, const NiceSplitDecomposition& sd) {
  if (sd.n != inst.n() || sd.root < 0)
    throw PreconditionError(
        "split decomposition does not match the instance's vertex count");
}

SolveReport report(const Instance& inst, const SplitTables& t,
                   const NiceSplitDecomposition& sd, const Stopwatch& sw) {
  SolveReport r = t.root_value >= inst.d() ? found(inst, t.swap, "split")
                                            : not_found("split");
  r.best_improvement = t.root_value;
  r.counters.dp_cells = t.cells;
  r.params["sw"] = sd.width;
  r.time_ms = sw.ms();
  return r;
}

}  // namespace

SplitTables run_split_dp(const Instance& inst, const NiceSplitDecomposition& sd,
                         int cap) {
  check_matches(inst, sd);
  if (inst.k() < 0) throw PreconditionError("run_split_dp needs k >= 0");
  return SplitDp(inst, sd, cap).run();
}

SolveReport solve_glswvc_sw(const Instance& inst,
                            const NiceSplitDecomposition& sd) {
  Stopwatch sw;
  check_matches(inst, sd);
  if (inst.k() < 0) return not_found("split");
  return report(inst, run_split_dp(inst, sd, -1), sd, sw);
}

SolveReport solve_glsvc_sw(const Instance& inst,
                           const NiceSplitDecomposition& sd) {
  if (!inst.unit()) throw ModeError("solve_glsvc_sw needs unit weights");
  Stopwatch sw;
  check_matches(inst, sd);
  if (inst.k() < 0) return not_found("split");
  if (inst.d() <= 0) return found(inst, {}, "split");
  const int cap = static_cast<int>((inst.k() + inst.d()) / 2);
  return report(inst, run_split_dp(inst, sd, cap), sd, sw);
}

}  // namespace lsvc
