#include "lsvc/treewidth_solver.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "lsvc/swap_algebra.hpp"

namespace lsvc {

namespace {

using Mask = std::uint32_t;

Mask drop_bit(Mask m, int p) {
  Mask lo = m & ((Mask(1) << p) - 1);
  Mask hi = (m >> (p + 1)) << p;
  return lo | hi;
}

Mask insert_bit(Mask m, int p, bool value) {
  Mask lo = m & ((Mask(1) << p) - 1);
  Mask hi = (m >> p) << (p + 1);
  return lo | hi | (Mask(value) << p);
}

int position(const VertexSet& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) -
                          bag.begin());
}

struct Table {
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<Gain> values;  // (k+1) per entry
};

std::uint64_t key(Mask s, Mask c) { return std::uint64_t(s) | (std::uint64_t(c) << 32); }

class Dp {
 public:
  Dp(const Instance& inst, const NiceTreeDecomposition& td, int cap)
      : inst_(inst), td_(td), k_(inst.k()), cap_(cap) {
    const std::size_t nn = td.nodes.size();
    tables_.resize(nn);
    black_.resize(nn);
    adj_.resize(nn);
    for (std::size_t x = 0; x < nn; ++x) {
      const VertexSet& bag = td.nodes[x].bag;
      if (bag.size() > 31)
        throw PreconditionError("tree decomposition width above 30");
      adj_[x].assign(bag.size(), 0);
      for (std::size_t i = 0; i < bag.size(); ++i) {
        if (inst.in_cover(bag[i])) black_[x] |= Mask(1) << i;
        for (std::size_t j = 0; j < bag.size(); ++j)
          if (i != j && inst.graph().adjacent(bag[i], bag[j]))
            adj_[x][i] |= Mask(1) << j;
      }
    }
  }

  void compute() {
    for (std::size_t x = 0; x < td_.nodes.size(); ++x) fill(static_cast<int>(x));
  }

  Gain get(int x, Mask s, Mask c, int kk) const {
    if (kk < 0 || kk > k_) return kNegInf;
    auto it = tables_[x].index.find(key(s, c));
    if (it == tables_[x].index.end()) return kNegInf;
    return tables_[x].values[it->second * (k_ + 1) + kk];
  }

  VertexSet traceback(int root) const;
  std::uint64_t cells = 0;

 private:
  Mask nbr(int x, Mask s) const {
    Mask out = 0;
    for (Mask t = s; t; t &= t - 1) out |= adj_[x][std::countr_zero(t)];
    return out;
  }
  bool independent(int x, Mask s) const { return (nbr(x, s) & s) == 0; }
  int wsize(int x, Mask s, Mask c) const {
    Mask white_nb = nbr(x, s) & ~black_[x];
    return std::popcount(s) + std::popcount(c) + std::popcount(white_nb);
  }
  Gain wdelta(int x, Mask s, Mask c) const {
    const VertexSet& bag = td_.nodes[x].bag;
    Gain d = 0;
    Mask white = (nbr(x, s) & ~black_[x]) | c;
    for (Mask t = s; t; t &= t - 1) d += inst_.weight(bag[std::countr_zero(t)]);
    for (Mask t = white; t; t &= t - 1)
      d -= inst_.weight(bag[std::countr_zero(t)]);
    return d;
  }

  // Enumerates the (S_x, C_x) pairs kept in the table of x.
  template <class F>
  void entries(int x, F&& f) const {
    const int b = static_cast<int>(td_.nodes[x].bag.size());
    const Mask all = b == 32 ? ~Mask(0) : (Mask(1) << b) - 1;
    const Mask black = black_[x];
    std::vector<Mask> ss;
    // Independent subsets of the bag's cover vertices within the cap.
    for (Mask s = black;; s = (s - 1) & black) {
      if (std::popcount(s) <= cap_ && independent(x, s)) ss.push_back(s);
      if (s == 0) break;
    }
    for (Mask s : ss) {
      Mask free = all & ~black & ~nbr(x, s);
      int room = cap_ - std::popcount(s);
      for (Mask c = free;; c = (c - 1) & free) {
        if (std::popcount(c) <= room) f(s, c);
        if (c == 0) break;
      }
    }
  }

  void fill(int x);

  const Instance& inst_;
  const NiceTreeDecomposition& td_;
  int k_;
  int cap_;
  std::vector<Table> tables_;
  std::vector<Mask> black_;
  std::vector<std::vector<Mask>> adj_;
};

void Dp::fill(int x) {
  const NiceNode& node = td_.nodes[x];
  Table& t = tables_[x];
  entries(x, [&](Mask s, Mask c) {
    std::size_t slot = t.values.size() / (k_ + 1);
    t.index.emplace(key(s, c), slot);
    t.values.resize(t.values.size() + k_ + 1, kNegInf);
    const int w = wsize(x, s, c);
    for (int kk = 0; kk <= k_; ++kk) {
      ++cells;
      Gain val = kNegInf;
      if (w > kk) {
        t.values[slot * (k_ + 1) + kk] = kNegInf;
        continue;
      }
      switch (node.kind) {
        case NodeKind::Leaf:
          val = 0;
          break;
        case NodeKind::Introduce: {
          const int y = node.children[0];
          const int p = position(node.bag, node.vertex);
          const Mask bit = Mask(1) << p;
          const Weight wv = inst_.weight(node.vertex);
          if (s & bit) {
            Mask rest = s & ~bit;
            Mask cstar = adj_[x][p] & ~black_[x] & ~nbr(x, rest);
            val = sat_add(get(y, drop_bit(rest, p), drop_bit(c | cstar, p),
                              kk - 1),
                          wv);
          } else if (!(black_[x] & bit) && ((c | nbr(x, s)) & bit)) {
            val = sat_add(get(y, drop_bit(s, p), drop_bit(c & ~bit, p), kk - 1),
                          -Gain(wv));
          } else {
            val = get(y, drop_bit(s, p), drop_bit(c, p), kk);
          }
          break;
        }
        case NodeKind::Forget: {
          const int y = node.children[0];
          const int p = position(td_.nodes[y].bag, node.vertex);
          const Mask vbit_y = Mask(1) << p;
          val = get(y, insert_bit(s, p, false), insert_bit(c, p, false), kk);
          if (inst_.in_cover(node.vertex)) {
            // C_x \ N(v): neighbors of v drop out of C once v joins S.
            Mask vn = adj_[y][p];
            Mask cy = insert_bit(c, p, false) & ~vn;
            val = std::max(val, get(y, insert_bit(s, p, false) | vbit_y, cy, kk));
          } else {
            val = std::max(val, get(y, insert_bit(s, p, false),
                                    insert_bit(c, p, false) | vbit_y, kk));
          }
          break;
        }
        case NodeKind::Join: {
          const int y = node.children[0], z = node.children[1];
          const Gain dw = wdelta(x, s, c);
          for (int k2 = 0; k2 <= kk - w; ++k2) {
            Gain a = get(y, s, c, k2 + w);
            Gain b = get(z, s, c, kk - k2);
            if (is_neg_inf(a) || is_neg_inf(b)) continue;
            val = std::max(val, a + b - dw);
          }
          break;
        }
      }
      t.values[slot * (k_ + 1) + kk] = is_neg_inf(val) ? kNegInf : val;
    }
  });
}

VertexSet Dp::traceback(int root) const {
  struct Frame {
    int x;
    Mask s, c;
    int kk;
  };
  VertexSet w;
  std::vector<Frame> stack{{root, 0, 0, k_}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const NiceNode& node = td_.nodes[f.x];
    const Gain val = get(f.x, f.s, f.c, f.kk);
    switch (node.kind) {
      case NodeKind::Leaf:
        break;
      case NodeKind::Introduce: {
        const int y = node.children[0];
        const int p = position(node.bag, node.vertex);
        const Mask bit = Mask(1) << p;
        if (f.s & bit) {
          Mask rest = f.s & ~bit;
          Mask cstar = adj_[f.x][p] & ~black_[f.x] & ~nbr(f.x, rest);
          w.push_back(node.vertex);
          stack.push_back({y, drop_bit(rest, p), drop_bit(f.c | cstar, p), f.kk - 1});
        } else if (!(black_[f.x] & bit) && ((f.c | nbr(f.x, f.s)) & bit)) {
          w.push_back(node.vertex);
          stack.push_back({y, drop_bit(f.s, p), drop_bit(f.c & ~bit, p), f.kk - 1});
        } else {
          stack.push_back({y, drop_bit(f.s, p), drop_bit(f.c, p), f.kk});
        }
        break;
      }
      case NodeKind::Forget: {
        const int y = node.children[0];
        const int p = position(td_.nodes[y].bag, node.vertex);
        const Mask vbit_y = Mask(1) << p;
        Mask s0 = insert_bit(f.s, p, false), c0 = insert_bit(f.c, p, false);
        if (get(y, s0, c0, f.kk) == val) {
          stack.push_back({y, s0, c0, f.kk});
        } else if (inst_.in_cover(node.vertex)) {
          stack.push_back({y, s0 | vbit_y, c0 & ~adj_[y][p], f.kk});
        } else {
          stack.push_back({y, s0, c0 | vbit_y, f.kk});
        }
        break;
      }
      case NodeKind::Join: {
        const int y = node.children[0], z = node.children[1];
        const int ws = wsize(f.x, f.s, f.c);
        const Gain dw = wdelta(f.x, f.s, f.c);
        for (int k2 = 0; k2 <= f.kk - ws; ++k2) {
          Gain a = get(y, f.s, f.c, k2 + ws);
          Gain b = get(z, f.s, f.c, f.kk - k2);
          if (is_neg_inf(a) || is_neg_inf(b) || a + b - dw != val) continue;
          stack.push_back({y, f.s, f.c, k2 + ws});
          stack.push_back({z, f.s, f.c, f.kk - k2});
          break;
        }
        break;
      }
    }
  }
  return normalized(std::move(w));
}

void check_matches(const Instance& inst, const NiceTreeDecomposition& td) {
  if (td.n != inst.n())
    throw InputError("tree decomposition is for " + std::to_string(td.n) +
                     " vertices, graph has " + std::to_string(inst.n()));
}

}  // namespace

TwOutcome run_tw_dp(const Instance& inst, const NiceTreeDecomposition& td,
                    int cap) {
  check_matches(inst, td);
  TwOutcome out;
  if (inst.k() < 0) {
    out.root_value = kNegInf;
    return out;
  }
  Dp dp(inst, td, cap < 0 ? inst.k() : cap);
  dp.compute();
  out.root_value = dp.get(td.root, 0, 0, inst.k());
  out.swap = dp.traceback(td.root);
  out.cells = dp.cells;
  return out;
}

SolveReport solve_max_improvement_tw(const Instance& inst,
                                     const NiceTreeDecomposition& td) {
  Stopwatch sw;
  if (inst.k() < 0) return not_found("treewidth");
  TwOutcome o = run_tw_dp(inst, td, inst.k());
  SolveReport r = o.root_value >= inst.d() ? found(inst, o.swap, "treewidth")
                                          : not_found("treewidth");
  r.best_improvement = o.root_value;
  r.counters.dp_cells = o.cells;
  r.params["width"] = td.width;
  r.time_ms = sw.ms();
  return r;
}

SolveReport solve_glsvc_tw(const Instance& inst,
                           const NiceTreeDecomposition& td) {
  if (!inst.unit()) throw ModeError("solve_glsvc_tw needs unit weights");
  Stopwatch sw;
  if (inst.k() < 0) return not_found("treewidth");
  if (inst.d() <= 0) return found(inst, {}, "treewidth");
  TwOutcome o = run_tw_dp(inst, td, std::max(0, small_subset_bound(inst)));
  SolveReport r = o.root_value >= inst.d() ? found(inst, o.swap, "treewidth")
                                          : not_found("treewidth");
  r.counters.dp_cells = o.cells;
  r.params["width"] = td.width;
  r.time_ms = sw.ms();
  return r;
}

}  // namespace lsvc
