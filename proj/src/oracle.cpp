#include "lsvc/oracle.hpp"

namespace lsvc {

namespace {

bool better(const Swap& a, const Swap& b) {
  if (a.improvement != b.improvement) return a.improvement > b.improvement;
  if (a.vertices.size() != b.vertices.size())
    return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

struct Search {
  const Instance& inst;
  const OracleOptions& opt;
  std::vector<char> forced, banned;
  std::vector<char> in_w;
  VertexSet w;
  OracleResult result;
  Gain delta = 0;

  void visit() {
    ++result.enumerated;
    for (Vertex v = 0; v < inst.n(); ++v)
      if (forced[v] && !in_w[v]) return;
    // W∩S is independent by construction; check N(W∩S)\S ⊆ W.
    for (Vertex v : w) {
      if (!inst.in_cover(v)) continue;
      for (Vertex u : inst.graph().neighbors(v))
        if (!inst.in_cover(u) && !in_w[u]) return;
    }
    Swap s{w, delta, true};
    if (better(s, result.best_any)) result.best_any = s;
    if (delta < inst.d()) return;
    if (!result.best || better(s, *result.best)) result.best = s;
    if (opt.collect_all) {
      if (result.all_good.size() < opt.cap)
        result.all_good.push_back(s);
      else
        result.truncated = true;
    }
  }

  void run(Vertex next) {
    visit();
    if (static_cast<int>(w.size()) >= inst.k()) return;
    for (Vertex v = next; v < inst.n(); ++v) {
      if (banned[v]) continue;
      if (inst.in_cover(v)) {
        bool clash = false;
        for (Vertex u : inst.graph().neighbors(v))
          if (in_w[u] && inst.in_cover(u)) {
            clash = true;
            break;
          }
        if (clash) continue;
      }
      Gain dv = inst.in_cover(v) ? Gain(inst.weight(v)) : -Gain(inst.weight(v));
      in_w[v] = 1;
      w.push_back(v);
      delta += dv;
      run(v + 1);
      delta -= dv;
      w.pop_back();
      in_w[v] = 0;
    }
  }
};

}  // namespace

OracleResult oracle_constrained(const Instance& inst,
                                const VertexSet& must_contain,
                                const VertexSet& must_avoid,
                                const OracleOptions& opt) {
  if (!opt.force && inst.n() > 24 && inst.k() > 4)
    throw RefusalError("oracle refuses n=" + std::to_string(inst.n()) +
                       ", k=" + std::to_string(inst.k()) +
                       " (needs n <= 24 or k <= 4; pass force to override)");
  Search s{inst, opt, std::vector<char>(inst.n(), 0),
           std::vector<char>(inst.n(), 0), std::vector<char>(inst.n(), 0),
           {}, {}, 0};
  for (Vertex v : must_contain) s.forced[v] = 1;
  for (Vertex v : must_avoid) s.banned[v] = 1;
  // Sentinel; replaced by the first valid swap found (W=∅ unless forced).
  s.result.best_any = Swap{{}, kNegInf, false};
  for (Vertex v : must_contain)
    if (s.banned[v]) return s.result;
  if (inst.k() >= 0) s.run(0);
  return s.result;
}

OracleResult oracle_solve(const Instance& inst, const OracleOptions& opt) {
  return oracle_constrained(inst, {}, {}, opt);
}

SolveReport solve_by_oracle(const Instance& inst, bool force) {
  Stopwatch sw;
  OracleOptions opt;
  opt.force = force;
  OracleResult o = oracle_solve(inst, opt);
  SolveReport r;
  r.algorithm = "oracle";
  if (o.best) {
    r.outcome = Outcome::Found;
    r.swap = *o.best;
  }
  r.best_improvement = o.best_any.improvement;
  r.counters.branch_nodes = o.enumerated;
  r.time_ms = sw.ms();
  return r;
}

}  // namespace lsvc
