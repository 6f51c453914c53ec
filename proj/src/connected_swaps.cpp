#include "lsvc/connected_swaps.hpp"

#include <algorithm>

namespace lsvc {

namespace {

// Black/white expansion. White vertices adjacent to a chosen black vertex
// join W immediately. The first pending white is then either finished (its
// remaining outside neighbors are excluded for good) or extended by one
// outside black neighbor b, excluding the smaller candidates. Every swap is
// grown from its smallest black vertex, so each one is produced once.
class Expander {
 public:
  Expander(const Graph& g, const std::vector<char>& black,
           const std::vector<char>& blocked, int kmax,
           const std::function<void(const VertexSet&)>& emit)
      : g_(g), black_(black), blocked_(blocked), kmax_(kmax), emit_(emit),
        in_w_(g.n(), 0), excluded_(g.n(), 0) {}

  void run() {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!black_[v]) continue;
      seed_ = v;
      std::vector<Vertex> added;
      if (!try_add(v, added)) continue;
      grow();
      undo(added);
    }
  }

 private:
  // Adds black b plus its not-yet-present white neighbors.
  bool try_add(Vertex b, std::vector<Vertex>& added) {
    int extra = 1;
    for (Vertex u : g_.neighbors(b)) {
      if (black_[u]) {
        if (in_w_[u]) return false;
      } else {
        if (blocked_[u]) return false;
        if (!in_w_[u]) ++extra;
      }
    }
    if (static_cast<int>(w_.size()) + extra > kmax_) return false;
    in_w_[b] = 1;
    w_.push_back(b);
    added.push_back(b);
    for (Vertex u : g_.neighbors(b))
      if (!black_[u] && !in_w_[u]) {
        in_w_[u] = 1;
        w_.push_back(u);
        pending_.push_back(u);
        added.push_back(u);
      }
    return true;
  }

  void undo(const std::vector<Vertex>& added) {
    for (auto it = added.rbegin(); it != added.rend(); ++it) {
      in_w_[*it] = 0;
      w_.pop_back();
      if (!black_[*it]) pending_.pop_back();
    }
  }

  void grow() {
    if (finished_ == pending_.size()) {
      VertexSet out = w_;
      std::sort(out.begin(), out.end());
      emit_(out);
      return;
    }
    Vertex u = pending_[finished_];
    std::vector<Vertex> cands;
    for (Vertex b : g_.neighbors(u))
      if (black_[b] && !in_w_[b] && !excluded_[b] && b > seed_)
        cands.push_back(b);
    std::vector<Vertex> marked;
    for (Vertex b : cands) {
      std::vector<Vertex> added;
      if (try_add(b, added)) {
        grow();
        undo(added);
      }
      excluded_[b] = 1;
      marked.push_back(b);
    }
    ++finished_;
    grow();
    --finished_;
    for (Vertex b : marked) excluded_[b] = 0;
  }

  const Graph& g_;
  const std::vector<char>& black_;
  const std::vector<char>& blocked_;
  int kmax_;
  const std::function<void(const VertexSet&)>& emit_;
  std::vector<char> in_w_, excluded_;
  std::vector<Vertex> w_, pending_;
  std::size_t finished_ = 0;
  Vertex seed_ = -1;
};

}  // namespace

void for_each_connected_swap(const Graph& g, const std::vector<char>& black,
                             const std::vector<char>& blocked, int kmax,
                             const std::function<void(const VertexSet&)>& emit) {
  if (kmax < 1) return;
  Expander(g, black, blocked, kmax, emit).run();
}

std::vector<VertexSet> enumerate_connected_swaps(const Instance& inst, int kmax,
                                                 bool balanced_only) {
  std::vector<VertexSet> out;
  std::vector<char> blocked(inst.n(), 0);
  for_each_connected_swap(
      inst.graph(), inst.cover_mask(), blocked, kmax, [&](const VertexSet& w) {
        if (balanced_only) {
          int black = 0;
          for (Vertex v : w) black += inst.in_cover(v);
          if (black != static_cast<int>(w.size()) - black + 1) return;
        }
        out.push_back(w);
      });
  return out;
}

}  // namespace lsvc
