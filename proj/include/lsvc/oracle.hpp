#pragma once

#include "lsvc/graph.hpp"

namespace lsvc {

struct OracleOptions {
  bool force = false;        // skip the size guard
  bool collect_all = false;  // fill all_good
  std::size_t cap = 1'000'000;
};

struct OracleResult {
  // Best good swap under (max improvement, min size, lexicographic).
  std::optional<Swap> best;
  // Best valid k-swap regardless of d (the empty swap unless constrained).
  // `valid` is false when no swap meets the constraints.
  Swap best_any;
  std::vector<Swap> all_good;
  bool truncated = false;
  std::uint64_t enumerated = 0;

  bool yes() const { return best.has_value(); }
};

OracleResult oracle_solve(const Instance& inst, const OracleOptions& opt = {});
OracleResult oracle_constrained(const Instance& inst,
                                const VertexSet& must_contain,
                                const VertexSet& must_avoid,
                                const OracleOptions& opt = {});

// Oracle wrapped as a SolveReport.
SolveReport solve_by_oracle(const Instance& inst, bool force = false);

}  // namespace lsvc
