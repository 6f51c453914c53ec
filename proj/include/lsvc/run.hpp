#pragma once

#include <iosfwd>
#include <string>

#include "lsvc/graph.hpp"
#include "lsvc/tree_decomposition.hpp"

namespace lsvc {

enum class Algorithm {
  Auto,
  Oracle,
  Degree,
  HIndex,
  Treewidth,
  Modular,
  ModularDegree,
  Split
};

const char* algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& s);

struct RunConfig {
  std::string graph_path;
  std::string cover_path;  // or "greedy2approx"
  std::string weights_path;
  std::string decomposition_path;  // PACE .td file for the treewidth solver
  Mode mode = Mode::GLSWVC;
  int k = 0;
  Gain d = 1;
  Algorithm algorithm = Algorithm::Auto;
  bool verify = false;
  bool json = false;
  std::uint64_t seed = 0;
  // Auto policy: use the h-index solver when h(G) ≤ ratio·Δ(G).
  double auto_hindex_ratio = 0.5;
};

Instance load_instance(const RunConfig& cfg);

// Throws ModeError when the algorithm cannot handle the instance's mode.
void check_compatible(Algorithm a, const Instance& inst);

Algorithm choose_auto(const Instance& inst, bool has_decomposition,
                      double hindex_ratio = 0.5);

// td is used by the treewidth solver; a min-fill one is built if null.
SolveReport solve_with(const Instance& inst, Algorithm a,
                       const NiceTreeDecomposition* td = nullptr);

struct Verification {
  bool witness_ok = true;       // valid, |W| ≤ k, δ ≥ d
  std::optional<bool> oracle_agrees;  // set when n ≤ 18
  std::string note;
  bool ok() const { return witness_ok && oracle_agrees.value_or(true); }
};

Verification verify_report(const Instance& inst, const SolveReport& r);

struct RunResult {
  Instance instance;
  SolveReport report;
  std::optional<Verification> verification;
};

RunResult run(const RunConfig& cfg);

// Stable JSON rendering with keys answer, swap, improvement, algorithm,
// params, time_ms, counters (and verified when present). Ids are 1-based.
std::string report_json(const RunResult& r);
std::string report_text(const RunResult& r);

// Benchmark sweep read from an INI-style file with a [sweep] section.
struct BenchSpec {
  std::vector<std::string> models{"gnp"};  // gnp, regular, stars, path
  std::vector<int> n{10};
  std::vector<double> p{0.3};
  int degree = 3;
  int max_clique = 3;
  std::vector<int> k{3};
  std::vector<Gain> d{1};
  Mode mode = Mode::GLSVC;
  int instances = 10;
  std::uint64_t seed = 1;
  double extra_cover = 0.2;
  std::vector<Algorithm> algorithms;  // empty: all applicable
  int threads = 0;                    // 0: hardware concurrency
};

BenchSpec parse_bench_spec(std::istream& in);
BenchSpec load_bench_spec(const std::string& path);

// Writes CSV rows ordered by (configuration, instance, algorithm). Returns
// false if any instance showed disagreement between solvers.
bool bench(const BenchSpec& spec, std::ostream& csv);

}  // namespace lsvc
