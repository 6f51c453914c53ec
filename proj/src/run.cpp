#include "lsvc/run.hpp"

#include <algorithm>
#include <atomic>
#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "lsvc/degree_solver.hpp"
#include "lsvc/generators.hpp"
#include "lsvc/hindex_solver.hpp"
#include "lsvc/io.hpp"
#include "lsvc/modular_solver.hpp"
#include "lsvc/oracle.hpp"
#include "lsvc/split_solver.hpp"
#include "lsvc/treewidth_solver.hpp"

namespace lsvc {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Auto: return "auto";
    case Algorithm::Oracle: return "oracle";
    case Algorithm::Degree: return "degree";
    case Algorithm::HIndex: return "hindex";
    case Algorithm::Treewidth: return "treewidth";
    case Algorithm::Modular: return "modular";
    case Algorithm::ModularDegree: return "modular-degree";
    case Algorithm::Split: return "split";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& s) {
  for (Algorithm a :
       {Algorithm::Auto, Algorithm::Oracle, Algorithm::Degree,
        Algorithm::HIndex, Algorithm::Treewidth, Algorithm::Modular,
        Algorithm::ModularDegree, Algorithm::Split})
    if (s == algorithm_name(a)) return a;
  throw InputError("unknown algorithm '" + s + "'");
}

Instance load_instance(const RunConfig& cfg) {
  Graph g = load_dimacs(cfg.graph_path);
  VertexSet cover = cfg.cover_path == "greedy2approx"
                        ? greedy2approx(g)
                        : load_cover(cfg.cover_path, g.n());
  require_cover(g, cover);
  std::vector<Weight> w;
  if (!cfg.weights_path.empty()) w = load_weights(cfg.weights_path, g.n());
  return Instance::create(std::move(g), cover, std::move(w), cfg.k, cfg.d,
                          cfg.mode);
}

void check_compatible(Algorithm a, const Instance& inst) {
  if (a == Algorithm::ModularDegree && !inst.unit())
    throw ModeError(
        "algorithm modular-degree only handles unit weights (mode glsvc or "
        "lsvc); use --algorithm modular for weighted instances");
}

Algorithm choose_auto(const Instance& inst, bool has_decomposition,
                      double hindex_ratio) {
  if (has_decomposition) return Algorithm::Treewidth;
  const int delta = inst.graph().max_degree();
  const int h = compute_h_index(inst.graph()).h;
  return h <= hindex_ratio * delta ? Algorithm::HIndex : Algorithm::Degree;
}

SolveReport solve_with(const Instance& inst, Algorithm a,
                       const NiceTreeDecomposition* td) {
  check_compatible(a, inst);
  switch (a) {
    case Algorithm::Auto:
      return solve_with(inst, choose_auto(inst, td != nullptr), td);
    case Algorithm::Oracle:
      return solve_by_oracle(inst);
    case Algorithm::Degree:
      switch (inst.mode()) {
        case Mode::LSVC:
        case Mode::GLSVC: return solve_glsvc_by_degree(inst);
        case Mode::LSWVC: return solve_lswvc_by_degree(inst);
        case Mode::GLSWVC: return solve_glswvc_by_degree(inst);
      }
      break;
    case Algorithm::HIndex:
      return solve_glswvc_by_hindex(inst);
    case Algorithm::Treewidth: {
      NiceTreeDecomposition own;
      if (!td) {
        own = heuristic_tree_decomposition(inst.graph());
        td = &own;
      }
      SolveReport r = inst.unit() ? solve_glsvc_tw(inst, *td)
                                  : solve_max_improvement_tw(inst, *td);
      r.params["tw_width"] = td->width;
      return r;
    }
    case Algorithm::Modular: {
      ModularDecomposition md = compute_modular_decomposition(inst.graph());
      return inst.unit() ? solve_glsvc_mw(inst, md) : solve_glswvc_mw(inst, md);
    }
    case Algorithm::ModularDegree:
      return solve_glsvc_delta_md(inst,
                                  compute_modular_decomposition(inst.graph()));
    case Algorithm::Split: {
      NiceSplitDecomposition sd = compute_split_decomposition(inst.graph());
      return inst.unit() ? solve_glsvc_sw(inst, sd) : solve_glswvc_sw(inst, sd);
    }
  }
  throw std::logic_error("unhandled algorithm");
}

Verification verify_report(const Instance& inst, const SolveReport& r) {
  Verification v;
  if (r.yes()) {
    const VertexSet& w = r.swap->vertices;
    std::ostringstream why;
    if (!is_valid_swap(inst, w)) why << "witness is not a valid swap; ";
    if (static_cast<int>(w.size()) > inst.k()) why << "witness exceeds k; ";
    if (improvement(inst, w) < inst.d()) why << "witness improvement below d; ";
    v.note = why.str();
    v.witness_ok = v.note.empty();
  }
  if (inst.n() <= 18) {
    OracleOptions opt;
    opt.force = true;
    v.oracle_agrees = oracle_solve(inst, opt).yes() == r.yes();
    if (!*v.oracle_agrees) v.note += "oracle disagrees on yes/no";
  }
  return v;
}

RunResult run(const RunConfig& cfg) {
  RunResult out;
  out.instance = load_instance(cfg);
  std::optional<NiceTreeDecomposition> td;
  if (!cfg.decomposition_path.empty())
    td = load_tree_decomposition(out.instance.graph(), cfg.decomposition_path);
  Algorithm a = cfg.algorithm;
  if (a == Algorithm::Auto)
    a = choose_auto(out.instance, td.has_value(), cfg.auto_hindex_ratio);
  out.report = solve_with(out.instance, a, td ? &*td : nullptr);
  if (cfg.verify) out.verification = verify_report(out.instance, out.report);
  return out;
}

namespace {

std::vector<Vertex> one_based(const VertexSet& w) {
  std::vector<Vertex> out;
  for (Vertex v : w) out.push_back(v + 1);
  return out;
}

}  // namespace

std::string report_json(const RunResult& r) {
  nlohmann::ordered_json j;
  const SolveReport& rep = r.report;
  j["answer"] = rep.yes() ? "yes" : "no";
  if (rep.yes()) {
    j["swap"] = one_based(rep.swap->vertices);
    j["improvement"] = rep.swap->improvement;
  } else {
    j["swap"] = nullptr;
    j["improvement"] = nullptr;
  }
  j["algorithm"] = rep.algorithm;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, val] : rep.params) params[key] = val;
  if (rep.best_improvement) params["best_improvement"] = *rep.best_improvement;
  j["params"] = params;
  j["time_ms"] = rep.time_ms;
  j["counters"] = {{"branch_nodes", rep.counters.branch_nodes},
                   {"dp_cells", rep.counters.dp_cells},
                   {"max_depth", rep.counters.max_depth}};
  if (r.verification) {
    j["verified"] = r.verification->ok();
    if (!r.verification->note.empty()) j["verify_note"] = r.verification->note;
  }
  return j.dump();
}

std::string report_text(const RunResult& r) {
  std::ostringstream out;
  const SolveReport& rep = r.report;
  out << "answer: " << (rep.yes() ? "yes" : "no (locally optimal)") << '\n';
  if (rep.yes()) {
    out << "swap:";
    for (Vertex v : rep.swap->vertices) out << ' ' << v + 1;
    out << "\nimprovement: " << rep.swap->improvement << '\n';
  }
  out << "algorithm: " << rep.algorithm << '\n';
  for (const auto& [key, val] : rep.params) out << key << ": " << val << '\n';
  out << "time_ms: " << rep.time_ms << '\n';
  out << "branch_nodes: " << rep.counters.branch_nodes
      << "\ndp_cells: " << rep.counters.dp_cells << '\n';
  if (r.verification)
    out << "verified: " << (r.verification->ok() ? "yes" : "no") << ' '
        << r.verification->note << '\n';
  return out.str();
}

namespace {

template <typename T>
std::vector<T> list_of(const boost::property_tree::ptree& pt,
                       const std::string& key, std::vector<T> fallback) {
  auto raw = pt.get_optional<std::string>(key);
  if (!raw) return fallback;
  std::string s = *raw;
  boost::erase_all(s, "[");
  boost::erase_all(s, "]");
  boost::erase_all(s, "\"");
  std::vector<std::string> parts;
  boost::split(parts, s, boost::is_any_of(","));
  std::vector<T> out;
  for (auto& p : parts) {
    boost::trim(p);
    if (p.empty()) continue;
    std::istringstream ss(p);
    T v{};
    if (!(ss >> v)) throw InputError("bench spec: bad value '" + p + "' for " + key);
    out.push_back(v);
  }
  return out;
}

std::string scalar(const boost::property_tree::ptree& pt, const std::string& key,
                   const std::string& fallback) {
  std::string s = pt.get<std::string>(key, fallback);
  boost::erase_all(s, "\"");
  boost::trim(s);
  return s;
}

}  // namespace

BenchSpec parse_bench_spec(std::istream& in) {
  boost::property_tree::ptree root;
  try {
    boost::property_tree::read_ini(in, root);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw InputError(std::string("bench spec: ") + e.what());
  }
  const auto& pt = root.get_child("sweep", root);
  BenchSpec spec;
  spec.models = list_of<std::string>(pt, "models", spec.models);
  spec.n = list_of<int>(pt, "n", spec.n);
  spec.p = list_of<double>(pt, "p", spec.p);
  spec.degree = std::stoi(scalar(pt, "degree", std::to_string(spec.degree)));
  spec.max_clique =
      std::stoi(scalar(pt, "max_clique", std::to_string(spec.max_clique)));
  spec.k = list_of<int>(pt, "k", spec.k);
  spec.d = list_of<Gain>(pt, "d", spec.d);
  spec.mode = parse_mode(scalar(pt, "mode", mode_name(spec.mode)));
  spec.instances = std::stoi(scalar(pt, "instances", std::to_string(spec.instances)));
  spec.seed = std::stoull(scalar(pt, "seed", std::to_string(spec.seed)));
  spec.extra_cover =
      std::stod(scalar(pt, "extra_cover", std::to_string(spec.extra_cover)));
  spec.threads = std::stoi(scalar(pt, "threads", std::to_string(spec.threads)));
  for (const auto& a : list_of<std::string>(pt, "algorithms", {}))
    spec.algorithms.push_back(parse_algorithm(a));
  for (const auto& m : spec.models)
    if (m != "gnp" && m != "regular" && m != "stars" && m != "path")
      throw InputError("bench spec: unknown model '" + m + "'");
  return spec;
}

BenchSpec load_bench_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_bench_spec(in);
}

namespace {

struct BenchJob {
  int config = 0;
  int index = 0;
  std::string model;
  int n = 0;
  double p = 0;
  int k = 0;
  Gain d = 0;
};

bool mode_accepts(Mode m, int k, Gain d) {
  switch (m) {
    case Mode::LSVC:
    case Mode::LSWVC: return d == 1;
    case Mode::GLSVC: return d >= 1 && d <= k;
    case Mode::GLSWVC: return d >= 0;
  }
  return false;
}

Graph make_graph(const BenchJob& job, const BenchSpec& spec, Rng& rng) {
  if (job.model == "gnp") return gnp(job.n, job.p, rng);
  if (job.model == "regular") return random_regular(job.n, spec.degree, rng);
  if (job.model == "path") return path_graph(job.n);
  const int avg = (spec.max_clique + 1) / 2 + 1;
  return stars_of_cliques(std::max(1, job.n / avg - 1), spec.max_clique, rng);
}

struct InstanceParams {
  int max_degree = 0, h = 0, tw = -1, mw = -1, delta_md = -1, sw = -1;
};

std::string run_job(const BenchJob& job, const BenchSpec& spec, bool& agree) {
  std::seed_seq seq{spec.seed, static_cast<std::uint64_t>(job.config),
                    static_cast<std::uint64_t>(job.index)};
  Rng rng(seq);
  Graph g = make_graph(job, spec, rng);
  VertexSet cover = random_cover(g, spec.extra_cover, rng);
  std::vector<Weight> w;
  if (!unit_weights(spec.mode)) w = random_weights(g.n(), 1, 8, rng);
  Instance inst = Instance::create(g, cover, w, job.k, job.d, spec.mode);

  InstanceParams ip;
  ip.max_degree = inst.graph().max_degree();
  ip.h = compute_h_index(inst.graph()).h;
  NiceTreeDecomposition td = heuristic_tree_decomposition(inst.graph());
  ip.tw = td.width;
  std::optional<ModularDecomposition> md;
  std::optional<NiceSplitDecomposition> sd;
  if (inst.n() >= 1) {
    md = compute_modular_decomposition(inst.graph());
    ip.mw = md->width;
    ip.delta_md = compute_delta_md(*md);
    sd = compute_split_decomposition(inst.graph());
    ip.sw = sd->width;
  }

  std::vector<Algorithm> algs = spec.algorithms;
  if (algs.empty())
    algs = {Algorithm::Oracle,  Algorithm::Degree,        Algorithm::HIndex,
            Algorithm::Treewidth, Algorithm::Modular, Algorithm::ModularDegree,
            Algorithm::Split};
  struct Row {
    Algorithm a;
    std::string answer;
    std::string improvement;
    SolveReport r;
  };
  std::vector<Row> rows;
  std::optional<bool> verdict;
  agree = true;
  for (Algorithm a : algs) {
    if (a == Algorithm::ModularDegree && !inst.unit()) continue;
    if (a == Algorithm::Oracle && inst.n() > 24 && inst.k() > 4) continue;
    Row row{a, "", "", {}};
    try {
      switch (a) {
        case Algorithm::Treewidth:
          row.r = solve_with(inst, a, &td);
          break;
        case Algorithm::Modular:
          row.r = inst.unit() ? solve_glsvc_mw(inst, *md) : solve_glswvc_mw(inst, *md);
          break;
        case Algorithm::ModularDegree:
          row.r = solve_glsvc_delta_md(inst, *md);
          break;
        case Algorithm::Split:
          row.r = inst.unit() ? solve_glsvc_sw(inst, *sd) : solve_glswvc_sw(inst, *sd);
          break;
        default:
          row.r = solve_with(inst, a);
      }
      row.answer = row.r.yes() ? "yes" : "no";
      if (row.r.yes()) {
        row.improvement = std::to_string(row.r.swap->improvement);
        if (!verify_report(inst, row.r).witness_ok) agree = false;
      }
      if (!verdict) verdict = row.r.yes();
      else if (*verdict != row.r.yes()) agree = false;
    } catch (const std::exception& e) {
      row.answer = "error";
      agree = false;
    }
    rows.push_back(std::move(row));
  }
  std::ostringstream out;
  for (const Row& row : rows) {
    out << job.config << ',' << job.index << ',' << job.model << ','
        << inst.n() << ',' << inst.graph().m() << ',' << mode_name(inst.mode())
        << ',' << inst.k() << ',' << inst.d() << ',' << algorithm_name(row.a)
        << ',' << row.answer << ',' << row.improvement << ','
        << row.r.time_ms << ',' << row.r.counters.branch_nodes << ','
        << row.r.counters.dp_cells << ',' << ip.max_degree << ',' << ip.h
        << ',' << ip.tw << ',' << ip.mw << ',' << ip.delta_md << ',' << ip.sw
        << ',' << (agree ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace

bool bench(const BenchSpec& spec, std::ostream& csv) {
  std::vector<BenchJob> jobs;
  int config = 0;
  for (const auto& model : spec.models)
    for (int n : spec.n)
      for (double p : model == "gnp" ? spec.p : std::vector<double>{0.0})
        for (int k : spec.k)
          for (Gain d : spec.d) {
            if (!mode_accepts(spec.mode, k, d)) continue;
            if (model == "regular" &&
                (spec.degree >= n || (n * spec.degree) % 2 != 0))
              continue;
            for (int i = 0; i < spec.instances; ++i)
              jobs.push_back({config, i, model, n, p, k, d});
            ++config;
          }
  std::vector<std::string> out(jobs.size());
  std::vector<char> ok(jobs.size(), 1);
  std::atomic<std::size_t> next{0};
  unsigned threads = spec.threads > 0 ? spec.threads
                                      : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, jobs.size()));
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      bool agree = true;
      try {
        out[i] = run_job(jobs[i], spec, agree);
      } catch (const std::exception& e) {
        out[i] = "";
        agree = false;
      }
      ok[i] = agree;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  csv << "config,instance,model,n,m,mode,k,d,algorithm,answer,improvement,"
         "time_ms,branch_nodes,dp_cells,max_degree,h_index,tw_width,mw,"
         "delta_md,sw,agree\n";
  bool all = true;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    csv << out[i];
    all = all && ok[i];
  }
  return all;
}

}  // namespace lsvc
