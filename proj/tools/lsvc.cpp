#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lsvc/generators.hpp"
#include "lsvc/io.hpp"
#include "lsvc/modular_decomposition.hpp"
#include "lsvc/run.hpp"
#include "lsvc/split_decomposition.hpp"
#include "lsvc/tree_decomposition.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

int fail(const std::string& msg, const std::string& hint = "") {
  std::cerr << "error: " << msg << '\n';
  if (!hint.empty()) std::cerr << "hint: " << hint << '\n';
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lsvc;
  CLI::App app{"Local search for (weighted) vertex cover"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string mode = "glswvc", algorithm = "auto";
  auto* solve = app.add_subcommand("solve", "search for an improving k-swap");
  solve->add_option("--graph", cfg.graph_path, "DIMACS graph")->required();
  solve->add_option("--cover", cfg.cover_path,
                    "cover file or 'greedy2approx'")->required();
  solve->add_option("--weights", cfg.weights_path, "vertex weight file");
  solve->add_option("--mode", mode, "lsvc | glsvc | lswvc | glswvc");
  solve->add_option("--k", cfg.k, "swap size bound")->required();
  solve->add_option("--d", cfg.d, "required improvement");
  solve->add_option("--algorithm", algorithm,
                    "auto | oracle | degree | hindex | treewidth | modular | "
                    "modular-degree | split");
  solve->add_option("--decomposition", cfg.decomposition_path,
                    "PACE .td tree decomposition");
  solve->add_flag("--verify", cfg.verify, "re-check the answer");
  solve->add_flag("--json", cfg.json, "JSON output");
  solve->add_option("--hindex-ratio", cfg.auto_hindex_ratio,
                    "auto picks hindex when h <= ratio * max degree");

  std::string spec_path, out_path;
  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark sweep");
  bench_cmd->add_option("--spec", spec_path, "sweep file ([sweep] section)")
      ->required();
  bench_cmd->add_option("--out", out_path, "CSV output (default stdout)");

  std::string model = "gnp", prefix = "instance";
  int n = 12, degree = 3, max_clique = 3;
  double p = 0.3, extra = 0.2;
  std::uint64_t seed = 1;
  bool weights = false;
  auto* gen = app.add_subcommand("gen", "write a random instance");
  gen->add_option("--model", model, "gnp | regular | stars | path");
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--p", p, "edge probability (gnp)");
  gen->add_option("--degree", degree, "degree (regular)");
  gen->add_option("--max-clique", max_clique, "largest clique (stars)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--extra-cover", extra,
                  "probability of adding an independent vertex to the cover");
  gen->add_flag("--weights", weights, "also write random weights in [1,8]");
  gen->add_option("--prefix", prefix,
                  "output prefix: <prefix>.dimacs, .cover, .weights");

  std::string dec_graph, dec_kind = "modular";
  auto* dec = app.add_subcommand("decompose", "dump a decomposition");
  dec->add_option("--graph", dec_graph, "DIMACS graph")->required();
  dec->add_option("--kind", dec_kind, "modular | split | tree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*solve) {
      cfg.mode = parse_mode(mode);
      cfg.algorithm = parse_algorithm(algorithm);
      RunResult r = run(cfg);
      std::cout << (cfg.json ? report_json(r) + "\n" : report_text(r));
      if (r.verification && !r.verification->ok())
        return fail("verification failed: " + r.verification->note);
      return r.report.yes() ? kExitYes : kExitNo;
    }
    if (*bench_cmd) {
      BenchSpec spec = load_bench_spec(spec_path);
      bool agree;
      if (out_path.empty()) {
        agree = bench(spec, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) return fail("cannot write '" + out_path + "'");
        agree = bench(spec, out);
      }
      if (!agree) std::cerr << "warning: solvers disagreed on some instance\n";
      return agree ? 0 : 1;
    }
    if (*gen) {
      Rng rng(seed);
      Graph g = model == "gnp"       ? gnp(n, p, rng)
                : model == "regular" ? random_regular(n, degree, rng)
                : model == "path"    ? path_graph(n)
                : model == "stars"   ? stars_of_cliques(n, max_clique, rng)
                                     : throw InputError("unknown model '" + model + "'");
      VertexSet cover = random_cover(g, extra, rng);
      std::vector<Weight> w;
      if (weights) w = random_weights(g.n(), 1, 8, rng);
      Instance inst = Instance::create(g, cover, w, 0, 0, Mode::GLSWVC);
      InstancePaths paths{prefix + ".dimacs", prefix + ".cover",
                          weights ? prefix + ".weights" : ""};
      write_instance(inst, paths);
      std::cout << paths.graph << '\n' << paths.cover << '\n';
      if (weights) std::cout << paths.weights << '\n';
      return 0;
    }
    if (*dec) {
      Graph g = load_dimacs(dec_graph);
      if (dec_kind == "modular") {
        dump_modular(std::cout, compute_modular_decomposition(g));
      } else if (dec_kind == "split") {
        dump_split(std::cout, compute_split_decomposition(g));
      } else if (dec_kind == "tree") {
        write_td(std::cout, min_fill_decomposition(g), g.n());
      } else {
        return fail("unknown decomposition kind '" + dec_kind + "'");
      }
      return 0;
    }
  } catch (const ModeError& e) {
    return fail(e.what(), "check --mode, --d and --algorithm compatibility");
  } catch (const PreconditionError& e) {
    return fail(e.what(), "the chosen solver does not apply to this input");
  } catch (const RefusalError& e) {
    return fail(e.what(), "pick a parameterized algorithm instead");
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return kExitError;
}
