#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lsvc/io.hpp"
#include "lsvc/run.hpp"
#include "test_support.hpp"

namespace lsvc {
namespace {

namespace fs = std::filesystem;

const char* kP3 = "c path\np edge 3 2\ne 1 2\ne 2 3\n";

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lsvc_io_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return (dir_ / name).string();
  }
  fs::path dir_;
};

TEST(Dimacs, ParsesPath) {
  std::istringstream in(kP3);
  Graph g = read_dimacs(in);
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}));
}

TEST(Dimacs, ErrorsNameSourceAndLine) {
  std::istringstream bad("p edge 3 1\ne 1 4\n");
  EXPECT_EQ(error_of([&] { read_dimacs(bad, "g.dimacs"); }).rfind("g.dimacs:2:", 0),
            0u);
  std::istringstream loop("p edge 3 1\ne 2 2\n");
  EXPECT_THROW(read_dimacs(loop), InputError);
  std::istringstream missing("e 1 2\n");
  EXPECT_THROW(read_dimacs(missing), InputError);
}

TEST(Cover, Examples) {
  std::istringstream gin(kP3);
  Graph g = read_dimacs(gin);
  std::istringstream b("2\n"), ac("1 3\n"), a("1\n");
  VertexSet sb = read_cover(b, 3);
  EXPECT_EQ(sb, VertexSet{1});
  EXPECT_NO_THROW(require_cover(g, sb));
  VertexSet sac = read_cover(ac, 3);
  EXPECT_EQ(sac, (VertexSet{0, 2}));
  EXPECT_NO_THROW(require_cover(g, sac));
  VertexSet sa = read_cover(a, 3);
  EXPECT_NE(error_of([&] { require_cover(g, sa); }).find("edge (2,3)"),
            std::string::npos);
}

TEST(Weights, RequireEveryVertexOnce) {
  std::istringstream ok("1 4\n2 1\n3 7\n");
  EXPECT_EQ(read_weights(ok, 3), (std::vector<Weight>{4, 1, 7}));
  std::istringstream few("1 4\n");
  EXPECT_NE(error_of([&] { read_weights(few, 3); }).find("1 weights given for 3"),
            std::string::npos);
  std::istringstream dup("1 4\n1 5\n2 1\n");
  EXPECT_THROW(read_weights(dup, 3), InputError);
  std::istringstream neg("1 -4\n2 1\n3 1\n");
  EXPECT_THROW(read_weights(neg, 3), InputError);
}

TEST(Greedy, IsACover) {
  Rng rng(91);
  for (int it = 0; it < 100; ++it) {
    Graph g = gnp(20, 0.2, rng);
    EXPECT_NO_THROW(require_cover(g, greedy2approx(g)));
  }
}

TEST_F(TempDir, InstanceRoundTrip) {
  Rng rng(92);
  for (int it = 0; it < 50; ++it) {
    Instance inst = testing::random_instance(rng, Mode::GLSWVC);
    InstancePaths paths{(dir_ / "g.dimacs").string(), (dir_ / "s.cover").string(),
                        (dir_ / "w.weights").string()};
    write_instance(inst, paths);
    Graph g = load_dimacs(paths.graph);
    EXPECT_EQ(g.edges(), inst.graph().edges());
    EXPECT_EQ(g.n(), inst.n());
    EXPECT_EQ(load_cover(paths.cover, g.n()), inst.cover());
    EXPECT_EQ(load_weights(paths.weights, g.n()), inst.weights());
  }
}

TEST_F(TempDir, RunWeightedPath) {
  RunConfig cfg;
  cfg.graph_path = file("wpath.dimacs", kP3);
  cfg.cover_path = file("wpath.cover", "1 2\n");
  cfg.weights_path = file("wpath.weights", "1 1\n2 3\n3 1\n");
  cfg.mode = Mode::GLSWVC;
  cfg.k = 2;
  cfg.d = 2;
  cfg.verify = true;
  cfg.algorithm = Algorithm::Degree;
  RunResult deg = run(cfg);
  ASSERT_TRUE(deg.report.yes());
  EXPECT_EQ(deg.report.swap->vertices, (VertexSet{1, 2}));
  ASSERT_TRUE(deg.verification.has_value());
  EXPECT_TRUE(deg.verification->ok());
  cfg.algorithm = Algorithm::Oracle;
  EXPECT_EQ(run(cfg).report.yes(), true);

  auto j = nlohmann::json::parse(report_json(deg));
  EXPECT_EQ(j["answer"], "yes");
  EXPECT_EQ(j["swap"], (std::vector<int>{2, 3}));
  EXPECT_EQ(j["improvement"], 2);
  EXPECT_EQ(j["algorithm"], "degree");
  EXPECT_TRUE(j["verified"].get<bool>());

  cfg.algorithm = Algorithm::ModularDegree;
  EXPECT_THROW(run(cfg), ModeError);
}

TEST_F(TempDir, RunWithGreedyCoverAndDecomposition) {
  RunConfig cfg;
  cfg.graph_path = file("p.dimacs", kP3);
  cfg.cover_path = "greedy2approx";
  cfg.decomposition_path = file("p.td", "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
  cfg.mode = Mode::LSVC;
  cfg.k = 3;
  RunResult r = run(cfg);
  EXPECT_EQ(r.report.algorithm.rfind("treewidth", 0), 0u);
}

TEST(Auto, Policy) {
  Instance star = testing::unit_instance(star_graph(6), {0}, 2, 1);
  EXPECT_EQ(choose_auto(star, false), Algorithm::HIndex);
  Instance k4 = testing::unit_instance(complete_graph(4), {0, 1, 2}, 2, 1);
  EXPECT_EQ(choose_auto(k4, false), Algorithm::Degree);
  EXPECT_EQ(choose_auto(k4, true), Algorithm::Treewidth);
}

TEST(Bench, SweepAgrees) {
  std::istringstream spec(
      "[sweep]\n"
      "models = gnp, stars\n"
      "n = 8, 10\n"
      "p = 0.3\n"
      "k = 3, 4\n"
      "d = 1, 2\n"
      "mode = glsvc\n"
      "instances = 5\n"
      "seed = 7\n"
      "threads = 2\n");
  BenchSpec s = parse_bench_spec(spec);
  EXPECT_EQ(s.models, (std::vector<std::string>{"gnp", "stars"}));
  EXPECT_EQ(s.k, (std::vector<int>{3, 4}));
  std::ostringstream csv;
  EXPECT_TRUE(bench(s, csv));
  std::istringstream lines(csv.str());
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("config,instance,model,n,m,mode,k,d,algorithm", 0), 0u);
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    EXPECT_EQ(row.substr(row.rfind(',') + 1), "true");
  }
  EXPECT_GT(rows, 0);
}

TEST(Bench, DeterministicAcrossThreadCounts) {
  auto run_with = [](int threads) {
    std::istringstream spec("[sweep]\nmodels = gnp\nn = 9\nk = 3\nd = 1\n"
                            "instances = 6\nseed = 3\nthreads = " +
                            std::to_string(threads) + "\n");
    BenchSpec s = parse_bench_spec(spec);
    s.algorithms = {Algorithm::Oracle, Algorithm::Degree};
    std::ostringstream csv;
    bench(s, csv);
    // Drop the timing column before comparing.
    std::istringstream in(csv.str());
    std::string line, out;
    while (std::getline(in, line)) {
      std::vector<std::string> cols;
      std::stringstream ss(line);
      for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
      cols[11] = "";
      for (const std::string& c : cols) out += c + ',';
      out += '\n';
    }
    return out;
  };
  EXPECT_EQ(run_with(1), run_with(4));
}

}  // namespace
}  // namespace lsvc
