#include "lsvc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lsvc {

namespace {

[[noreturn]] void parse_error(const std::string& source, int line,
                              const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

bool skip_line(const std::string& line) {
  std::size_t p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == 'c' || line[p] == '#';
}

Vertex parse_vertex(const std::string& tok, int n, const std::string& source,
                    int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    parse_error(source, line, "expected a vertex id, got '" + tok + "'");
  }
  if (used != tok.size())
    parse_error(source, line, "expected a vertex id, got '" + tok + "'");
  if (v < 1 || v > n)
    parse_error(source, line,
                "vertex " + tok + " outside [1," + std::to_string(n) + "]");
  return static_cast<Vertex>(v - 1);
}

}  // namespace

Graph read_dimacs(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long long m_declared = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "p") {
      std::string fmt;
      long long nn = -1;
      if (!(ss >> fmt >> nn >> m_declared) || (fmt != "edge" && fmt != "col"))
        parse_error(source, lineno, "malformed problem line");
      if (n >= 0) parse_error(source, lineno, "duplicate problem line");
      if (nn < 0) parse_error(source, lineno, "negative vertex count");
      n = static_cast<int>(nn);
    } else if (tag == "e") {
      if (n < 0) parse_error(source, lineno, "edge before problem line");
      std::string a, b;
      if (!(ss >> a >> b)) parse_error(source, lineno, "malformed edge line");
      Vertex u = parse_vertex(a, n, source, lineno);
      Vertex v = parse_vertex(b, n, source, lineno);
      if (u == v) parse_error(source, lineno, "self-loop at vertex " + a);
      edges.emplace_back(u, v);
    } else {
      parse_error(source, lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) throw InputError(source + ": missing problem line");
  return Graph(n, edges);
}

Graph load_dimacs(const std::string& path) {
  auto in = open(path);
  return read_dimacs(in, path);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

VertexSet read_cover(std::istream& in, int n, const std::string& source) {
  std::string line, tok;
  int lineno = 0;
  VertexSet cover;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    while (ss >> tok) cover.push_back(parse_vertex(tok, n, source, lineno));
  }
  return normalized(std::move(cover));
}

VertexSet load_cover(const std::string& path, int n) {
  auto in = open(path);
  return read_cover(in, n, path);
}

void write_cover(std::ostream& out, const VertexSet& cover) {
  for (std::size_t i = 0; i < cover.size(); ++i)
    out << (i ? " " : "") << cover[i] + 1;
  out << '\n';
}

std::vector<Weight> read_weights(std::istream& in, int n,
                                 const std::string& source) {
  std::string line;
  int lineno = 0;
  std::vector<Weight> w(n, 0);
  std::vector<char> seen(n, 0);
  int count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    std::string vt;
    long long wt = 0;
    while (ss >> vt) {
      if (!(ss >> wt)) parse_error(source, lineno, "vertex without a weight");
      if (wt < 0 || wt > std::numeric_limits<Weight>::max())
        parse_error(source, lineno, "weight out of range");
      Vertex v = parse_vertex(vt, n, source, lineno);
      if (seen[v]) parse_error(source, lineno, "duplicate weight for vertex " + vt);
      seen[v] = 1;
      w[v] = static_cast<Weight>(wt);
      ++count;
    }
  }
  if (count != n)
    throw InputError(source + ": " + std::to_string(count) +
                     " weights given for " + std::to_string(n) + " vertices");
  return w;
}

std::vector<Weight> load_weights(const std::string& path, int n) {
  auto in = open(path);
  return read_weights(in, n, path);
}

void write_weights(std::ostream& out, const std::vector<Weight>& w) {
  for (std::size_t v = 0; v < w.size(); ++v) out << v + 1 << ' ' << w[v] << '\n';
}

void require_cover(const Graph& g, const VertexSet& cover) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : cover) in[v] = 1;
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v])
      throw InputError("not a vertex cover: edge (" + std::to_string(u + 1) +
                       "," + std::to_string(v + 1) + ") is uncovered");
}

VertexSet greedy2approx(const Graph& g) {
  std::vector<char> matched(g.n(), 0);
  VertexSet cover;
  for (auto [u, v] : g.edges())
    if (!matched[u] && !matched[v]) {
      matched[u] = matched[v] = 1;
      cover.push_back(u);
      cover.push_back(v);
    }
  return normalized(std::move(cover));
}

void write_instance(const Instance& inst, const InstancePaths& paths) {
  auto create = [](const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    return out;
  };
  {
    auto out = create(paths.graph);
    write_dimacs(out, inst.graph());
  }
  {
    auto out = create(paths.cover);
    write_cover(out, inst.cover());
  }
  if (!paths.weights.empty()) {
    auto out = create(paths.weights);
    write_weights(out, inst.weights());
  }
}

}  // namespace lsvc
