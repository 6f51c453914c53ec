#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lsvc/hindex_solver.hpp"
#include "lsvc/modular_decomposition.hpp"
#include "lsvc/oracle.hpp"
#include "lsvc/run.hpp"
#include "lsvc/split_decomposition.hpp"
#include "lsvc/tree_decomposition.hpp"

namespace py = pybind11;
using namespace lsvc;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Instance make_instance(int n, const EdgeList& edges, const VertexSet& cover,
                       std::vector<Weight> weights, int k, Gain d,
                       const std::string& mode) {
  return Instance::create(Graph(n, edges), normalized(cover), std::move(weights),
                          k, d, parse_mode(mode));
}

py::dict to_dict(const SolveReport& r) {
  py::dict out;
  out["answer"] = r.yes();
  out["swap"] = r.yes() ? py::cast(r.swap->vertices) : py::none();
  out["improvement"] = r.yes() ? py::cast(r.swap->improvement) : py::none();
  out["algorithm"] = r.algorithm;
  out["params"] = r.params;
  out["branch_nodes"] = r.counters.branch_nodes;
  out["dp_cells"] = r.counters.dp_cells;
  return out;
}

}  // namespace

PYBIND11_MODULE(_lsvc, m) {
  m.doc() = "Local search for (weighted) vertex cover";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ModeError>(m, "ModeError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_ValueError);
  py::register_exception<RefusalError>(m, "RefusalError", PyExc_RuntimeError);

  m.def(
      "solve",
      [](int n, const EdgeList& edges, const VertexSet& cover,
         std::vector<Weight> weights, int k, Gain d, const std::string& mode,
         const std::string& algorithm) {
        Instance inst =
            make_instance(n, edges, cover, std::move(weights), k, d, mode);
        const Algorithm a = parse_algorithm(algorithm);
        SolveReport r;
        {
          py::gil_scoped_release release;
          r = solve_with(inst, a);
        }
        return to_dict(r);
      },
      py::arg("n"), py::arg("edges"), py::arg("cover"),
      py::arg("weights") = std::vector<Weight>{}, py::arg("k"),
      py::arg("d") = 1, py::arg("mode") = "glswvc",
      py::arg("algorithm") = "auto",
      "Search for a good swap. Vertex ids are 0-based.");

  m.def(
      "best_improvement",
      [](int n, const EdgeList& edges, const VertexSet& cover,
         std::vector<Weight> weights, int k) {
        Instance inst = make_instance(n, edges, cover, std::move(weights), k, 0,
                                      "glswvc");
        return oracle_solve(inst).best_any.improvement;
      },
      py::arg("n"), py::arg("edges"), py::arg("cover"),
      py::arg("weights") = std::vector<Weight>{}, py::arg("k"),
      "Largest improvement of any valid k-swap, by exhaustive search.");

  m.def(
      "is_valid_swap",
      [](int n, const EdgeList& edges, const VertexSet& cover,
         const VertexSet& w) {
        Instance inst = make_instance(n, edges, cover, {}, 0, 0, "glswvc");
        return is_valid_swap(inst, normalized(w));
      },
      py::arg("n"), py::arg("edges"), py::arg("cover"), py::arg("swap"));

  m.def(
      "widths",
      [](int n, const EdgeList& edges) {
        Graph g(n, edges);
        py::dict out;
        out["max_degree"] = g.max_degree();
        out["h_index"] = compute_h_index(g).h;
        out["treewidth_upper"] = heuristic_tree_decomposition(g).width;
        ModularDecomposition md = compute_modular_decomposition(g);
        out["modular_width"] = md.width;
        out["delta_md"] = compute_delta_md(md);
        out["split_width"] = compute_split_decomposition(g).width;
        return out;
      },
      py::arg("n"), py::arg("edges"),
      "Structural parameters used by the solvers.");
}
