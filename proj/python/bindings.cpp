#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nesto/buildset.hpp"
#include "nesto/cli.hpp"
#include "nesto/graph.hpp"
#include "nesto/invariants.hpp"
#include "nesto/nestopoly.hpp"
#include "nesto/qsym.hpp"
#include "nesto/verify.hpp"

namespace py = pybind11;
using namespace nesto;

namespace {

using Terms = std::map<std::vector<int>, Coeff>;

py::dict terms_of(const QSymElement& f) {
  py::dict out;
  for (const auto& [c, k] : f.terms()) out[py::tuple(py::cast(c.parts()))] = k;
  return out;
}

Basis basis_of(const std::string& s) {
  if (s == "M") return Basis::M;
  if (s == "L") return Basis::L;
  throw InvalidInput("basis must be M or L, got '" + s + "'");
}

QSymElement qsym_from(const Terms& terms, const std::string& basis) {
  QSymElement f(basis_of(basis));
  for (const auto& [parts, k] : terms) f.add(Composition(parts), k);
  return f;
}

Mask mask_of(const std::vector<int>& elements, int n) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw InvalidInput("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
    m |= bit(e - 1);
  }
  return m;
}

std::vector<std::vector<int>> lists_of(const std::vector<Mask>& sets) {
  std::vector<std::vector<int>> out;
  for (Mask s : sets) {
    std::vector<int> e;
    for (int i : elements(s)) e.push_back(i + 1);
    out.push_back(std::move(e));
  }
  return out;
}

QSymElement graph_F(const Graph& g, const std::string& route) {
  if (route == "splitting") return F_splitting(from_graph(g));
  if (route == "trees") return F_btree_route(from_graph(g));
  if (route == "colorings") return F_graph_colorings(g);
  if (route == "recurrence") return F_graph_recurrence(g);
  throw InvalidInput("unknown route '" + route + "'");
}

}  // namespace

PYBIND11_MODULE(_nesto, m) {
  m.doc() = "Quasisymmetric enumerators of nestohedra and graph-associahedra";

  static py::exception<InvalidInput> invalid(m, "InvalidInput", PyExc_ValueError);
  static py::exception<CapacityError> capacity(m, "CapacityError", PyExc_RuntimeError);
  static py::exception<OverflowError> overflow(m, "OverflowError", PyExc_OverflowError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidInput& e) {
      py::set_error(invalid, e.what());
    } catch (const CapacityError& e) {
      py::set_error(capacity, e.what());
    } catch (const OverflowError& e) {
      py::set_error(overflow, e.what());
    }
  });

  py::class_<QSymElement>(m, "QSym")
      .def(py::init(&qsym_from), py::arg("terms"), py::arg("basis") = "M")
      .def_static("parse", [](const std::string& s) { return parse_qsym(s); })
      .def_property_readonly("basis", [](const QSymElement& f) { return std::string(1, basis_letter(f.basis())); })
      .def_property_readonly("terms", &terms_of)
      .def("coefficient", [](const QSymElement& f, const std::vector<int>& c) { return f.coefficient(Composition(c)); })
      .def("to_L", &to_fundamental)
      .def("to_M", &from_fundamental)
      .def("antipode", &antipode)
      .def("shift1", &shift1)
      .def("ps", &principal_specialization, py::arg("m"))
      .def("to_json", [](const QSymElement& f) { return to_json(f); })
      .def("__str__", [](const QSymElement& f) { return to_string(f); })
      .def("__repr__", [](const QSymElement& f) { return "QSym(" + to_string(f) + ")"; })
      .def("__eq__", [](const QSymElement& a, const QSymElement& b) { return a == b; })
      .def("__add__", [](const QSymElement& a, const QSymElement& b) { return a + b; })
      .def("__sub__", [](const QSymElement& a, const QSymElement& b) { return a - b; })
      .def("__mul__", [](const QSymElement& a, const QSymElement& b) { return a * b; });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("parse", [](const std::string& s) { return parse_graph_spec(s); })
      .def_static("family", [](const std::string& kind, int n) { return family_graph(parse_family(kind), n); })
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (auto [u, v] : g.edges()) out.emplace_back(u + 1, v + 1);
        return out;
      })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("connectivity", &connectivity)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(" + std::to_string(g.size()) + ", " + edge_list_string(g) + ")"; });

  py::class_<BuildingSet>(m, "BuildingSet")
      .def(py::init([](int n, const std::vector<std::vector<int>>& sets, bool strict) {
             std::vector<Mask> masks;
             for (const auto& s : sets) masks.push_back(mask_of(s, n));
             return BuildingSet::make(n, masks, strict ? SingletonPolicy::Strict : SingletonPolicy::AutoInsert);
           }),
           py::arg("n"), py::arg("sets"), py::arg("strict") = false)
      .def_static("from_graph", &from_graph)
      .def_property_readonly("n", &BuildingSet::ground_size)
      .def_property_readonly("sets", [](const BuildingSet& b) { return lists_of(b.sets()); })
      .def("is_connected", &BuildingSet::is_connected)
      .def("restriction", [](const BuildingSet& b, const std::vector<int>& s) { return restriction(b, mask_of(s, b.ground_size())); })
      .def("contraction", [](const BuildingSet& b, const std::vector<int>& s) { return contraction(b, mask_of(s, b.ground_size())); })
      .def("__mul__", [](const BuildingSet& a, const BuildingSet& b) { return product(a, b); })
      .def("__eq__", [](const BuildingSet& a, const BuildingSet& b) { return a == b; })
      .def("__str__", [](const BuildingSet& b) { return to_string(b); })
      .def("__repr__", [](const BuildingSet& b) { return "BuildingSet(" + to_string(b) + ")"; });

  m.def("F", &graph_F, py::arg("graph"), py::arg("route") = "recurrence", "F of a graph by the named route");
  m.def("F_buildset", &F_splitting, py::arg("buildset"));
  m.def("F_fundamental", &F_fundamental, py::arg("buildset"));
  m.def("F_star", &F_star, py::arg("buildset"));
  m.def("zeta", [](const BuildingSet& b, const std::vector<int>& c) { return zeta(b, Composition(c)); });
  m.def("vertex_count", &vertex_count);
  m.def("face_vector", &face_vector);
  m.def("nested_sets_by_size", &nested_sets_by_size);
  m.def("maximal_nested_sets", [](const BuildingSet& b) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& n : maximal_nested_sets(b)) out.push_back(lists_of(n));
    return out;
  });
  m.def("chromatic_symmetric", [](const Graph& g) {
    py::dict out;
    for (const auto& [p, k] : chromatic_symmetric(g).terms) out[py::tuple(py::cast(p.parts()))] = k;
    return out;
  });
  m.def("family_F", [](const std::string& f, int n) { return family_F(parse_polytope_family(f), n); });
  m.def("family_vertex_counts", &family_vertex_counts);
  m.def("tree_kernel", [](int n) {
    const TreeKernel k = tree_matrix_kernel(n);
    py::dict d;
    std::vector<std::string> shapes;
    for (const auto& s : k.shapes) shapes.push_back(s.code);
    d["shapes"] = shapes;
    d["rank"] = k.rank;
    d["kernel"] = k.kernel;
    return d;
  });
  m.def(
      "collisions",
      [](int n, const std::string& inv, bool connected, int jobs) {
        if (inv != "F" && inv != "X") throw InvalidInput("invariant must be F or X");
        const CollisionReport r =
            collision_search(n, inv == "F" ? InvariantKind::F : InvariantKind::X, connected, jobs);
        auto groups = [](const std::vector<std::vector<Graph>>& gs) {
          std::vector<std::vector<std::string>> out;
          for (const auto& g : gs) {
            std::vector<std::string> codes;
            for (const Graph& x : g) codes.push_back(to_graph6(x));
            out.push_back(codes);
          }
          return out;
        };
        py::dict d;
        d["classes"] = r.classes;
        d["distinct_values"] = r.distinct_values;
        d["collisions"] = groups(r.collisions);
        d["x_groups_split_by_F"] = groups(r.x_groups_split_by_F);
        return d;
      },
      py::arg("n"), py::arg("invariant") = "F", py::arg("connected_only") = false, py::arg("jobs") = 1);
  m.def(
      "run_criterion",
      [](int id) {
        const CriterionResult r = run_criterion(id);
        py::dict d;
        d["id"] = r.id;
        d["title"] = r.title;
        d["pass"] = r.pass();
        d["detail"] = r.detail;
        return d;
      },
      py::arg("id"));
  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr)");
}
