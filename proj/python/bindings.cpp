// Copyright 2026 The qset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qset/generators.hpp"
#include "qset/io.hpp"
#include "qset/qgraph.hpp"
#include "qset/qrel.hpp"
#include "qset/semisimple.hpp"

namespace py = pybind11;
using namespace qset;

namespace {

// Reports become plain dicts: {check name: (pass, residual)} plus the verdict.
py::dict report_dict(const std::vector<Check>& checks, bool valid) {
  py::dict d;
  for (const Check& c : checks) d[py::str(c.name)] = py::make_tuple(c.pass, c.residual);
  d["valid"] = valid;
  return d;
}

template <class R>
py::dict report_dict(const R& r) {
  return report_dict(r.checks(), r.valid());
}

void bind_errors(py::module_& m) {
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> storage;
  storage.call_once_and_store_result([&]() { return py::exception<Error>(m, "Error", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = storage.get_stored();
      py::object inst = type(e.what());
      inst.attr("kind") = to_string(e.kind());
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });
}

void bind_algebras(py::module_& m) {
  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init([](double rel, double eig_gap) { return Tolerance{rel, eig_gap}; }), py::arg("rel") = 1e-9,
           py::arg("eig_gap") = 1e-8)
      .def_readwrite("rel", &Tolerance::rel)
      .def_readwrite("eig_gap", &Tolerance::eig_gap)
      .def("__repr__", [](const Tolerance& t) {
        return "Tolerance(rel=" + std::to_string(t.rel) + ", eig_gap=" + std::to_string(t.eig_gap) + ")";
      });

  py::class_<SSFA>(m, "SSFA")
      .def(py::init<CMatrix, CMatrix>(), py::arg("mult"), py::arg("unit"))
      .def_property_readonly("dim", &SSFA::dim)
      .def_property_readonly("mult", &SSFA::mult)
      .def_property_readonly("unit", &SSFA::unit)
      .def("multiply", &SSFA::multiply)
      .def("__repr__", [](const SSFA& a) { return "SSFA(dim=" + std::to_string(a.dim()) + ")"; });

  m.def("classical_algebra", &classical_algebra, py::arg("n"));
  m.def("matrix_algebra", &matrix_algebra, py::arg("k"));
  m.def("direct_sum_algebra", &direct_sum_algebra);
  m.def("tensor_algebra", &tensor_algebra);
  m.def("check_ssfa", [](const SSFA& a, const Tolerance& tol) { return report_dict(check_ssfa(a, tol)); },
        py::arg("a"), py::arg("tol") = Tolerance{});
  m.def("same_algebra", &same_algebra, py::arg("a"), py::arg("b"), py::arg("tol") = Tolerance{});
  m.def(
      "block_sizes", [](const SSFA& a, std::uint64_t seed) { return wedderburn(a, seed).block_sizes; },
      py::arg("a"), py::arg("seed") = 0);
  m.def("copyable_elements", &copyable_elements, py::arg("a"), py::arg("tol") = Tolerance{}, py::arg("seed") = 0);
}

void bind_functions(py::module_& m) {
  py::class_<QuantumFunction>(m, "QuantumFunction")
      .def(py::init<SSFA, SSFA, std::size_t, CMatrix>(), py::arg("source"), py::arg("target"), py::arg("h_dim"),
           py::arg("matrix"))
      .def_property_readonly("source", &QuantumFunction::source)
      .def_property_readonly("target", &QuantumFunction::target)
      .def_property_readonly("h_dim", &QuantumFunction::h_dim)
      .def_property_readonly("matrix", &QuantumFunction::matrix)
      .def("__repr__", [](const QuantumFunction& f) {
        return "QuantumFunction(" + std::to_string(f.source().dim()) + " -> " + std::to_string(f.target().dim()) +
               ", h_dim=" + std::to_string(f.h_dim()) + ")";
      });

  m.def("verify_qfun", [](const QuantumFunction& f, const Tolerance& t) { return report_dict(verify_qfun(f, t)); },
        py::arg("f"), py::arg("tol") = Tolerance{});
  m.def("verify_qbij", [](const QuantumFunction& f, const Tolerance& t) { return report_dict(verify_qbij(f, t)); },
        py::arg("f"), py::arg("tol") = Tolerance{});
  m.def("is_unitary", [](const QuantumFunction& f, const Tolerance& t) { return is_unitary(f, t).pass; },
        py::arg("f"), py::arg("tol") = Tolerance{});
  m.def("bi_invertible", &bi_invertible, py::arg("f"), py::arg("tol") = Tolerance{});
  m.def("identity_qfun", &identity_qfun);
  m.def("compose", &compose, py::arg("g"), py::arg("f"), py::arg("tol") = Tolerance{});
  m.def("dagger_dual", &dagger_dual, py::arg("f"), py::arg("tol") = Tolerance{});
  m.def("classical_function", &classical_function, py::arg("map"), py::arg("target_size"));
  m.def("conjugate_hilbert", &conjugate_hilbert, py::arg("f"), py::arg("unitary"));

  m.def(
      "family_to_qfun",
      [](const std::vector<std::vector<CMatrix>>& p, const Tolerance& tol) {
        if (p.empty() || p.front().empty()) throw Error(ErrorKind::ShapeMismatch, "family must be non-empty");
        ProjectorFamily fam{p.size(), p.front().size(), static_cast<std::size_t>(p.front().front().rows()), p};
        return family_to_qfun(fam, tol);
      },
      py::arg("projectors"), py::arg("tol") = Tolerance{});
  m.def(
      "qfun_to_family", [](const QuantumFunction& f, const Tolerance& tol) { return qfun_to_family(f, tol).projectors; },
      py::arg("f"), py::arg("tol") = Tolerance{});

  m.def("enumerate_simple_elements", &enumerate_simple_elements, py::arg("a"), py::arg("seed") = 0,
        py::arg("tol") = Tolerance{});
  m.def("reconstruct_algebra", &reconstruct_algebra, py::arg("elements"), py::arg("tol") = Tolerance{});
  m.def("ueb_to_bijection", &ueb_to_bijection, py::arg("unitaries"), py::arg("tol") = Tolerance{});

  m.def("latin3", &latin3);
  m.def("qls4", &qls4);
  m.def("pauli_ueb", &pauli_ueb);
  m.def("random_block_ppm", &random_block_ppm, py::arg("seed"));
  m.def("random_projector", &random_projector, py::arg("d"), py::arg("rank"), py::arg("seed"));
}

void bind_semisimple(py::module_& m) {
  m.def(
      "end_dim", [](const QuantumFunction& f, const Tolerance& tol) { return intertwiner_space(f, f, tol).dim(); },
      py::arg("f"), py::arg("tol") = Tolerance{});
  m.def(
      "intertwiners",
      [](const QuantumFunction& f, const QuantumFunction& g, const Tolerance& tol) {
        return intertwiner_space(f, g, tol).basis;
      },
      py::arg("f"), py::arg("g"), py::arg("tol") = Tolerance{});
  m.def("is_simple", &is_simple, py::arg("f"), py::arg("tol") = Tolerance{});
  m.def("direct_sum", &direct_sum, py::arg("f"), py::arg("g"), py::arg("tol") = Tolerance{});
  m.def(
      "decompose",
      [](const QuantumFunction& f, std::uint64_t seed, const Tolerance& tol) {
        py::list parts;
        for (const auto& p : decompose(f, seed, tol).parts) parts.append(py::make_tuple(p.function, p.isometry));
        return parts;
      },
      py::arg("f"), py::arg("seed") = 0, py::arg("tol") = Tolerance{},
      "List of (simple part, isometry) pairs.");
  m.def("is_essentially_classical", &is_essentially_classical, py::arg("f"), py::arg("seed") = 0,
        py::arg("tol") = Tolerance{});
  m.def("classical_map", &classical_map, py::arg("f"), py::arg("tol") = Tolerance{});
}

void bind_graphs(py::module_& m) {
  py::class_<ClassicalGraph>(m, "ClassicalGraph")
      .def(py::init([](std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges, bool reflexive) {
             return ClassicalGraph{n, std::move(edges), reflexive};
           }),
           py::arg("vertices"), py::arg("edges"), py::arg("reflexive") = false)
      .def_readonly("vertices", &ClassicalGraph::vertices)
      .def_readonly("edges", &ClassicalGraph::edges)
      .def_readonly("reflexive", &ClassicalGraph::reflexive)
      .def("adjacency", &ClassicalGraph::adjacency);

  py::class_<QuantumGraph>(m, "QuantumGraph")
      .def(py::init<SSFA, CMatrix, Tolerance>(), py::arg("algebra"), py::arg("adjacency"),
           py::arg("tol") = Tolerance{})
      .def_property_readonly("algebra", &QuantumGraph::algebra)
      .def_property_readonly("adjacency", &QuantumGraph::adjacency)
      .def_property_readonly("reflexivity", [](const QuantumGraph& g) { return to_string(g.reflexivity()); })
      .def_property_readonly("edge_projector", &QuantumGraph::projector);

  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("classical_to_quantum", &classical_to_quantum);
  m.def("quantum_to_classical", &quantum_to_classical, py::arg("g"), py::arg("tol") = Tolerance{});
  m.def("complement", &complement, py::arg("g"), py::arg("tol") = Tolerance{});
  m.def(
      "verify_hom",
      [](const QuantumFunction& f, const QuantumGraph& g, const QuantumGraph& h, const Tolerance& tol) {
        return report_dict(verify_hom(f, g, h, tol));
      },
      py::arg("f"), py::arg("g"), py::arg("h"), py::arg("tol") = Tolerance{});
  m.def(
      "verify_iso",
      [](const QuantumFunction& f, const QuantumGraph& g, const QuantumGraph& h, const Tolerance& tol) {
        return report_dict(verify_iso(f, g, h, tol));
      },
      py::arg("f"), py::arg("g"), py::arg("h"), py::arg("tol") = Tolerance{});
}

void bind_relations(py::module_& m) {
  py::class_<QuantumRelation>(m, "QuantumRelation")
      .def(py::init<SSFA, SSFA, CMatrix>(), py::arg("a"), py::arg("b"), py::arg("matrix"))
      .def_property_readonly("a", &QuantumRelation::a)
      .def_property_readonly("b", &QuantumRelation::b)
      .def_property_readonly("matrix", &QuantumRelation::matrix);

  py::class_<OperatorSystemProjector>(m, "OperatorSystemProjector")
      .def(py::init([](std::size_t d, CMatrix p) { return OperatorSystemProjector{d, std::move(p)}; }),
           py::arg("h_dim"), py::arg("matrix"))
      .def_readonly("h_dim", &OperatorSystemProjector::h_dim)
      .def_readonly("matrix", &OperatorSystemProjector::matrix);

  m.def("check_relation", [](const QuantumRelation& r, const Tolerance& t) { return report_dict(check_relation(r, t)); },
        py::arg("r"), py::arg("tol") = Tolerance{});
  m.def("to_projection", &to_projection);
  m.def("from_projection", &from_projection, py::arg("a"), py::arg("b"), py::arg("p"), py::arg("tol") = Tolerance{});
  m.def("is_symmetric", &is_symmetric, py::arg("r"), py::arg("tol") = Tolerance{});
  m.def("is_reflexive", &is_reflexive, py::arg("r"), py::arg("tol") = Tolerance{});
  m.def("adjacency_to_relation", &adjacency_to_relation);
  m.def("relation_to_adjacency", &relation_to_adjacency, py::arg("r"), py::arg("tol") = Tolerance{});
  m.def("operator_system_from_span", &operator_system_from_span, py::arg("operators"), py::arg("tol") = Tolerance{});
  m.def(
      "check_operator_system",
      [](const OperatorSystemProjector& o, const Tolerance& t) { return report_dict(check_operator_system(o, t)); },
      py::arg("osp"), py::arg("tol") = Tolerance{});
  m.def("graph_to_operator_system", &graph_to_operator_system, py::arg("g"), py::arg("tol") = Tolerance{});
  m.def("operator_system_to_graph", &operator_system_to_graph, py::arg("osp"), py::arg("tol") = Tolerance{});
}

void bind_io(py::module_& m) {
  // Documents travel as JSON text so the Python side can use its own json module.
  m.def("to_json", [](const QuantumFunction& f) { return io::dump(io::to_json(f)); });
  m.def("to_json", [](const SSFA& a) { return io::dump(io::to_json(a)); });
  m.def("to_json", [](const ClassicalGraph& g) { return io::dump(io::to_json(g)); });
  m.def("to_json", [](const QuantumGraph& g) { return io::dump(io::to_json(g)); });
  m.def("to_json", [](const QuantumRelation& r) { return io::dump(io::to_json(r)); });
  m.def("to_json", [](const OperatorSystemProjector& o) { return io::dump(io::to_json(o)); });
  m.def(
      "from_json",
      [](const std::string& text) -> py::object {
        io::Json j;
        try {
          j = io::Json::parse(text);
        } catch (const io::Json::exception& e) {
          throw Error(ErrorKind::MalformedInput, e.what());
        }
        return std::visit(
            [](auto&& doc) -> py::object {
              using T = std::decay_t<decltype(doc)>;
              if constexpr (std::is_same_v<T, io::GraphDoc>) {
                return py::cast(QuantumGraph(doc.algebra, doc.adjacency));
              } else if constexpr (std::is_same_v<T, ProjectorFamily>) {
                return py::cast(doc.projectors);
              } else if constexpr (std::is_same_v<T, io::ProjectionDoc>) {
                return py::make_tuple(doc.a, doc.b, doc.p);
              } else {
                return py::cast(doc);
              }
            },
            io::parse(j));
      },
      py::arg("text"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite quantum sets, quantum functions, graphs and relations";
  bind_errors(m);
  bind_algebras(m);
  bind_functions(m);
  bind_semisimple(m);
  bind_graphs(m);
  bind_relations(m);
  bind_io(m);
}
