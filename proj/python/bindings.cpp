// Copyright 2026 The davio-synth Authors
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

// Python bindings for the synthesis and mapping core.

#include "davio/boolfn.hpp"
#include "davio/circuit.hpp"
#include "davio/lattice.hpp"
#include "davio/layout.hpp"
#include "davio/mapper.hpp"
#include "davio/serialize.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace davio;

namespace {

EsopFunction parse(const std::string& text,
                   const std::vector<std::string>& vars) {
  return parse_esop(text, VarSet(vars));
}

std::vector<bool> truth_table_bits(const EsopFunction& f) {
  const auto table = to_truth_table(f);
  std::vector<bool> out(table.size());
  for (std::size_t a = 0; a < table.size(); ++a) {
    out[a] = table.get(static_cast<Assignment>(a));
  }
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Positive Davio lattice synthesis and layout mapping";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SyntaxError>(m, "SyntaxError", PyExc_ValueError);
  py::register_exception<UnknownVariableError>(m, "UnknownVariableError",
                                               PyExc_KeyError);
  py::register_exception<LevelBudgetExceeded>(m, "LevelBudgetExceeded",
                                              PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument",
                                          PyExc_ValueError);
  py::register_exception<PlacementInfeasible>(m, "PlacementInfeasible",
                                              PyExc_RuntimeError);
  py::register_exception<InconsistentReport>(m, "InconsistentReport",
                                             PyExc_RuntimeError);

  py::class_<EsopFunction>(m, "EsopFunction")
      .def_property_readonly("vars",
                             [](const EsopFunction& f) { return f.vars().names(); })
      .def("evaluate", &EsopFunction::evaluate, py::arg("assignment"))
      .def("truth_table", &truth_table_bits)
      .def("__str__", &EsopFunction::to_string)
      .def("__repr__", [](const EsopFunction& f) {
        return "EsopFunction('" + f.to_string() + "')";
      })
      .def("__xor__", [](const EsopFunction& a, const EsopFunction& b) {
        return a ^ b;
      });

  m.def("parse_esop", &parse, py::arg("text"), py::arg("vars"));
  m.def("equivalent", &equivalent);
  m.def("to_anf", &to_anf);
  m.def("cofactor",
        py::overload_cast<const EsopFunction&, std::string_view, bool>(&cofactor),
        py::arg("f"), py::arg("var"), py::arg("polarity"));
  m.def("positive_davio_expand",
        [](const EsopFunction& f, const std::string& v) {
          auto r = positive_davio_expand(f, std::string_view(v));
          return py::make_tuple(r.f_neg, r.f_diff);
        });
  m.def("symmetry_indices", [](const EsopFunction& f) {
    const auto s = symmetry_indices(f);
    return s ? py::cast(s->indices()) : py::none();
  });

  py::class_<DavioLattice>(m, "DavioLattice")
      .def_property_readonly("n_levels", &DavioLattice::n_levels)
      .def_property_readonly("level_vars", &DavioLattice::level_var_names)
      .def_property_readonly("leaves", &DavioLattice::leaves)
      .def("evaluate",
           [](const DavioLattice& l, Assignment a) { return evaluate_lattice(l, a); })
      .def("to_json", [](const DavioLattice& l) { return to_json(l).dump(); })
      .def("to_dot", [](const DavioLattice& l) { return to_dot(l); });

  m.def(
      "build_lattice",
      [](const EsopFunction& f, const std::string& strategy,
         std::optional<std::size_t> max_levels) {
        return build_lattice(f, OrderingStrategy::parse(strategy), max_levels);
      },
      py::arg("f"), py::arg("strategy") = "exhaustive-min-levels",
      py::arg("max_levels") = py::none());
  m.def("symmetric_lattice",
        py::overload_cast<std::size_t, const std::vector<bool>&>(&symmetric_lattice),
        py::arg("n"), py::arg("leaves"));

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("n_qubits", &Circuit::n_qubits)
      .def_property_readonly("labels", &Circuit::labels)
      .def_property_readonly("gates",
                             [](const Circuit& c) {
                               std::vector<std::pair<std::string, std::vector<std::size_t>>> out;
                               for (const auto& g : c.gates()) {
                                 out.emplace_back(std::string(mnemonic(g.kind)), g.qubits);
                               }
                               return out;
                             })
      .def("count", [](const Circuit& c, const std::string& kind) {
        return c.count(parse_gate_kind(kind));
      })
      .def("to_json", [](const Circuit& c) { return to_json(c).dump(); })
      .def("to_qasm", [](const Circuit& c) { return to_qasm(c); })
      .def("unitary", &circuit_unitary)
      .def("decompose", [](const Circuit& c, const std::string& style) {
        return decompose_circuit(c, DecompositionStyle::parse(style));
      });
  m.def("circuit_from_json", [](const std::string& text) {
    return circuit_from_json(Json::parse(text));
  });

  py::class_<Synthesis>(m, "Synthesis")
      .def_readonly("circuit", &Synthesis::circuit)
      .def_readonly("output_line", &Synthesis::output_line)
      .def_readonly("n_levels", &Synthesis::n_levels)
      .def_readonly("leaf_init", &Synthesis::leaf_init)
      .def_property_readonly("swat_count",
                             [](const Synthesis& s) { return s.swats.size(); });

  m.def("synthesize", &synthesize_from_lattice, py::arg("lattice"));
  m.def("simulate_classical", &simulate_classical, py::arg("circuit"),
        py::arg("bits"));
  m.def("verify_synthesis", &verify_synthesis, py::arg("circuit"), py::arg("f"),
        py::arg("output_line"), py::arg("leaf_init") = std::vector<bool>{});
  m.def("toffoli_phase_distance", [](const std::string& style) {
    Circuit reference(3, {});
    reference.add(Gate::toffoli(0, 1, 2));
    Circuit decomposed(3, {});
    decomposed.append(
        decompose_toffoli(Gate::toffoli(0, 1, 2), DecompositionStyle::parse(style)));
    return phase_aligned_distance(circuit_unitary(decomposed),
                                  circuit_unitary(reference));
  });

  py::class_<LayoutGraph>(m, "LayoutGraph")
      .def_property_readonly("kind",
                             [](const LayoutGraph& g) { return to_string(g.kind()); })
      .def_property_readonly("size", &LayoutGraph::size)
      .def_property_readonly("edges", &LayoutGraph::edges)
      .def("degree", &LayoutGraph::degree)
      .def("count_triangles", &LayoutGraph::count_triangles)
      .def("are_adjacent", [](const LayoutGraph& g, std::size_t a,
                              std::size_t b) { return are_adjacent(g, a, b); })
      .def("to_json", [](const LayoutGraph& g) { return to_json(g).dump(); });

  m.def("triangular_layout", &triangular_layout);
  m.def("square_layout", &square_layout);
  m.def("heavy_hex_layout", &heavy_hex_layout);

  py::class_<MappingReport>(m, "MappingReport")
      .def_property_readonly("layout",
                             [](const MappingReport& r) { return to_string(r.layout_kind); })
      .def_readonly("n_levels", &MappingReport::n_levels)
      .def_property_readonly("placement",
                             [](const MappingReport& r) { return r.placement.physical; })
      .def_readonly("per_swat_swaps", &MappingReport::per_swat_swaps)
      .def_readonly("per_swat_extra_cnots", &MappingReport::per_swat_cnots)
      .def_readonly("total_swaps", &MappingReport::total_swaps)
      .def_readonly("total_extra_cnots", &MappingReport::total_extra_cnots)
      .def_readonly("bound_only", &MappingReport::bound_only)
      .def_readonly("layout_graph", &MappingReport::layout)
      .def("to_json", [](const MappingReport& r) { return to_json(r).dump(); });

  m.def("map_to_layout",
        [](const std::string& kind, const Circuit& c, std::size_t n_levels) {
          return map_to_layout(parse_layout_kind(kind), c, n_levels);
        },
        py::arg("layout"), py::arg("circuit"), py::arg("n_levels"));
  m.def("route_swat", &route_swat, py::arg("circuit"), py::arg("report"));
  m.def("predicted_swaps", [](const std::string& kind, std::size_t n) {
    return predicted_swaps(parse_layout_kind(kind), n);
  });
  m.def(
      "sweep_csv",
      [](std::size_t lo, std::size_t hi, const std::vector<std::string>& layouts,
         std::size_t threads) {
        std::vector<LayoutKind> kinds;
        for (const auto& name : layouts) {
          kinds.push_back(parse_layout_kind(name));
        }
        return to_csv(run_sweep(lo, hi, kinds, threads));
      },
      py::arg("n_min"), py::arg("n_max"),
      py::arg("layouts") = std::vector<std::string>{"square", "heavy-hex", "triangular"},
      py::arg("threads") = 1);
}
