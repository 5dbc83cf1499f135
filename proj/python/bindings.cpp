// Copyright 2026 The schemewalk Authors
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

#include "schemewalk/errors.hpp"
#include "schemewalk/walk.hpp"

namespace py = pybind11;
using namespace schemewalk;

namespace {

py::dict distribution_dict(const DiscreteDistribution& dist) {
  py::dict out;
  out["atoms"] = dist.atoms;
  out["weights"] = dist.weights;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum walks on association schemes";

  // Owned by the module attribute; errors carry "Code: message".
  static PyObject* errorType = py::exception<Error>(m, "SchemeWalkError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(errorType, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& info : catalog_names()) names.push_back(info.name);
    return names;
  });

  m.def(
      "intersection_array",
      [](const std::string& graph) {
        const auto array = intersection_array_of(parse_graph_spec(graph));
        py::dict out;
        out["d"] = array.diameter;
        out["c_forward"] = array.forward;
        out["b_backward"] = array.backward;
        return out;
      },
      py::arg("graph"));

  m.def(
      "spectrum", [](const std::string& graph) { return distribution_dict(spectrum_of(parse_graph_spec(graph))); },
      py::arg("graph"));

  m.def(
      "walk",
      [](const std::string& graph, std::vector<double> times, const std::string& engine, bool normalized,
         bool vertexLevel) {
        const auto spec = parse_graph_spec(graph);
        const auto chosen = resolve_engine(spec, parse_engine(engine));
        auto series = dispatch(WalkRequest{spec, std::move(times), chosen, normalized});
        if (vertexLevel) series = series.to_vertex_level();
        py::dict out;
        out["engine"] = to_string(chosen);
        out["times"] = series.times;
        out["strata_sizes"] = series.strataSizes.sizes;
        out["amplitudes"] = Eigen::MatrixXcd(series.amplitudes);
        return out;
      },
      py::arg("graph"), py::arg("times"), py::arg("engine") = "auto", py::arg("normalized") = false,
      py::arg("vertex_level") = false);

  m.def(
      "average",
      [](const std::string& graph, const std::string& engine) {
        const auto avg = dispatch_average(parse_graph_spec(graph), parse_engine(engine));
        py::dict out;
        out["stratum"] = avg.stratum;
        out["vertex"] = avg.vertex;
        return out;
      },
      py::arg("graph"), py::arg("engine") = "auto");

  m.def(
      "character_table",
      [](const std::string& family, int n) {
        const auto table = character_table(GroupDescriptor{parse_group_family(family), n});
        py::dict out;
        out["group"] = table.groupName;
        out["class_sizes"] = table.classSizes;
        out["class_labels"] = table.classLabels;
        out["irrep_labels"] = table.irrepLabels;
        out["values"] = Eigen::MatrixXcd(table.values);
        return out;
      },
      py::arg("family"), py::arg("n"));
}
