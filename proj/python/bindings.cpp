#include <pybind11/pybind11.h>

#include <cstdint>
#include <string>

#include "evtol/evaluate.hpp"
#include "evtol/optimizer.hpp"
#include "evtol/report.hpp"

namespace py = pybind11;

namespace {

// The C++ side already defines stable JSON forms for every structure, so the
// bindings round-trip through them instead of mirroring each struct by hand.
py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

std::string json_dumps(const py::object& obj) {
  return py::module_::import("json").attr("dumps")(obj).cast<std::string>();
}

evtol::ScenarioConfig scenario_from(const py::object& scenario) {
  if (scenario.is_none()) return evtol::ScenarioConfig{};
  return evtol::scenario_from_json_text(json_dumps(scenario));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "conceptual eVTOL sizing, economics, and design optimization";

  py::register_exception<evtol::ScenarioError>(m, "ScenarioError",
                                               PyExc_ValueError);
  py::register_exception<evtol::ModelError>(m, "ModelError",
                                            PyExc_RuntimeError);

  m.def(
      "default_scenario",
      []() {
        return json_loads(
            evtol::scenario_to_json_text(evtol::ScenarioConfig{}));
      },
      "Complete scenario configuration with the calibrated defaults.");

  m.def(
      "load_scenario",
      [](const std::string& path) {
        return json_loads(
            evtol::scenario_to_json_text(evtol::load_scenario(path)));
      },
      py::arg("path"),
      "Load, merge over defaults, and validate a scenario JSON file.");

  m.def(
      "design_variables",
      []() {
        py::list names;
        for (const char* n : evtol::DesignVector::names()) names.append(n);
        return names;
      },
      "Design variable names in canonical order.");

  m.def(
      "evaluate",
      [](const py::object& design, const py::object& scenario) {
        const evtol::ScenarioConfig cfg = scenario_from(scenario);
        const evtol::DesignVector d =
            evtol::design_from_json_text(json_dumps(design));
        return json_loads(
            evtol::report_to_json_text(evtol::evaluate(d, cfg), cfg));
      },
      py::arg("design"), py::arg("scenario") = py::none(),
      "Run the full pipeline on one design; returns the report as a dict.");

  m.def(
      "optimize",
      [](const std::string& objective, const py::object& scenario,
         std::uint64_t seed, int starts) {
        const evtol::ScenarioConfig cfg = scenario_from(scenario);
        evtol::OptimizerOptions opts;
        opts.seed = seed;
        opts.starts = starts;
        const evtol::OptimizationResult result =
            evtol::optimize(cfg, evtol::objective_from_string(objective), opts);
        return json_loads(evtol::optimization_to_json_text(result, cfg));
      },
      py::arg("objective"), py::arg("scenario") = py::none(),
      py::arg("seed") = 2024, py::arg("starts") = 16,
      "Multistart constrained search; objective is max_profit, min_toc, "
      "min_gwp, or max_fom.");
}
