#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thermores/catalysis.hpp"
#include "thermores/divergence.hpp"
#include "thermores/engine.hpp"
#include "thermores/errors.hpp"
#include "thermores/gibbsoracle.hpp"
#include "thermores/io.hpp"
#include "thermores/reproduce.hpp"
#include "thermores/reservoir.hpp"
#include "thermores/thermocurve.hpp"

namespace py = pybind11;
using namespace thermores;

// Rationals cross the boundary as "p/q" strings; the Python package turns
// them into fractions.Fraction.
using Strs = std::vector<std::string>;

namespace {

std::vector<Rat> rats(const Strs& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(Rat::parse(s));
  return out;
}

Strs strs(const std::vector<Rat>& v) {
  Strs out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

ThermoState state(const Strs& p, const Strs& w) { return make_state(rats(p), rats(w)); }

Transition transition(const Strs& p, const Strs& q, const Strs& w) {
  return make_transition(state(p, w), state(q, w));
}

py::tuple reservoir_tuple(const Reservoir& r) {
  return py::make_tuple(strs(r.r()), strs(r.init_weights()), strs(r.fin_weights()));
}

}  // namespace

PYBIND11_MODULE(_thermores, m) {
  m.doc() = "Exact thermomajorization curves and efficient work reservoirs";

  // ValueError subclass carrying the error code name in .code.
  static PyObject* error_type = PyErr_NewException("_thermores.ThermoresError", PyExc_ValueError, nullptr);
  m.attr("ThermoresError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(error_type)(e.what());
      inst.attr("code") = to_string(e.code());
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  m.def("curve_breakpoints", [](const Strs& p, const Strs& w) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& pt : curve_of(state(p, w)).breakpoints()) out.emplace_back(pt.x.str(), pt.y.str());
    return out;
  });
  m.def("num_distinct_slopes", [](const Strs& p, const Strs& w) { return num_distinct_slopes(curve_of(state(p, w))); });
  m.def("majorizes", [](const Strs& ap, const Strs& aw, const Strs& bp, const Strs& bw) {
    return majorizes(curve_of(state(ap, aw)), curve_of(state(bp, bw)));
  });

  m.def("renyi", [](double alpha, const Strs& p, const Strs& w) {
    const ThermoState s = state(p, w);
    return renyi(alpha, s, gibbs_of(s));
  }, py::arg("alpha"), py::arg("probs"), py::arg("weights"));
  m.def("default_alpha_grid", &default_alpha_grid);
  m.def("entropy_production", [](const Strs& p, const Strs& q, const Strs& w) {
    return entropy_production(transition(p, q, w));
  });

  m.def("minimal_extraction_reservoir", [](const Strs& p, const Strs& w, const std::string& c) {
    return reservoir_tuple(minimal_extraction_reservoir(state(p, w), Rat::parse(c)));
  }, py::arg("probs"), py::arg("weights"), py::arg("c") = "1");
  m.def("general_efficient_reservoir", [](const Strs& p, const Strs& q, const Strs& w, const std::string& anchor) {
    return reservoir_tuple(general_efficient_reservoir(transition(p, q, w), Rat::parse(anchor)));
  }, py::arg("initial"), py::arg("final"), py::arg("weights"), py::arg("anchor") = "1");
  m.def("verify_efficient", [](const Strs& p, const Strs& q, const Strs& w, const Strs& r, const Strs& iw,
                               const Strs& fw) {
    return verify_efficient(transition(p, q, w), Reservoir::make(rats(r), rats(iw), rats(fw)));
  });
  m.def("average_work", [](const Strs& r, const Strs& iw, const Strs& fw) {
    return average_work(Reservoir::make(rats(r), rats(iw), rats(fw)));
  });

  m.def("lp_feasible", [](const Strs& p, const Strs& q, const Strs& w) {
    return lp_feasible(transition(p, q, w)).feasible;
  });
  m.def("cto_feasible", [](const Strs& p, const Strs& q, const Strs& w, const std::vector<double>& grid) {
    return cto_feasible(transition(p, q, w), grid).feasible;
  });

  // Structured reports go through their JSON form.
  m.def("run_carnot_json", [](double eps, double th, double tc) {
    return io::engine_to_json(run_carnot({eps, th, tc})).dump();
  });
  m.def("reproduce_json", [](const std::string& which) {
    const ReproReport rep = reproduce(which);
    io::json checks = io::json::array();
    for (const auto& c : rep.checks) checks.push_back({{"quantity", c.quantity}, {"pass", c.pass}});
    return io::json{{"which", rep.which}, {"ok", rep.ok()}, {"checks", checks}}.dump();
  });
}
