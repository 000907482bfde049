#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wmi/det.hpp"
#include "wmi/engine.hpp"
#include "wmi/errors.hpp"
#include "wmi/generator.hpp"
#include "wmi/problem_io.hpp"
#include "wmi/skeleton.hpp"

namespace py = pybind11;

namespace {

py::dict result_dict(const wmi::WmiResult& r, wmi::Algorithm a) {
  py::dict d;
  d["value"] = wmi::to_string(r.value);
  d["n_integrals"] = r.n_integrals;
  d["n_assignments"] = r.n_assignments;
  py::list log;
  for (const auto& e : r.log) {
    py::list lits;
    for (const auto& l : e.assignment.literals()) lits.append(wmi::literal_to_string(l));
    log.append(py::make_tuple(lits, e.multiplier, wmi::to_string(e.integral)));
  }
  d["log"] = log;
  d["json"] = wmi::result_to_json(r, a);
  return d;
}

}  // namespace

PYBIND11_MODULE(_wmi, m) {
  m.doc() = "Exact weighted model integration (C++ core)";

  py::register_exception<wmi::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<wmi::NonPolynomialWeight>(m, "NonPolynomialWeight", PyExc_ValueError);
  py::register_exception<wmi::UnboundedRegion>(m, "UnboundedRegion", PyExc_ValueError);
  py::register_exception<wmi::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<wmi::Problem>(m, "Problem")
      .def_static("parse", [](const std::string& text) { return wmi::parse_problem(text); })
      .def("serialize", &wmi::serialize_problem)
      .def_property_readonly("reals", [](const wmi::Problem& p) { return p.reals; })
      .def_property_readonly("bools", [](const wmi::Problem& p) { return p.bools; })
      .def_property_readonly("phi", [](const wmi::Problem& p) { return p.phi.to_string(); })
      .def_property_readonly("chi", [](const wmi::Problem& p) { return p.chi.to_string(); })
      .def_property_readonly("weight", [](const wmi::Problem& p) { return p.weight.to_string(); })
      .def("__repr__", &wmi::serialize_problem);

  m.def(
      "solve",
      [](const wmi::Problem& p, const std::string& algo, bool log, bool cache) {
        wmi::WmiOptions opt;
        opt.log = log;
        opt.cache_integrals = cache;
        wmi::Algorithm a = wmi::parse_algorithm(algo);
        wmi::WmiResult r;
        {
          py::gil_scoped_release release;
          r = wmi::run_algorithm(a, p, opt);
        }
        return result_dict(r, a);
      },
      py::arg("problem"), py::arg("algo") = "sa", py::arg("log") = false, py::arg("cache") = false,
      "Weighted model integral with bf, pa or sa; value as an exact 'p/q' string.");

  m.def(
      "skeleton", [](const wmi::Problem& p) { return wmi::encode_skeleton(p.weight).dump(); }, py::arg("problem"),
      "Skeleton encoding of the weight as text.");

  m.def(
      "generate",
      [](unsigned depth, unsigned bools, unsigned reals, std::uint64_t seed, unsigned degree) {
        wmi::GenConfig cfg;
        cfg.depth = depth;
        cfg.n_bool = bools;
        cfg.n_real = reals;
        cfg.seed = seed;
        cfg.poly_degree = degree;
        return wmi::gen_problem(cfg);
      },
      py::arg("depth"), py::arg("bools"), py::arg("reals"), py::arg("seed"), py::arg("degree") = 2,
      "Random benchmark problem.");

  m.def(
      "det_query",
      [](const std::string& model_json, const std::string& query) {
        wmi::DetModel model = wmi::parse_det(model_json);
        return wmi::to_string(wmi::det_query(model, wmi::parse_formula(query, model.problem())));
      },
      py::arg("model_json"), py::arg("query"), "Probability of a query under a DET model, as 'p/q'.");
}
