#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wdeg/automorph.hpp"
#include "wdeg/campaign.hpp"
#include "wdeg/cli.hpp"
#include "wdeg/errors.hpp"
#include "wdeg/forms.hpp"
#include "wdeg/ineq.hpp"
#include "wdeg/parser.hpp"
#include "wdeg/report.hpp"

namespace py = pybind11;
using namespace wdeg;

namespace {

// Weights arrive as a list whose entries are ints (Gamma = Z) or
// equal-length sequences of ints (Gamma = Z^k, lexicographic).
WeightVector to_weights(const py::sequence& w) {
  std::vector<Gamma> out;
  for (const py::handle& item : w) {
    if (py::isinstance<py::int_>(item)) {
      out.emplace_back(item.cast<std::int64_t>());
    } else {
      const auto values = item.cast<std::vector<std::int64_t>>();
      out.emplace_back(std::span<const std::int64_t>(values));
    }
  }
  return WeightVector(std::move(out));
}

py::object to_python(const Degree& d) {
  if (d.is_minus_infinity()) return py::none();
  const Gamma& g = d.value();
  if (g.levels() == 1) return py::int_(g[0]);
  py::tuple t(g.levels());
  for (std::size_t i = 0; i < g.levels(); ++i) t[i] = g[i];
  return t;
}

py::object json_to_python(const Json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, std::size_t n) {
  std::vector<Polynomial> out;
  for (const std::string& t : texts) out.push_back(parse_polynomial(t, n));
  return out;
}

py::object check(const std::string& which, const std::vector<std::string>& fs, const std::string& phi,
                 const std::string& g, const py::sequence& w) {
  const WeightVector wv = to_weights(w);
  const std::vector<Polynomial> f = parse_all(fs, wv.size());
  const UPoly phi_z = parse_upoly_over_z(phi, f.size());
  const Polynomial gp = parse_polynomial(g, wv.size());
  IneqReport rep;
  if (which == "main") {
    rep = check_main_inequality(f, phi_z, gp, wv);
  } else if (which == "t34a") {
    rep = check_degree_quotient_bound(f, phi_z, gp, wv);
  } else if (which == "t34b") {
    rep = check_annihilator_bound(f, phi_z, gp, wv);
  } else if (which == "su") {
    if (f.size() != 1) throw InputError("su takes exactly one f");
    rep = check_lcm_bound(f[0], phi_z, gp, wv);
  } else {
    throw InputError("unknown check '" + which + "'");
  }
  return json_to_python(to_json(rep));
}

}  // namespace

PYBIND11_MODULE(_wdeg, m) {
  m.doc() = "Weighted degrees, initial forms and degree bounds over the rationals";
  m.attr("__version__") = kVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, std::size_t n) { return parse_polynomial(text, n); }),
           py::arg("text"), py::arg("n"))
      .def_property_readonly("nvars", &Polynomial::nvars)
      .def_property_readonly("total_degree", &Polynomial::total_degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("__str__", [](const Polynomial& p) { return p.str(); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.str() + "', " + std::to_string(p.nvars()) + ")"; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__pow__", [](const Polynomial& a, std::uint32_t e) { return a.pow(e); });

  m.def("weighted_degree", [](const Polynomial& f, const py::sequence& w) {
    return to_python(weighted_degree(f, to_weights(w)));
  }, "w-degree of f; None for the zero polynomial", py::arg("f"), py::arg("w"));
  m.def("initial_form", [](const Polynomial& f, const py::sequence& w) { return initial_form(f, to_weights(w)); },
        py::arg("f"), py::arg("w"));
  m.def("algebraically_independent", [](const std::vector<Polynomial>& fs) { return algebraically_independent(fs); },
        py::arg("fs"));
  m.def("m_wg", [](const std::string& phi, const Polynomial& g, const py::sequence& w) {
    const UPoly u = parse_upoly(phi, g.nvars());
    return m_wg(u, g, to_weights(w));
  }, "Cancellation depth of Phi (text in x1..xn and y) at g", py::arg("phi"), py::arg("g"), py::arg("w"));
  m.def("kernel_generator", [](const std::vector<Polynomial>& images) {
    return principal_generator(map_kernel(images));
  }, py::arg("images"));
  m.def("check", &check, "Run one inequality check; returns the evidence record",
        py::arg("which"), py::arg("f"), py::arg("phi"), py::arg("g"), py::arg("w"));
  m.def("check_automorphism", [](const std::vector<Polynomial>& fs, const py::sequence& w) {
    return json_to_python(to_json(check_automorphism_bound(fs, to_weights(w))));
  }, py::arg("f"), py::arg("w"));
  m.def("nagata", [] {
    const PolyMap t = nagata();
    return std::vector<Polynomial>(t.images().begin(), t.images().end());
  });
  m.def("campaign", [](const std::string& suite, std::uint64_t trials, std::uint64_t seed) {
    CampaignConfig c;
    c.suite = suite;
    c.trials = trials;
    c.seed = seed;
    CampaignResult r;
    {
      py::gil_scoped_release release;
      r = run_campaign(c);
    }
    return json_to_python(r.to_json(false));
  }, py::arg("suite"), py::arg("trials") = 100, py::arg("seed") = 0);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run the command-line tool in-process; returns (exit_code, stdout, stderr)", py::arg("args"));
}
