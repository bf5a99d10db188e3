// Python bindings for the single-peaked election toolkit.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "sp/configurations.hpp"
#include "sp/core.hpp"
#include "sp/counting.hpp"
#include "sp/estimate.hpp"
#include "sp/patterns.hpp"
#include "sp/recognition.hpp"
#include "sp/sampling.hpp"

namespace py = pybind11;

namespace {

sp::Election make_election(int m, const std::vector<sp::Vote>& votes) {
  sp::Election e{m, votes};
  sp::validate_election(e);
  return e;
}

// Big integers and exact rationals cross to Python as int / Fraction.
py::object to_py_int(const sp::BigInt& x) {
  return py::module_::import("builtins").attr("int")(x.str());
}

py::object to_py_fraction(const sp::Rational& r) {
  auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(boost::multiprecision::numerator(r)),
                  to_py_int(boost::multiprecision::denominator(r)));
}

sp::ModelSpec spec_from_args(const std::string& model, const std::string& a,
                             const std::string& phi) {
  if (model == "polya") return sp::parse_model(model, a);
  if (model == "mallows") return sp::parse_model(model, phi);
  return sp::parse_model(model, "");
}

}  // namespace

PYBIND11_MODULE(_singlepeaked, mod) {
  mod.doc() = "exact combinatorics and sampling for single-peaked elections";

  py::register_exception<sp::capability_error>(mod, "CapabilityError",
                                               PyExc_RuntimeError);

  mod.def(
      "recognize",
      [](int m, const std::vector<sp::Vote>& votes)
          -> std::optional<sp::Axis> {
        return sp::recognize_fast(make_election(m, votes));
      },
      py::arg("m"), py::arg("votes"),
      "Witnessing axis if the election is single-peaked, else None.");

  mod.def(
      "is_sp_wrt_axis",
      [](int m, const std::vector<sp::Vote>& votes, const sp::Axis& a) {
        return sp::is_sp_wrt_axis(make_election(m, votes), a);
      },
      py::arg("m"), py::arg("votes"), py::arg("axis"));

  mod.def("enumerate_sp_votes", &sp::enumerate_sp_votes, py::arg("axis"));

  mod.def(
      "avoids_forbidden_configurations",
      [](int m, const std::vector<sp::Vote>& votes) {
        return sp::avoids_all(make_election(m, votes), sp::sp_forbidden_set());
      },
      py::arg("m"), py::arg("votes"));

  mod.def(
      "contains_pattern",
      [](const sp::Vote& tau, const sp::Vote& pi) {
        return sp::contains_pattern(tau, pi);
      },
      py::arg("tau"), py::arg("pi"));

  mod.def(
      "count_single_peaked",
      [](int n, int m) { return to_py_int(sp::sp_count_exact(n, m)); },
      py::arg("n"), py::arg("m"));

  mod.def(
      "schroder", [](int m) { return to_py_int(sp::schroder(m)); },
      py::arg("m"));

  mod.def(
      "ic_probability_bounds",
      [](int n, int m) {
        const auto b = sp::ic_probability_bounds(n, m);
        return py::make_tuple(to_py_fraction(*b.lower),
                              to_py_fraction(*b.upper));
      },
      py::arg("n"), py::arg("m"));

  mod.def(
      "iac_exact",
      [](int n, int m) { return to_py_fraction(sp::iac_exact(n, m)); },
      py::arg("n"), py::arg("m"));

  mod.def(
      "polya_lower",
      [](int n, int m, const std::string& a) {
        return to_py_fraction(sp::polya_lower(n, m, sp::BigInt(a)));
      },
      py::arg("n"), py::arg("m"), py::arg("a"));

  mod.def(
      "mallows_lower",
      [](int n, int m, const std::string& phi) {
        return to_py_fraction(
            sp::mallows_lower(n, m, sp::rational_from_decimal(phi)));
      },
      py::arg("n"), py::arg("m"), py::arg("phi"));

  mod.def(
      "sample",
      [](const std::string& model, int n, int m, std::uint64_t seed,
         const std::string& a, const std::string& phi) {
        sp::RngStream rng(seed, 0);
        return sp::sample_election(spec_from_args(model, a, phi), n, m, rng)
            .votes;
      },
      py::arg("model"), py::arg("n"), py::arg("m"), py::arg("seed"),
      py::arg("a") = "", py::arg("phi") = "");

  mod.def(
      "estimate_sp_probability",
      [](const std::string& model, int n, int m, std::uint64_t trials,
         std::uint64_t seed, unsigned workers, const std::string& a,
         const std::string& phi) {
        const auto r = sp::estimate_sp_probability(
            spec_from_args(model, a, phi), n, m, trials, seed, workers);
        py::dict d;
        d["trials"] = r.trials;
        d["successes"] = r.successes;
        d["estimate"] = r.estimate;
        d["ci_low"] = r.ci_low;
        d["ci_high"] = r.ci_high;
        return d;
      },
      py::arg("model"), py::arg("n"), py::arg("m"), py::arg("trials"),
      py::arg("seed"), py::arg("workers") = 1, py::arg("a") = "",
      py::arg("phi") = "");
}
