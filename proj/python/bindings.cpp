// Python bindings. Integers cross as Python ints and rationals as
// fractions.Fraction; entries may be given as int, Fraction or "p/q" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nearcf/cfcore.hpp"
#include "nearcf/cli.hpp"
#include "nearcf/errors.hpp"
#include "nearcf/numth.hpp"
#include "nearcf/surdexp.hpp"

namespace py = pybind11;
using namespace nearcf;

namespace {

py::object to_py(const Integer& n) {
  return py::module_::import("builtins").attr("int")(to_string(n));
}

py::object to_py(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numer(r)), to_py(denom(r)));
}

template <class T>
py::list to_py_list(const std::vector<T>& values) {
  py::list out;
  for (const T& v : values) out.append(to_py(v));
  return out;
}

Integer integer_from(const py::handle& value) { return parse_integer(py::str(value).cast<std::string>()); }

Rational rational_from(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

std::vector<Rational> rationals_from(const py::iterable& values) {
  std::vector<Rational> out;
  for (const py::handle v : values) out.push_back(rational_from(v));
  return out;
}

MeanKind kind_from(const std::string& text) {
  const auto kind = parse_mean_kind(text);
  if (!kind) throw std::invalid_argument("unknown mean kind: " + text);
  return *kind;
}

Variant variant_from(const std::string& text) {
  const auto variant = parse_variant(text);
  if (!variant) throw std::invalid_argument("unknown variant: " + text);
  return *variant;
}

py::dict expansion_dict(const PalindromicExpansion& e) {
  py::dict d;
  d["first"] = to_py(e.first);
  d["period"] = to_py_list(e.period());
  d["palindrome"] = to_py_list(e.palindrome);
  d["central"] = e.central ? to_py(*e.central) : py::none();
  d["period_length"] = e.period_length;
  d["parity"] = e.parity == Parity::odd ? "odd" : "even";
  return d;
}

py::dict pell_dict(const PellSolution& s) {
  py::dict d;
  d["n"] = to_py(s.n);
  d["x"] = to_py(s.x);
  d["y"] = to_py(s.y);
  d["rhs"] = s.rhs;
  d["period_length"] = s.period_length;
  return d;
}

}  // namespace

PYBIND11_MODULE(nearcf, m) {
  m.doc() = "Exact continued fractions, near-CF means and their number theory.";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<InvariantViolation> invariant_error(m, "InvariantViolation",
                                                           PyExc_AssertionError);
  static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      domain_error(e.what());
    } catch (const InvariantViolation& e) {
      invariant_error(e.what());
    } catch (const ResourceError& e) {
      resource_error(e.what());
    }
  });

  m.def("continuant", [](const py::iterable& entries) {
    return to_py(continuant(rationals_from(entries)));
  });
  m.def("cf_eval", [](const py::iterable& entries) {
    return to_py(cf_eval(rationals_from(entries)));
  });
  m.def(
      "mean",
      [](const py::iterable& entries, const std::string& kind, const std::string& variant) {
        const std::vector<Rational> a = rationals_from(entries);
        const MeanKind k = kind_from(kind);
        const Variant v = variant_from(variant);
        py::dict d;
        if (k == MeanKind::arithmetic || k == MeanKind::harmonic) {
          const CFWord word = mean_word(a, k, v);
          d["word"] = to_py_list(word.entries);
          d["value"] = to_py(word.value());
        } else {
          const PeriodicCF pcf = mean_periodic(a, k, v);
          d["preperiod"] = to_py_list(pcf.preperiod);
          d["period"] = to_py_list(pcf.period);
          d["value"] = to_string(periodic_value(pcf));
        }
        return d;
      },
      py::arg("entries"), py::arg("kind"), py::arg("variant") = "real");
  m.def(
      "verify_mean",
      [](const py::iterable& entries, const std::string& kind, const std::string& variant,
         int precision_digits, int tolerance_digits) {
        const VerificationReport r = verify_mean(rationals_from(entries), kind_from(kind),
                                                 variant_from(variant),
                                                 {precision_digits, tolerance_digits});
        py::dict checks;
        for (const MeanCheck& c : r.checks) checks[py::str(c.name)] = c.passed;
        py::dict d;
        d["passed"] = r.passed();
        d["mean_value"] = r.mean_value;
        d["expected_value"] = r.expected_value;
        d["checks"] = checks;
        return d;
      },
      py::arg("entries"), py::arg("kind"), py::arg("variant") = "real",
      py::arg("precision_digits") = 60, py::arg("tolerance_digits") = 30);
  m.def(
      "sqrt_cf",
      [](const py::object& radicand) {
        const Rational r = rational_from(radicand);
        return expansion_dict(sqrt_cf(numer(r), denom(r)));
      },
      py::arg("radicand"));
  m.def(
      "half_sqrt_cf",
      [](const py::object& radicand) {
        const Rational r = rational_from(radicand);
        return expansion_dict(half_sqrt_cf(numer(r), denom(r)));
      },
      py::arg("radicand"));
  m.def("pell", [](const py::object& n) { return pell_dict(pell_fundamental(integer_from(n))); });
  m.def("pell4", [](const py::object& n) { return pell_dict(pell4_fundamental(integer_from(n))); });
  m.def("factor", [](const py::object& n) -> py::object {
    const FactorOutcome o = cf_factor(integer_from(n));
    if (!o.applicable()) return py::str(std::string(to_string(o.status)));
    return py::make_tuple(to_py(o.u), to_py(o.v));
  });
  m.def("sum_two_squares", [](const py::object& n) -> py::object {
    const SumOfSquares s = sum_two_squares(integer_from(n));
    if (!s.applicable) return py::none();
    return py::make_tuple(to_py(s.a), to_py(s.b));
  });
  m.def("is_prime", [](const py::object& n) { return is_prime(integer_from(n)); });
  m.def("mordell", [](const py::object& p) {
    const MordellReport r = mordell_check(integer_from(p));
    py::dict checks;
    for (const NamedCheck& c : r.structural_checks) checks[py::str(c.name)] = c.passed;
    py::dict d;
    d["p"] = to_py(r.p);
    d["l"] = r.l;
    d["k"] = r.k;
    d["a_central"] = to_py(r.a_central);
    d["s"] = to_py(r.s);
    d["s0"] = to_py(r.s0);
    d["s_k1"] = to_py(r.s_k1);
    d["s_0k1"] = to_py(r.s_0k1);
    d["y_fundamental"] = to_py(r.y_fundamental);
    d["checks"] = checks;
    d["counterexample"] = r.counterexample;
    return d;
  });
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one command-line invocation; returns (exit code, stdout, stderr).");
}
