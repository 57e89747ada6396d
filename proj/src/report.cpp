#include "nearcf/report.hpp"

namespace nearcf {

namespace {

std::string parity_text(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

std::string signed_text(int value) { return (value > 0 ? "+" : "") + std::to_string(value); }

}  // namespace

Json make_record(std::string_view op, Json input, Json result, Json checks) {
  Json record;
  record["op"] = op;
  record["input"] = std::move(input);
  record["result"] = std::move(result);
  record["checks"] = std::move(checks);
  return record;
}

Json strings(std::span<const Integer> values) {
  Json out = Json::array();
  for (const Integer& v : values) out.push_back(to_string(v));
  return out;
}

Json strings(std::span<const Rational> values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

Json to_json(const PalindromicExpansion& e, std::string_view op, const Rational& radicand) {
  Json result;
  result["first"] = to_string(e.first);
  result["period"] = strings(e.period());
  result["palindrome"] = strings(e.palindrome);
  result["central"] = e.central ? Json(to_string(*e.central)) : Json(nullptr);
  result["last"] = to_string(e.last);
  result["period_length"] = std::to_string(e.period_length);
  result["parity"] = parity_text(e.parity);
  const bool palindromic =
      std::equal(e.palindrome.begin(), e.palindrome.end(), e.palindrome.rbegin());
  Json checks;
  checks["palindrome"] = palindromic;
  checks["final_entry"] = op == "sqrt-cf" ? e.last == 2 * e.first : e.last == 2 * e.first - 1;
  return make_record(op, {{"radicand", to_string(radicand)}}, std::move(result),
                     std::move(checks));
}

Json to_json(const PellSolution& sol, std::string_view op) {
  Json result;
  result["x"] = to_string(sol.x);
  result["y"] = to_string(sol.y);
  result["rhs"] = std::to_string(sol.rhs);
  result["period_length"] = std::to_string(sol.period_length);
  Json checks;
  checks["identity"] = sol.x * sol.x - sol.n * sol.y * sol.y == sol.rhs;
  return make_record(op, {{"n", to_string(sol.n)}}, std::move(result), std::move(checks));
}

Json to_json(const FactorOutcome& outcome) {
  Json result;
  result["status"] = std::string(to_string(outcome.status));
  Json checks = Json::object();
  if (outcome.applicable()) {
    result["u"] = to_string(outcome.u);
    result["v"] = to_string(outcome.v);
    result["shorter"] = to_string(*outcome.shorter);
    result["longer"] = to_string(*outcome.longer);
    checks["product"] = outcome.u * outcome.v == outcome.n;
    checks["nontrivial"] = outcome.u > 1 && outcome.v > 1;
  }
  if (outcome.status != FactorStatus::perfect_square) {
    result["period_length"] = std::to_string(outcome.period_length);
    result["central"] = outcome.central ? Json(to_string(*outcome.central)) : Json(nullptr);
  }
  return make_record("factor", {{"n", to_string(outcome.n)}}, std::move(result),
                     std::move(checks));
}

Json to_json(const SumOfSquares& sos) {
  Json result;
  result["applicable"] = sos.applicable;
  result["period_length"] = std::to_string(sos.period_length);
  Json checks = Json::object();
  if (sos.applicable) {
    result["a"] = to_string(sos.a);
    result["b"] = to_string(sos.b);
    checks["sum"] = sos.a * sos.a + sos.b * sos.b == sos.n;
    checks["coprime"] = gcd(sos.a, sos.b) == 1;
  }
  return make_record("sum2sq", {{"n", to_string(sos.n)}}, std::move(result), std::move(checks));
}

Json to_json(const MordellReport& r) {
  Json result;
  result["l"] = std::to_string(r.l);
  result["k"] = std::to_string(r.k);
  result["a_central"] = to_string(r.a_central);
  result["s"] = to_string(r.s);
  result["s0"] = to_string(r.s0);
  result["s_k1"] = to_string(r.s_k1);
  result["s_0k1"] = to_string(r.s_0k1);
  result["y"] = to_string(r.y_fundamental);
  result["divides_half"] = r.divides_half;
  result["divides_y"] = r.divides_y;
  result["counterexample"] = r.counterexample;
  Json checks;
  for (const NamedCheck& c : r.structural_checks) checks[c.name] = c.passed;
  return make_record("mordell", {{"p", to_string(r.p)}}, std::move(result), std::move(checks));
}

std::string to_text(const PalindromicExpansion& e, std::string_view op) {
  std::string out = "pre=[" + to_string(e.first) + "] period=" + format_entries(e.period()) +
                    " l=" + std::to_string(e.period_length) + " parity=" + parity_text(e.parity);
  out += op == "sqrt-cf" ? " b0=" + to_string(e.first) : " b0=" + to_string(e.last);
  out += " central=" + (e.central ? to_string(*e.central) : std::string("none"));
  return out;
}

std::string to_text(const PellSolution& sol) {
  return to_string(sol.n) + ": x=" + to_string(sol.x) + " y=" + to_string(sol.y) + " rhs=" + signed_text(sol.rhs) +
         " (period " + std::to_string(sol.period_length) + ")";
}

std::string to_text(const FactorOutcome& o) {
  const std::string n = to_string(o.n);
  switch (o.status) {
    case FactorStatus::factors:
      return n + " = " + to_string(o.u) + " × " + to_string(o.v) +
             " (l=" + std::to_string(o.period_length) + ", central=" + to_string(*o.central) + ")";
    case FactorStatus::perfect_square:
      return n + ": inapplicable (perfect square)";
    case FactorStatus::odd_period:
      return n + ": inapplicable (odd period, l=" + std::to_string(o.period_length) + ")";
    case FactorStatus::odd_central:
      return n + ": inapplicable (odd central term, l=" + std::to_string(o.period_length) +
             ", central=" + to_string(*o.central) + ")";
  }
  return n;
}

std::string to_text(const SumOfSquares& sos) {
  const std::string n = to_string(sos.n);
  if (!sos.applicable) {
    return n + ": inapplicable (even period, l=" + std::to_string(sos.period_length) + ")";
  }
  return n + " = " + to_string(sos.a) + "^2 + " + to_string(sos.b) +
         "^2 (l=" + std::to_string(sos.period_length) + ")";
}

std::string to_text(const MordellReport& report) { return describe(report); }

}  // namespace nearcf
