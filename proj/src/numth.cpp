#include "nearcf/numth.hpp"

#include <algorithm>
#include <span>

#include "nearcf/continuant.hpp"
#include "nearcf/errors.hpp"

namespace nearcf {

namespace {

void require_nonsquare(const Integer& n, std::string_view op) {
  if (n < 2) throw DomainError(std::string(op) + ": n must be at least 2, got " + to_string(n));
  if (is_perfect_square(n)) {
    throw DomainError(std::string(op) + ": n must not be a perfect square, got " + to_string(n));
  }
}

std::vector<Integer> concat(std::initializer_list<std::span<const Integer>> parts) {
  std::vector<Integer> out;
  for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

Integer K(const std::vector<Integer>& entries) { return continuant(entries); }
Rational K(const std::vector<Rational>& entries) { return continuant(entries); }

std::string expansion_text(const PalindromicExpansion& e) {
  return "first=" + to_string(e.first) + " period=" + format_entries(e.period());
}

bool is_odd(const Integer& n) { return boost::multiprecision::bit_test(n, 0); }

}  // namespace

PellSolution pell_fundamental(const Integer& n, std::size_t cap) {
  require_nonsquare(n, "pell");
  const PalindromicExpansion e = sqrt_cf(n, 1, cap);
  const std::vector<Integer> first{e.first};
  PellSolution sol{n, K(concat({first, e.palindrome})), K(e.palindrome),
                   e.parity == Parity::even ? 1 : -1, e.period_length};
  if (sol.x * sol.x - n * sol.y * sol.y != sol.rhs) {
    throw InvariantViolation("pell identity failed for n=" + to_string(n) + " " + expansion_text(e));
  }
  return sol;
}

PellSolution pell4_fundamental(const Integer& n, std::size_t cap) {
  require_nonsquare(n, "pell4");
  const PalindromicExpansion e = half_sqrt_cf(n, 1, cap);
  std::vector<Rational> word{make_rational(e.last, 2)};
  for (const Integer& entry : e.palindrome) word.emplace_back(entry);
  const Rational x = 2 * K(word);
  if (!is_integer(x)) {
    throw InvariantViolation("pell4: 2K[b0/2, ...] is not an integer for n=" + to_string(n) + " " +
                             expansion_text(e));
  }
  const int sign = e.parity == Parity::even ? 1 : -1;
  PellSolution sol{n, numer(x), K(e.palindrome), 4 * sign, e.period_length};
  if (sol.x * sol.x - n * sol.y * sol.y != sol.rhs) {
    throw InvariantViolation("pell4 identity failed for n=" + to_string(n) + " " +
                             expansion_text(e));
  }
  return sol;
}

std::string_view to_string(FactorStatus status) {
  switch (status) {
    case FactorStatus::factors: return "factors";
    case FactorStatus::odd_period: return "odd period";
    case FactorStatus::odd_central: return "odd central term";
    case FactorStatus::perfect_square: return "perfect square";
  }
  return "?";
}

FactorOutcome cf_factor(const Integer& n, std::size_t cap) {
  if (n < 2) throw DomainError("factor: n must be at least 2, got " + to_string(n));
  FactorOutcome out;
  out.n = n;
  if (is_perfect_square(n)) {
    out.status = FactorStatus::perfect_square;
    return out;
  }
  const PalindromicExpansion e = sqrt_cf(n, 1, cap);
  out.period_length = e.period_length;
  out.central = e.central;
  if (e.parity == Parity::odd) {
    out.status = FactorStatus::odd_period;
    return out;
  }
  if (is_odd(*e.central)) {
    out.status = FactorStatus::odd_central;
    return out;
  }

  const std::vector<Integer> half = e.half_word();
  const std::vector<Integer> b0{e.first};
  const std::vector<Integer> half_centre{*e.central / 2};
  const Integer shorter_num = K(concat({b0, half}));
  const Integer shorter_den = K(half);
  const Integer longer_num = K(concat({b0, half, half_centre}));
  const Integer longer_den = K(concat({half, half_centre}));
  out.shorter = make_rational(shorter_num, shorter_den);
  out.longer = make_rational(longer_num, longer_den);

  const auto fail = [&](const std::string& what) {
    throw InvariantViolation("factor: " + what + " for n=" + to_string(n) + " " +
                             expansion_text(e));
  };
  // Regroup numerators and denominators across the pair.
  if (shorter_num % longer_den != 0 || longer_num % shorter_den != 0) {
    fail("regrouped quotients are not integers");
  }
  Integer u = shorter_num / longer_den;
  Integer v = longer_num / shorter_den;
  if (u * v != n) fail("regrouped factors do not multiply to n");
  if (u <= 1 || v <= 1) fail("trivial factorization");
  if (u > v) std::swap(u, v);
  out.status = FactorStatus::factors;
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

SumOfSquares sum_two_squares(const Integer& n, std::size_t cap) {
  require_nonsquare(n, "sum2sq");
  const PalindromicExpansion e = sqrt_cf(n, 1, cap);
  SumOfSquares out;
  out.n = n;
  out.period_length = e.period_length;
  if (e.parity == Parity::even) return out;

  const std::vector<Integer> half = e.half_word();
  const std::vector<Integer> w = concat({std::vector<Integer>{e.first}, half});
  const std::span<const Integer> half_span(half);
  const GaussianRational numerator(Rational(K(w)),
                                   Rational(continuant_trimmed(std::span<const Integer>(w), 0, 1)));
  const GaussianRational denominator(Rational(K(half)),
                                     Rational(-continuant_trimmed(half_span, 0, 1)));
  out.quotient = numerator / denominator;

  const auto fail = [&](const std::string& what) {
    throw InvariantViolation("sum2sq: " + what + " for n=" + to_string(n) + " quotient=" +
                             to_string(out.quotient) + " " + expansion_text(e));
  };
  if (!out.quotient.is_gaussian_integer()) fail("quotient is not a Gaussian integer");
  Integer a = boost::multiprecision::abs(numer(out.quotient.re()));
  Integer b = boost::multiprecision::abs(numer(out.quotient.im()));
  if (a < b) std::swap(a, b);
  if (a * a + b * b != n) fail("a^2 + b^2 != n");
  if (b == 0 || gcd(a, b) != 1) fail("representation is not primitive");
  out.applicable = true;
  out.a = std::move(a);
  out.b = std::move(b);
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.backend().data(), kPrimalityWitnesses) > 0;
}

bool MordellReport::all_checks_pass() const {
  return !structural_checks.empty() &&
         std::all_of(structural_checks.begin(), structural_checks.end(),
                     [](const NamedCheck& c) { return c.passed; });
}

MordellReport mordell_report(const Integer& p, std::size_t cap) {
  if (p % 4 != 3 || !is_prime(p)) {
    throw DomainError("mordell: p must be a prime congruent to 3 mod 4, got " + to_string(p));
  }
  const PalindromicExpansion e = sqrt_cf(p, 1, cap);
  MordellReport r;
  r.p = p;
  r.l = e.period_length;
  const auto check = [&r](std::string name, bool passed) {
    r.structural_checks.push_back({std::move(name), passed});
  };
  check("period_even", e.parity == Parity::even);
  if (e.parity != Parity::even) return r;

  r.k = (r.l - 2) / 2;
  r.a_central = *e.central;
  const std::vector<Integer> half = e.half_word();
  const std::vector<Integer> b0{e.first};
  const std::vector<Rational> half_q = to_rationals(half);
  const Rational centre_half = make_rational(r.a_central, 2);

  r.s = K(half);
  r.s0 = K(concat({b0, half}));
  std::vector<Rational> tail = half_q;
  tail.push_back(centre_half);
  const Rational s_k1 = 2 * K(tail);
  tail.insert(tail.begin(), Rational(e.first));
  const Rational s_0k1 = 2 * K(tail);
  r.s_k1 = numer(s_k1);
  r.s_0k1 = numer(s_0k1);

  const Integer root = isqrt(p);
  check("central_odd", is_odd(r.a_central));
  check("central_is_odd_floor_candidate",
        is_odd(r.a_central) && (r.a_central == root || r.a_central == root - 1));
  check("quantities_integral", is_integer(s_k1) && is_integer(s_0k1));
  check("s0_equals_sk1", r.s0 == r.s_k1);
  check("s0k1_equals_p_times_s", r.s_0k1 == p * r.s);
  const int sign = r.k % 2 == 0 ? -1 : 1;  // (-1)^(k+1)
  check("determinant_pm2", r.s0 * r.s_k1 - r.s * r.s_0k1 == 2 * sign);
  check("all_odd", is_odd(r.s) && is_odd(r.s0) && is_odd(r.s_k1) && is_odd(r.s_0k1));
  check("size_order", r.s_0k1 > r.s0 && r.s_k1 >= r.s);

  r.y_fundamental = K(e.palindrome);
  check("y_equals_s_times_sk1", r.y_fundamental == r.s * r.s_k1);

  // (1 + sqrt p)/2 = [(1 + a(k+1))/2; (ak..a1, a0, a1..ak, a(k+1)) repeating]
  const PalindromicExpansion h = half_sqrt_cf(p, 1, cap);
  std::vector<Integer> derived(half.rbegin(), half.rend());
  derived.push_back(e.last);
  derived.insert(derived.end(), half.begin(), half.end());
  derived.push_back(r.a_central);
  check("half_expansion_rotation",
        2 * h.first == 1 + r.a_central && is_rotation(h.period(), derived));

  r.divides_half = r.s % p == 0;
  r.divides_y = r.y_fundamental % p == 0;
  check("divides_equivalence", r.divides_half == r.divides_y);
  r.counterexample = r.divides_y;
  return r;
}

MordellReport mordell_check(const Integer& p, std::size_t cap) {
  MordellReport r = mordell_report(p, cap);
  if (!r.all_checks_pass()) throw InvariantViolation("mordell structural check failed: " + describe(r));
  return r;
}

std::string describe(const MordellReport& r) {
  const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  std::string out = "p=" + to_string(r.p) + " l=" + std::to_string(r.l) +
                    " k=" + std::to_string(r.k) + " a_k+1=" + to_string(r.a_central) +
                    " s=" + to_string(r.s) + " s0=" + to_string(r.s0) +
                    " s_k+1=" + to_string(r.s_k1) + " s_0,k+1=" + to_string(r.s_0k1) +
                    " p|s=" + yes_no(r.divides_half) + " p|y=" + yes_no(r.divides_y) +
                    " counterexample=" + yes_no(r.counterexample);
  std::string failed;
  for (const NamedCheck& c : r.structural_checks) {
    if (!c.passed) failed += (failed.empty() ? "" : ",") + c.name;
  }
  if (!failed.empty()) out += " failed=[" + failed + "]";
  return out;
}

}  // namespace nearcf
