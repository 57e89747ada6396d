#include "nearcf/surdexp.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "nearcf/continuant.hpp"
#include "nearcf/errors.hpp"

namespace nearcf {

namespace {

std::vector<Integer> to_integers(const std::vector<Rational>& values) {
  std::vector<Integer> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(numer(v));
  return out;
}

bool is_palindrome(const std::vector<Integer>& word) {
  return std::equal(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(word.size() / 2),
                    word.rbegin());
}

void check_radicand(const Integer& p, const Integer& q) {
  if (q <= 0) throw DomainError("radicand denominator must be positive");
  if (gcd(p, q) != 1) {
    throw DomainError("radicand " + to_string(p) + "/" + to_string(q) + " is not in lowest terms");
  }
  if (is_perfect_square(p) && is_perfect_square(q)) {
    throw DomainError("rational square root: " + to_string(p) + "/" + to_string(q) +
                      " is a square");
  }
  if (p <= q) throw DomainError("radicand must exceed 1");
}

// Splits an expansion period into palindrome and final entry.
PalindromicExpansion decompose(Integer first, std::vector<Integer> period) {
  PalindromicExpansion out;
  out.first = std::move(first);
  out.period_length = period.size();
  out.last = period.back();
  period.pop_back();
  out.palindrome = std::move(period);
  out.parity = out.period_length % 2 == 0 ? Parity::even : Parity::odd;
  if (out.parity == Parity::even) out.central = out.palindrome[(out.period_length - 2) / 2];
  return out;
}

[[noreturn]] void structure_violation(const std::string& what, const PeriodicCF& cf) {
  throw InvariantViolation(what + "; expansion pre=" + format_entries(cf.preperiod) +
                           " period=" + format_entries(cf.period));
}

}  // namespace

PeriodicCF expand_surd(SurdState state, std::size_t cap) {
  auto& [P, Q, D] = state;
  if (Q == 0) throw DomainError("expand_surd: Q is zero");
  if (D <= 0 || is_perfect_square(D)) {
    throw DomainError("expand_surd: D must be positive and not a square, got " + to_string(D));
  }
  const bool numerator_positive = P >= 0 || P * P < D;
  if (numerator_positive != (Q > 0)) throw DomainError("expand_surd: value must be positive");

  if ((D - P * P) % Q != 0) {
    const Integer scale = boost::multiprecision::abs(Q);
    P *= scale;
    Q *= scale;
    D *= scale * scale;
  }
  const Integer root = isqrt(D);

  std::vector<Rational> terms;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  while (true) {
    auto [it, inserted] = seen.try_emplace({P, Q}, terms.size());
    if (!inserted) {
      PeriodicCF out;
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      out.preperiod.assign(terms.begin(), terms.begin() + start);
      out.period.assign(terms.begin() + start, terms.end());
      out.minimal = true;
      return out;
    }
    if (terms.size() >= cap) {
      throw ResourceError("expand_surd: no period within " + std::to_string(cap) + " terms");
    }
    // floor((P + sqrt D) / Q); sqrt D is irrational so floor(sqrt D) decides it.
    const Integer a = Q > 0 ? floor_div(P + root, Q) : Integer(-floor_div(P + root, -Q) - 1);
    terms.emplace_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

std::vector<Integer> PalindromicExpansion::half_word() const {
  const std::size_t k = (period_length - 1) / 2;
  return {palindrome.begin(), palindrome.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::vector<Integer> PalindromicExpansion::period() const {
  std::vector<Integer> out = palindrome;
  out.push_back(last);
  return out;
}

PeriodicCF PalindromicExpansion::periodic() const {
  PeriodicCF out;
  out.preperiod = {Rational(first)};
  const std::vector<Integer> word = period();
  out.period = to_rationals(word);
  out.minimal = true;
  return out;
}

PalindromicExpansion sqrt_cf(const Integer& p, const Integer& q, std::size_t cap) {
  check_radicand(p, q);
  const PeriodicCF cf = expand_surd({0, q, p * q}, cap);
  const Integer b0 = isqrt(p / q);
  if (cf.preperiod.size() != 1 || cf.preperiod.front() != b0) {
    structure_violation("sqrt(" + to_string(p) + "/" + to_string(q) +
                            ") does not have preperiod [floor(sqrt)]",
                        cf);
  }
  PalindromicExpansion out = decompose(b0, to_integers(cf.period));
  if (out.last != 2 * b0) structure_violation("sqrt period does not end in 2*b0", cf);
  if (!is_palindrome(out.palindrome)) structure_violation("sqrt period interior not palindromic", cf);
  return out;
}

PalindromicExpansion half_sqrt_cf(const Integer& p, const Integer& q, std::size_t cap) {
  check_radicand(p, q);
  const PeriodicCF cf = expand_surd({q, 2 * q, p * q}, cap);
  std::vector<Integer> period = to_integers(cf.period);
  Integer first;
  if (cf.preperiod.empty()) {
    // Purely periodic: peel the first term and rotate the period.
    first = period.front();
    std::rotate(period.begin(), period.begin() + 1, period.end());
  } else if (cf.preperiod.size() == 1) {
    first = numer(cf.preperiod.front());
  } else {
    structure_violation("(1+sqrt(p/q))/2 has a preperiod longer than one term", cf);
  }
  PalindromicExpansion out = decompose(first, std::move(period));
  if (out.last % 2 == 0) structure_violation("(1+sqrt(p/q))/2 period does not end in odd b0", cf);
  if (2 * out.first - 1 != out.last) {
    structure_violation("(1+sqrt(p/q))/2 first term is not (1+b0)/2", cf);
  }
  if (!is_palindrome(out.palindrome)) {
    structure_violation("(1+sqrt(p/q))/2 period interior not palindromic", cf);
  }
  return out;
}

bool is_rotation(const std::vector<Integer>& period, const std::vector<Integer>& candidate) {
  if (period.size() != candidate.size()) return false;
  if (period.empty()) return true;
  std::vector<Integer> doubled = period;
  doubled.insert(doubled.end(), period.begin(), period.end());
  return std::search(doubled.begin(), doubled.end(), candidate.begin(), candidate.end()) !=
         doubled.end();
}

}  // namespace nearcf
