#pragma once

// Number-theoretic applications of the sqrt(n) expansion: Pell fundamental
// solutions, the near-continued-fraction factorization, primitive sums of two
// squares, and the Mordell-conjecture checker for primes p = 3 (mod 4).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nearcf/exactnum.hpp"
#include "nearcf/surdexp.hpp"

namespace nearcf {

// x^2 - n y^2 = rhs with rhs in {+1, -1, +4, -4}.
struct PellSolution {
  Integer n;
  Integer x;
  Integer y;
  int rhs = 1;
  std::size_t period_length = 0;  // l for pell, m for pell4
};

// Fundamental solution of x^2 - n y^2 = +-1 from one period of sqrt(n):
// x = K[b0, a1..a1], y = K[a1..a1], rhs = (-1)^l.
PellSolution pell_fundamental(const Integer& n, std::size_t cap = kDefaultPeriodCap);

// Solution of x^2 - n y^2 = +-4 from one period of (1 + sqrt n)/2:
// x = 2 K[b0/2, b1..b1], y = K[b1..b1], rhs = 4 (-1)^m.
PellSolution pell4_fundamental(const Integer& n, std::size_t cap = kDefaultPeriodCap);

enum class FactorStatus { factors, odd_period, odd_central, perfect_square };
std::string_view to_string(FactorStatus status);

struct FactorOutcome {
  Integer n;
  FactorStatus status = FactorStatus::perfect_square;
  Integer u;  // u <= v, u * v = n when status == factors
  Integer v;
  // The near pair [b0, a1..ak] and [b0, a1..ak, a(k+1)/2] whose product is n.
  std::optional<Rational> shorter;
  std::optional<Rational> longer;
  std::size_t period_length = 0;
  std::optional<Integer> central;

  bool applicable() const { return status == FactorStatus::factors; }
};

// With l = 2k + 2 and even central a(k+1):
//   n = K[b0, a1..ak] / K[a1..ak, a(k+1)/2] * K[b0, a1..a(k+1)/2] / K[a1..ak]
// and both quotients are nontrivial integers.
FactorOutcome cf_factor(const Integer& n, std::size_t cap = kDefaultPeriodCap);

struct SumOfSquares {
  Integer n;
  bool applicable = false;  // false when the sqrt(n) period is even
  Integer a;                // a >= b > 0, a^2 + b^2 = n, gcd(a, b) = 1
  Integer b;
  std::size_t period_length = 0;
  GaussianRational quotient;  // the Gaussian integer before canonicalization
};

// For an odd period l = 2k + 1 and w = [b0, a1..ak]:
//   (K[w] + K[w without last] i) / (K[a1..ak] - K[a1..a(k-1)] i) = a + b i.
SumOfSquares sum_two_squares(const Integer& n, std::size_t cap = kDefaultPeriodCap);

// Deterministic below 2^64 (GMP's Baillie-PSW), probabilistic above with
// kPrimalityWitnesses - 24 extra Miller-Rabin rounds.
inline constexpr int kPrimalityWitnesses = 30;
bool is_prime(const Integer& n);

struct NamedCheck {
  std::string name;
  bool passed = false;
};

struct MordellReport {
  Integer p;
  std::size_t l = 0;
  std::size_t k = 0;
  Integer a_central;  // a(k+1)
  Integer s;          // K[a1..ak]
  Integer s0;         // K[b0, a1..ak]
  Integer s_k1;       // 2 K[a1..ak, a(k+1)/2]
  Integer s_0k1;      // 2 K[b0, a1..ak, a(k+1)/2]
  Integer y_fundamental;
  std::vector<NamedCheck> structural_checks;
  bool divides_half = false;  // p | s
  bool divides_y = false;     // p | y
  bool counterexample = false;

  bool all_checks_pass() const;
};

// Throws DomainError unless p is a prime = 3 (mod 4), and InvariantViolation
// (with the full report in the message) when a structural check fails.
MordellReport mordell_check(const Integer& p, std::size_t cap = kDefaultPeriodCap);

// Same computation without the throw on failed checks.
MordellReport mordell_report(const Integer& p, std::size_t cap = kDefaultPeriodCap);

std::string describe(const MordellReport& report);

}  // namespace nearcf
