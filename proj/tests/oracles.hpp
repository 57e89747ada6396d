#pragma once

// Test-only reference computations. Nothing here calls into the continuant
// recurrence, the surd expansion or numth; each oracle takes an independent
// route (brute force, bottom-up folding, floating-point expansion).

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "nearcf/exactnum.hpp"

namespace nearcf::oracle {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<120>>;

// [a0; a1, ..., an] folded from the back: a_j + 1 / rest.
template <class T>
T fold_cf(const std::vector<T>& entries) {
  T value = entries.back();
  for (std::size_t j = entries.size() - 1; j-- > 0;) value = entries[j] + T(1) / value;
  return value;
}

// Continuant straight from the definition by recursion on the last entry.
template <class T>
T continuant_recursive(const std::vector<T>& e, std::size_t len) {
  if (len == 0) return T(1);
  if (len == 1) return e[0];
  return e[len - 1] * continuant_recursive(e, len - 1) + continuant_recursive(e, len - 2);
}

// Periodic CF [pre; period...] truncated after `terms` total entries.
inline Real truncated_periodic(const std::vector<Rational>& pre, const std::vector<Rational>& period,
                               std::size_t terms) {
  std::vector<Real> entries;
  for (const auto& r : pre) entries.emplace_back(Real(numer(r)) / Real(denom(r)));
  for (std::size_t j = 0; entries.size() < terms; ++j) {
    const Rational& r = period[j % period.size()];
    entries.emplace_back(Real(numer(r)) / Real(denom(r)));
  }
  Real value = entries.back();
  for (std::size_t j = entries.size() - 1; j-- > 0;) value = entries[j] + 1 / value;
  return value;
}

inline Real surd_real(const QuadraticSurd& s) {
  return (Real(s.a()) + Real(s.b()) * boost::multiprecision::sqrt(Real(s.d()))) / Real(s.c());
}

// First `count` partial quotients of x by floating-point iteration.
inline std::vector<std::int64_t> float_expansion(Real x, std::size_t count) {
  std::vector<std::int64_t> out;
  for (std::size_t j = 0; j < count; ++j) {
    const Real a = boost::multiprecision::floor(x);
    out.push_back(a.convert_to<std::int64_t>());
    x = 1 / (x - a);
  }
  return out;
}

// Minimal y >= 1 with x^2 - n y^2 = +-1 (or +-4 when four = true).
struct BrutePell {
  std::int64_t x;
  std::int64_t y;
  int rhs;
};
// Exact for values below 2^52.
inline std::optional<std::int64_t> small_root(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

inline std::optional<BrutePell> brute_pell(std::int64_t n, bool four, std::int64_t y_limit) {
  const std::int64_t target = four ? 4 : 1;
  for (std::int64_t y = 1; y <= y_limit; ++y) {
    for (const std::int64_t rhs : {-target, target}) {
      if (const auto x = small_root(n * y * y + rhs)) return BrutePell{*x, y, static_cast<int>(rhs)};
    }
  }
  return std::nullopt;
}

// Fundamental solution of x^2 - n y^2 = +-1 by the chakravala method, which
// never looks at the regular continued fraction. Stops at the first k = +-1.
struct ChakravalaResult {
  Integer x;
  Integer y;
  int rhs;
};
inline ChakravalaResult chakravala(const Integer& n) {
  const Integer root = isqrt(n);
  Integer a = (n - root * root <= (root + 1) * (root + 1) - n) ? root : root + 1;
  Integer b = 1;
  Integer k = a * a - n;
  while (k != 1 && k != -1) {
    const Integer mod = abs(k);
    // m = -a / b (mod |k|), closest to sqrt n with m > 0
    Integer inv;
    mpz_invert(inv.backend().data(), Integer(b % mod).backend().data(), mod.backend().data());
    Integer residue = (-a * inv) % mod;
    if (residue < 0) residue += mod;
    Integer low = root - ((root - residue) % mod + mod) % mod;
    Integer best = 0;
    for (Integer m = low - mod; m <= low + 2 * mod; m += mod) {
      if (m <= 0) continue;
      if (best == 0 || abs(m * m - n) < abs(best * best - n)) best = m;
    }
    const Integer next_a = (a * best + n * b) / mod;
    const Integer next_b = (a + b * best) / mod;
    k = (best * best - n) / k;
    a = abs(next_a);
    b = abs(next_b);
  }
  return {a, b, k == 1 ? 1 : -1};
}

// Some y <= y_limit with n y^2 - 1 a perfect square.
inline bool brute_negative_pell_solvable(std::int64_t n, std::int64_t y_limit) {
  for (std::int64_t y = 1; y <= y_limit; ++y) {
    if (small_root(n * y * y - 1)) return true;
  }
  return false;
}

// x + y sqrt(n) with x^2 - n y^2 = 1 is the square of a unit of norm -1
// exactly when (x - 1)/2 and (x + 1)/(2n) are both perfect squares.
inline bool unit_has_norm_minus_one_root(const Integer& n, const Integer& x) {
  if ((x - 1) % 2 != 0) return false;
  const Integer half_below = (x - 1) / 2;
  const Integer above = x + 1;
  if (above % (2 * n) != 0) return false;
  return is_perfect_square(half_below) && is_perfect_square(above / (2 * n));
}

inline bool trial_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// All (a, b) with a >= b > 0, a^2 + b^2 = n, gcd(a, b) = 1.
inline std::vector<std::pair<std::int64_t, std::int64_t>> primitive_two_squares(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t b = 1; 2 * b * b <= n; ++b) {
    const std::int64_t a2 = n - b * b;
    const Integer a = isqrt(Integer(a2));
    if (a * a == a2 && boost::multiprecision::gcd(a, Integer(b)) == 1) {
      out.emplace_back(a.convert_to<std::int64_t>(), b);
    }
  }
  return out;
}

inline bool is_square_i64(std::int64_t n) { return is_perfect_square(Integer(n)); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'c0ffeeULL);
  return engine;
}

inline std::vector<Rational> random_entries(std::mt19937_64& engine, std::size_t length,
                                            int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rational> out;
  for (std::size_t j = 0; j < length; ++j) out.emplace_back(dist(engine));
  return out;
}

}  // namespace nearcf::oracle
