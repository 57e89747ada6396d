#include <doctest.h>

#include "nearcf/cfcore.hpp"
#include "nearcf/errors.hpp"
#include "nearcf/numth.hpp"
#include "nearcf/surdexp.hpp"
#include "oracles.hpp"

using namespace nearcf;
using R = Rational;
using Rs = std::vector<R>;
using Is = std::vector<Integer>;

TEST_CASE("expand_surd examples") {
  const PeriodicCF root2 = expand_surd({0, 1, 2});
  CHECK(root2.preperiod == Rs{1});
  CHECK(root2.period == Rs{2});
  CHECK(root2.minimal);
  const PeriodicCF root741 = expand_surd({0, 1, 741});
  CHECK(root741.preperiod == Rs{27});
  CHECK(root741.period == Rs{4, 1, 1, 13, 18, 13, 1, 1, 4, 54});
  const PeriodicCF golden = expand_surd({1, 2, 5});
  CHECK(golden.preperiod.empty());
  CHECK(golden.period == Rs{1});
}

TEST_CASE("expand_surd errors") {
  CHECK_THROWS_AS(expand_surd({0, 1, 741}, 5), ResourceError);
  CHECK_THROWS_AS(expand_surd({0, 1, 4}), DomainError);
  CHECK_THROWS_AS(expand_surd({0, 0, 2}), DomainError);
}

TEST_CASE("expand_surd agrees with floating expansion") {
  auto& rng = oracle::rng();
  for (int trial = 0; trial < 300; ++trial) {
    const Integer D = 2 + rng() % 5000;
    if (is_perfect_square(D)) continue;
    const Integer P = static_cast<long>(rng() % 50);
    const Integer Q = 1 + static_cast<long>(rng() % 40);
    const PeriodicCF cf = expand_surd({P, Q, D});
    const oracle::Real x = (oracle::Real(P) + boost::multiprecision::sqrt(oracle::Real(D))) /
                           oracle::Real(Q);
    const auto expected = oracle::float_expansion(x, 25);
    Rs got = cf.preperiod;
    while (got.size() < 25) got.insert(got.end(), cf.period.begin(), cf.period.end());
    for (std::size_t j = 0; j < 25; ++j) CHECK(got[j] == expected[j]);
  }
}

TEST_CASE("sqrt_cf examples") {
  const PalindromicExpansion two = sqrt_cf(2);
  CHECK(two.first == 1);
  CHECK(two.palindrome.empty());
  CHECK_FALSE(two.central.has_value());
  CHECK(two.period() == Is{2});
  CHECK(two.period_length == 1);
  CHECK(two.parity == Parity::odd);

  const PalindromicExpansion e = sqrt_cf(741);
  CHECK(e.first == 27);
  CHECK(e.palindrome == Is{4, 1, 1, 13, 18, 13, 1, 1, 4});
  CHECK(e.central == Integer(18));
  CHECK(e.period_length == 10);
  CHECK(e.parity == Parity::even);
  CHECK(e.half_word() == Is{4, 1, 1, 13});

  const PalindromicExpansion r = sqrt_cf(7, 3);
  CHECK(r.first == 1);
  CHECK(r.palindrome == Is{1, 1, 8, 1, 1});
  CHECK(r.central == Integer(8));
  CHECK(r.period_length == 6);
  CHECK(r.period() == Is{1, 1, 8, 1, 1, 2});
}

TEST_CASE("sqrt_cf errors") {
  CHECK_THROWS_WITH_AS(sqrt_cf(9), doctest::Contains("rational square root"), DomainError);
  CHECK_THROWS_WITH_AS(sqrt_cf(4, 9), doctest::Contains("rational square root"), DomainError);
  CHECK_THROWS_AS(sqrt_cf(2, 3), DomainError);
  CHECK_THROWS_AS(sqrt_cf(6, 4), DomainError);
  CHECK_THROWS_AS(sqrt_cf(741, 1, 3), ResourceError);
}

TEST_CASE("half_sqrt_cf examples") {
  const PalindromicExpansion five = half_sqrt_cf(5);
  CHECK(five.first == 1);
  CHECK(five.period() == Is{1});
  CHECK(five.last == 1);
  CHECK(five.period_length == 1);

  const PalindromicExpansion three = half_sqrt_cf(3);
  CHECK(three.first == 1);
  CHECK(three.period() == Is{2, 1});
  CHECK(three.last == 1);
  CHECK(three.period_length == 2);

  const PalindromicExpansion seven = half_sqrt_cf(7);
  CHECK(seven.first == 1);
  CHECK(seven.period() == Is{1, 4, 1, 1});
  CHECK(seven.period_length == 4);

  const PalindromicExpansion thirteen = half_sqrt_cf(13);
  CHECK(thirteen.first == 2);
  CHECK(thirteen.period() == Is{3});
}

TEST_CASE("structure laws for every non-square n <= 2000") {
  for (long n = 2; n <= 2000; ++n) {
    if (oracle::is_square_i64(n)) continue;
    const PalindromicExpansion e = sqrt_cf(n);
    const Integer b0 = isqrt(n);
    const Is period = e.period();
    CHECK(e.first == b0);
    CHECK(period.back() == 2 * b0);
    CHECK(Is(e.palindrome.rbegin(), e.palindrome.rend()) == e.palindrome);
    CHECK(e.period_length == period.size());

    bool has_three_mod_four = false;
    for (const std::int64_t p : oracle::prime_factors(n)) has_three_mod_four |= p % 4 == 3;
    if (has_three_mod_four) CHECK(e.parity == Parity::even);

    const PellSolution sol = pell_fundamental(n);
    CHECK(sol.x * sol.x - Integer(n) * sol.y * sol.y == sol.rhs);
    const bool odd = e.parity == Parity::odd;
    if (odd) {
      CHECK(sol.rhs == -1);
    } else {
      // Even period: the +1 solution must not be the square of a -1 unit.
      CHECK_FALSE(oracle::unit_has_norm_minus_one_root(n, sol.x));
      CHECK_FALSE(oracle::brute_negative_pell_solvable(n, 2000));
    }

    const PeriodicCF as_periodic = e.periodic();
    CHECK(periodic_value(as_periodic) == QuadraticSurd(0, 1, 1, n));
  }
}

TEST_CASE("half expansion structure") {
  for (long n = 2; n <= 2000; ++n) {
    if (oracle::is_square_i64(n)) continue;
    const PalindromicExpansion h = half_sqrt_cf(n);
    const Integer b0 = h.last;
    CHECK(b0 % 2 == 1);
    CHECK(2 * h.first == 1 + b0);
    CHECK(Is(h.palindrome.rbegin(), h.palindrome.rend()) == h.palindrome);
    CHECK(periodic_value(h.periodic()) == QuadraticSurd(1, 1, 2, n));
  }
}

TEST_CASE("rational radicands") {
  for (long p = 2; p <= 60; ++p) {
    for (long q = 1; q < p; ++q) {
      if (gcd(p, q) != 1 || is_perfect_square(Integer(p * q))) continue;
      const PalindromicExpansion e = sqrt_cf(p, q);
      CHECK(e.last == 2 * e.first);
      const QuadraticSurd value = periodic_value(e.periodic());
      CHECK(value * value == R(p, q));
    }
  }
}

TEST_CASE("is_rotation") {
  CHECK(is_rotation({1, 2, 3}, {2, 3, 1}));
  CHECK_FALSE(is_rotation({1, 2, 3}, {3, 2, 1}));
  CHECK_FALSE(is_rotation({1, 2}, {1, 2, 1}));
}
