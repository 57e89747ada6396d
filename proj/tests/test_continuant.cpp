#include <doctest.h>

#include "identities.hpp"
#include "nearcf/continuant.hpp"
#include "nearcf/errors.hpp"
#include "oracles.hpp"

using namespace nearcf;
using R = Rational;

TEST_CASE("continuant examples") {
  CHECK(continuant(std::vector<R>{}) == 1);
  CHECK(continuant(std::vector<R>{1, 2, 3}) == 10);
  CHECK(continuant(std::vector<R>{2, 1, R(1, 2)}) == R(7, 2));
  CHECK(continuant(std::vector<Integer>{3}) == 3);
}

TEST_CASE("continuant_trimmed windows") {
  const std::vector<R> a{1, 2, 3};
  const std::span<const R> s(a);
  CHECK(continuant_trimmed(s, 1, 0) == 7);
  CHECK(continuant_trimmed(s, 0, 1) == 3);
  CHECK(continuant_trimmed(s, 2, 1) == 1);
  CHECK(continuant_trimmed(s, 2, 2) == 0);
  CHECK_THROWS_AS(continuant_trimmed(s, 3, 2), std::out_of_range);
}

TEST_CASE("cf_eval examples") {
  CHECK(cf_eval(std::vector<R>{2}) == 2);
  CHECK(cf_eval(std::vector<R>{27, 4, 1, 1, 13}) == R(3321, 122));
  CHECK(cf_eval(std::vector<R>{27, 4, 1, 1, 13, 9}) == R(30134, 1107));
  CHECK(cf_eval(EntrySeq{1, GaussianRational(1, -1)}) == GaussianRational(R(3, 2), R(1, 2)));
  CHECK_THROWS_WITH_AS(cf_eval(std::vector<R>{1, 0}), doctest::Contains("divergent finite CF"),
                       DomainError);
  CHECK_THROWS_AS(cf_eval(std::vector<R>{}), DomainError);
}

TEST_CASE("continuant agrees with the recursive definition and the fold") {
  auto& rng = oracle::rng();
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t len = 1 + rng() % 10;
    std::vector<R> a = oracle::random_entries(rng, len, 1, 20);
    if (trial % 3 == 0) a[rng() % len] = R(static_cast<int>(rng() % 7) + 1, 3);
    CHECK(continuant(a) == oracle::continuant_recursive(a, a.size()));
    CHECK(cf_eval(a) == oracle::fold_cf(a));
  }
}

TEST_CASE("general continuant identities on random sequences") {
  auto& rng = oracle::rng();
  std::uniform_int_distribution<int> shift_num(-40, 40);
  std::uniform_int_distribution<int> shift_den(1, 9);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t len = 1 + rng() % 12;
    const std::vector<R> a = oracle::random_entries(rng, len, 1, 20);
    const std::string failed = identity::check_general(a, R(shift_num(rng), shift_den(rng)));
    CHECK_MESSAGE(failed.empty(), failed);
  }
}

TEST_CASE("general identities with rational and signed entries") {
  auto& rng = oracle::rng();
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t len = 1 + rng() % 8;
    std::vector<R> a = oracle::random_entries(rng, len, -9, 9);
    a[rng() % len] /= 7;
    CHECK(identity::check_general(a, R(3, 5)).empty());
  }
}

TEST_CASE("symmetric continuant identities") {
  auto& rng = oracle::rng();
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t len = 2 + rng() % 11;
    const std::vector<R> a = oracle::random_entries(rng, len, 1, 20);
    const std::string failed = identity::check_symmetric(a);
    CHECK_MESSAGE(failed.empty(), failed);
  }
  CHECK(identity::check_symmetric({1, 1}).empty());
}

TEST_CASE("positivity") {
  CHECK(all_positive(std::span<const R>(std::vector<R>{1, R(1, 2)})));
  CHECK_FALSE(all_positive(std::span<const R>(std::vector<R>{1, 0})));
  const EntrySeq complex{1, GaussianRational(1, 1)};
  CHECK_FALSE(all_positive(std::span<const GaussianRational>(complex)));
}
