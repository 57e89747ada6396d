#pragma once

// Continued fraction expansion of quadratic irrationals (P + sqrt D) / Q by
// exact integer state iteration, with minimal-period detection and the
// palindromic decomposition of sqrt(p/q) and (1 + sqrt(p/q)) / 2.

#include <cstddef>
#include <optional>
#include <vector>

#include "nearcf/cfcore.hpp"
#include "nearcf/exactnum.hpp"

namespace nearcf {

inline constexpr std::size_t kDefaultPeriodCap = 1'000'000;

// (P + sqrt D) / Q
struct SurdState {
  Integer P;
  Integer Q;
  Integer D;
};

// Expands a positive quadratic irrational. The returned preperiod/period
// split is exact and the period minimal. `cap` bounds the total number of
// emitted terms (preperiod plus period); exceeding it throws ResourceError.
PeriodicCF expand_surd(SurdState state, std::size_t cap = kDefaultPeriodCap);

enum class Parity { odd, even };

// An expansion [first; (palindrome, last) repeating] whose period is a
// palindrome followed by one final entry.
//
// For sqrt(p/q): first = b0 = floor(sqrt(p/q)) and last = a0 = 2 b0.
// For (1 + sqrt(p/q)) / 2: first = (1 + b0) / 2 and last = b0, which is odd.
struct PalindromicExpansion {
  Integer first;
  Integer last;
  std::vector<Integer> palindrome;  // a1 .. a1, length period_length - 1
  std::optional<Integer> central;   // a(k+1) when the period length is even
  std::size_t period_length = 0;
  Parity parity = Parity::odd;

  // a1 .. ak
  std::vector<Integer> half_word() const;
  std::vector<Integer> period() const;
  PeriodicCF periodic() const;
};

// sqrt(p/q) for coprime p > q > 0 with p/q not a rational square.
PalindromicExpansion sqrt_cf(const Integer& p, const Integer& q = 1,
                             std::size_t cap = kDefaultPeriodCap);

// (1 + sqrt(p/q)) / 2 under the same preconditions.
PalindromicExpansion half_sqrt_cf(const Integer& p, const Integer& q = 1,
                                  std::size_t cap = kDefaultPeriodCap);

// True when `candidate` is a cyclic rotation of `period`.
bool is_rotation(const std::vector<Integer>& period, const std::vector<Integer>& candidate);

}  // namespace nearcf
