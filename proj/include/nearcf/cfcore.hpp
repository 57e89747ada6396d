#pragma once

// Means of near continued fractions.
//
// For positive entries a0..a(k+1), the pair [a0..ak] and [a0..ak, a(k+1)]
// (real variant) or [a0..ak, a(k+1) - i] and [a0..ak, a(k+1) + i] (complex
// variant) has arithmetic, geometric, harmonic and cotangent means that are
// again continued fractions built from the same entries:
//
//   arithmetic  [a0..ak, C, ak..a1]
//   harmonic    [a0..ak, C, ak..a1, a0]
//   geometric   [a0; (a1..ak, C, ak..a1, 2a0) repeating]
//   cotangent   [(a0..ak, C, ak..a0) repeating]
//
// where the centre C is 2a(k+1) for the real variant and the pair
// a(k+1), a(k+1) for the complex variant.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nearcf/continuant.hpp"
#include "nearcf/exactnum.hpp"

namespace nearcf {

enum class MeanKind { arithmetic, geometric, harmonic, cotangent };
enum class Variant { real, complex };

std::string_view to_string(MeanKind kind);
std::string_view to_string(Variant variant);
std::optional<MeanKind> parse_mean_kind(std::string_view text);
std::optional<Variant> parse_variant(std::string_view text);

struct CFWord {
  std::vector<Rational> entries;

  bool positive() const { return all_positive(std::span<const Rational>(entries)); }
  Rational value() const { return cf_eval(entries); }
};

// Eventually periodic continued fraction [preperiod; (period) repeating].
struct PeriodicCF {
  std::vector<Rational> preperiod;
  std::vector<Rational> period;
  // True only when the period is known to be the shortest one.
  bool minimal = false;
};

// The near pair being averaged, as Gaussian values.
struct NearPair {
  GaussianRational first;
  GaussianRational second;
};

// entries = a0..a(k+1), so at least two are required and all must be > 0.
NearPair near_pair(std::span<const Rational> entries, Variant variant);

// kind must be arithmetic or harmonic.
CFWord mean_word(std::span<const Rational> entries, MeanKind kind, Variant variant);
// kind must be geometric or cotangent.
PeriodicCF mean_periodic(std::span<const Rational> entries, MeanKind kind, Variant variant);

// Exact value of a periodic continued fraction. The purely periodic tail y
// solves y = (K[w] y + K[w without last]) / (K[w without first] y +
// K[w without both ends]); the preperiod is then applied as a fractional
// linear map with continuant coefficients. Throws DomainError ("rational
// limit") when the tail is rational.
QuadraticSurd periodic_value(const PeriodicCF& pcf);

struct VerifyOptions {
  int precision_digits = 60;  // decimal digits fed to the numeric check
  int tolerance_digits = 30;  // numeric tolerance 10^-tolerance_digits
};

struct MeanCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  MeanKind kind{};
  Variant variant{};
  std::string mean_value;      // the continued fraction side
  std::string expected_value;  // the mean computed from the near pair
  std::vector<MeanCheck> checks;

  bool passed() const;
};

// Checks one mean identity. Arithmetic, harmonic and geometric are exact;
// cotangent is checked exactly through the cot-sum relation
// (x^2 - 1) / 2x = (uv - 1) / (u + v) and numerically as
// 2 arccot(x) = arccot(u) + arccot(v). Failures are reported, not thrown.
VerificationReport verify_mean(std::span<const Rational> entries, MeanKind kind, Variant variant,
                               const VerifyOptions& options = {});

std::string format_entries(std::span<const Rational> entries);
std::string format_entries(std::span<const Integer> entries);

}  // namespace nearcf
