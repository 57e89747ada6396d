#include "nearcf/cfcore.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "nearcf/errors.hpp"

namespace nearcf {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<200>>;
constexpr int kMaxPrecisionDigits = 190;

// A periodic continued fraction with rational entries may still converge to a
// rational number; verification needs that case too.
using ExactValue = std::variant<Rational, QuadraticSurd>;

void require_mean_input(std::span<const Rational> entries) {
  if (entries.size() < 2) {
    throw DomainError("mean needs entries a0..a(k+1) with k >= 0 (at least two entries), got " +
                      std::to_string(entries.size()));
  }
  if (!all_positive(entries)) throw DomainError("mean entries must be positive");
}

// a0..ak, centre, ak..a(from_index)
std::vector<Rational> symmetric_word(std::span<const Rational> entries, Variant variant,
                                     std::size_t down_to) {
  const std::size_t k1 = entries.size() - 1;
  std::vector<Rational> word(entries.begin(), entries.end() - 1);
  if (variant == Variant::real) {
    word.push_back(2 * entries[k1]);
  } else {
    word.push_back(entries[k1]);
    word.push_back(entries[k1]);
  }
  for (std::size_t j = k1; j-- > down_to;) word.push_back(entries[j]);
  return word;
}

Rational integer_scale(std::initializer_list<Rational> values) {
  Integer scale = 1;
  for (const Rational& v : values) scale = boost::multiprecision::lcm(scale, denom(v));
  return Rational(scale);
}

ExactValue periodic_exact(const PeriodicCF& pcf) {
  const std::span<const Rational> period(pcf.period);
  if (period.empty()) throw DomainError("periodic continued fraction needs a nonempty period");
  if (!all_positive(period)) throw DomainError("period entries must be positive");

  // K[w-] y^2 + (K[w--] - K[w]) y - K[w without last] = 0
  const Rational k_all = continuant(period);
  const Rational k_no_last = continuant_trimmed(period, 0, 1);
  const Rational k_no_first = continuant_trimmed(period, 1, 0);
  const Rational k_inner = continuant_trimmed(period, 1, 1);
  const Rational scale = integer_scale({k_all, k_no_last, k_no_first, k_inner});
  const Integer qa = numer(k_no_first * scale);
  const Integer qb = numer((k_inner - k_all) * scale);
  const Integer qc = numer(-k_no_last * scale);

  const std::span<const Rational> pre(pcf.preperiod);
  const Rational p_all = continuant(pre);
  const Rational p_no_last = pre.empty() ? Rational(0) : continuant_trimmed(pre, 0, 1);
  const Rational p_no_first = pre.empty() ? Rational(0) : continuant_trimmed(pre, 1, 0);
  const Rational p_inner = pre.empty() ? Rational(1) : continuant_trimmed(pre, 1, 1);
  // Empty preperiod: x = (1*y + 0) / (0*y + 1).

  const Integer disc = qb * qb - 4 * qa * qc;
  if (is_perfect_square(disc)) {
    // qa > 0 because the period is positive, so the larger root takes +sqrt.
    const Rational y = make_rational(-qb + isqrt(disc), 2 * qa);
    return Rational((p_all * y + p_no_last) / (p_no_first * y + p_inner));
  }
  const QuadraticSurd y = quadratic_root(qa, qb, qc, RootBranch::larger);
  if (pre.empty()) return y;
  return (y * p_all + p_no_last) / (y * p_no_first + p_inner);
}

std::string exact_to_string(const ExactValue& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

std::string exact_decimal(const ExactValue& v, int digits) {
  return std::visit(
      [digits](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
          return rational_decimal(x, digits);
        } else {
          return surd_decimal(x, digits);
        }
      },
      v);
}

int exact_sign(const ExactValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->sign();
  return std::get<QuadraticSurd>(v).sign();
}

// (x^2 - 1) / 2x, or nullopt when it is not rational.
std::optional<Rational> cot_double_angle_ratio(const ExactValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return Rational((*r * *r - 1) / (2 * *r));
  const QuadraticSurd& x = std::get<QuadraticSurd>(v);
  const QuadraticSurd ratio = (x * x + Rational(-1)) / (x * Rational(2));
  if (!ratio.is_rational()) return std::nullopt;
  return ratio.rational_part();
}

Real to_real(const Rational& r, int digits) { return Real(rational_decimal(r, digits)); }

// arccot(u) + arccot(v) for the near pair. Real pairs use arctan(1/t); a
// conjugate pair sums to 2 Re arctan(1/u) = atan2(2X, 1 - X^2 - Y^2) with
// X + iY = 1/u.
Real arccot_pair_sum(const NearPair& pair, Variant variant, int digits) {
  if (variant == Variant::real) {
    return boost::multiprecision::atan(1 / to_real(pair.first.re(), digits)) +
           boost::multiprecision::atan(1 / to_real(pair.second.re(), digits));
  }
  const GaussianRational w = pair.first.inverse();
  const Real x = to_real(w.re(), digits);
  const Real y = to_real(w.im(), digits);
  return boost::multiprecision::atan2(2 * x, 1 - x * x - y * y);
}

}  // namespace

std::string_view to_string(MeanKind kind) {
  switch (kind) {
    case MeanKind::arithmetic: return "arithmetic";
    case MeanKind::geometric: return "geometric";
    case MeanKind::harmonic: return "harmonic";
    case MeanKind::cotangent: return "cotangent";
  }
  return "?";
}

std::string_view to_string(Variant variant) {
  return variant == Variant::real ? "real" : "complex";
}

std::optional<MeanKind> parse_mean_kind(std::string_view text) {
  for (MeanKind kind : {MeanKind::arithmetic, MeanKind::geometric, MeanKind::harmonic,
                        MeanKind::cotangent}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "real") return Variant::real;
  if (text == "complex") return Variant::complex;
  return std::nullopt;
}

NearPair near_pair(std::span<const Rational> entries, Variant variant) {
  require_mean_input(entries);
  if (variant == Variant::real) {
    return {GaussianRational(cf_eval(entries.first(entries.size() - 1))),
            GaussianRational(cf_eval(entries))};
  }
  EntrySeq word = to_entry_seq(entries);
  word.back() -= GaussianRational::i();
  const GaussianRational minus = cf_eval(word);
  word.back() += 2 * GaussianRational::i();
  return {minus, cf_eval(word)};
}

CFWord mean_word(std::span<const Rational> entries, MeanKind kind, Variant variant) {
  require_mean_input(entries);
  switch (kind) {
    case MeanKind::arithmetic: return {symmetric_word(entries, variant, 1)};
    case MeanKind::harmonic: return {symmetric_word(entries, variant, 0)};
    default:
      throw std::invalid_argument("mean_word: " + std::string(to_string(kind)) +
                                  " mean is periodic, use mean_periodic");
  }
}

PeriodicCF mean_periodic(std::span<const Rational> entries, MeanKind kind, Variant variant) {
  require_mean_input(entries);
  PeriodicCF out;
  switch (kind) {
    case MeanKind::geometric: {
      out.preperiod = {entries.front()};
      std::vector<Rational> word = symmetric_word(entries, variant, 1);
      out.period.assign(word.begin() + 1, word.end());
      out.period.push_back(2 * entries.front());
      break;
    }
    case MeanKind::cotangent:
      out.period = symmetric_word(entries, variant, 0);
      break;
    default:
      throw std::invalid_argument("mean_periodic: " + std::string(to_string(kind)) +
                                  " mean is a finite word, use mean_word");
  }
  return out;
}

QuadraticSurd periodic_value(const PeriodicCF& pcf) {
  ExactValue v = periodic_exact(pcf);
  if (auto* r = std::get_if<Rational>(&v)) {
    throw DomainError("periodic continued fraction has a rational limit " + to_string(*r));
  }
  return std::get<QuadraticSurd>(std::move(v));
}

bool VerificationReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const MeanCheck& c) { return c.passed; });
}

VerificationReport verify_mean(std::span<const Rational> entries, MeanKind kind, Variant variant,
                               const VerifyOptions& options) {
  if (options.precision_digits < 1 || options.precision_digits > kMaxPrecisionDigits) {
    throw DomainError("precision digits must be in [1, " + std::to_string(kMaxPrecisionDigits) +
                      "]");
  }
  if (options.tolerance_digits < 1 || options.tolerance_digits >= options.precision_digits) {
    throw DomainError("tolerance digits must be in [1, precision digits)");
  }
  const NearPair pair = near_pair(entries, variant);
  VerificationReport report{kind, variant, {}, {}, {}};

  switch (kind) {
    case MeanKind::arithmetic:
    case MeanKind::harmonic: {
      const CFWord word = mean_word(entries, kind, variant);
      const Rational value = word.value();
      const GaussianRational expected =
          kind == MeanKind::arithmetic
              ? (pair.first + pair.second) / 2
              : GaussianRational(2) / (pair.first.inverse() + pair.second.inverse());
      report.mean_value = to_string(value);
      report.expected_value = to_string(expected);
      report.checks.push_back({"word_positive", word.positive(), format_entries(word.entries)});
      report.checks.push_back({"value_equals_mean", GaussianRational(value) == expected,
                               report.mean_value + " vs " + report.expected_value});
      break;
    }
    case MeanKind::geometric: {
      const ExactValue x = periodic_exact(mean_periodic(entries, kind, variant));
      const GaussianRational product = pair.first * pair.second;
      report.mean_value = exact_to_string(x);
      report.expected_value = "sqrt(" + to_string(product) + ")";
      report.checks.push_back({"root_positive", exact_sign(x) > 0, report.mean_value});
      bool squares_match = false;
      if (product.is_real()) {
        if (const auto* r = std::get_if<Rational>(&x)) {
          squares_match = *r * *r == product.re();
        } else {
          const QuadraticSurd& s = std::get<QuadraticSurd>(x);
          squares_match = s * s == product.re();
        }
      }
      report.checks.push_back({"square_equals_product", squares_match,
                               "x^2 vs " + to_string(product)});
      break;
    }
    case MeanKind::cotangent: {
      const ExactValue x = periodic_exact(mean_periodic(entries, kind, variant));
      report.mean_value = exact_to_string(x);
      report.expected_value = "cot((arccot(" + to_string(pair.first) + ") + arccot(" +
                              to_string(pair.second) + "))/2)";
      report.checks.push_back({"root_positive", exact_sign(x) > 0, report.mean_value});

      const GaussianRational rhs =
          (pair.first * pair.second - 1) / (pair.first + pair.second);
      const std::optional<Rational> lhs = cot_double_angle_ratio(x);
      report.checks.push_back({"cot_sum_relation", lhs && rhs.is_real() && *lhs == rhs.re(),
                               (lhs ? to_string(*lhs) : std::string("irrational")) + " vs " +
                                   to_string(rhs)});

      const int digits = options.precision_digits;
      const Real x_real(exact_decimal(x, digits));
      const Real lhs_angle = 2 * boost::multiprecision::atan(1 / x_real);
      const Real rhs_angle = arccot_pair_sum(pair, variant, digits);
      const Real diff = boost::multiprecision::abs(lhs_angle - rhs_angle);
      const Real tolerance = boost::multiprecision::pow(Real(10), -options.tolerance_digits);
      report.checks.push_back(
          {"arccot_identity", diff < tolerance,
           "|2 arccot(x) - arccot(u) - arccot(v)| = " + diff.str(6, std::ios::scientific)});
      break;
    }
  }
  return report;
}

namespace {

template <class T>
std::string join_entries(std::span<const T> entries) {
  std::string out = "[";
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (j > 0) out += ",";
    out += to_string(entries[j]);
  }
  return out + "]";
}

}  // namespace

std::string format_entries(std::span<const Rational> entries) { return join_entries(entries); }
std::string format_entries(std::span<const Integer> entries) { return join_entries(entries); }

}  // namespace nearcf
