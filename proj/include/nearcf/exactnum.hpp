#pragma once

// Exact number kinds: arbitrary-precision integers and rationals (GMP via
// Boost.Multiprecision), Gaussian rationals, and elements of a real
// quadratic field Q(sqrt d) in the canonical form (a + b*sqrt(d))/c.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace nearcf {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Floor of sqrt(n). Throws DomainError for n < 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

// Division rounding toward negative infinity. b != 0.
Integer floor_div(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);

// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);
inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rational& r) { return denom(r) == 1; }

std::string to_string(const Integer& n);
// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

// Accepts "[-]digits" and "[-]digits/digits". Throws std::invalid_argument.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

// Round-half-away-from-zero decimal with exactly `digits` fractional digits.
std::string rational_decimal(const Rational& r, int digits);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Integer re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_real() const { return im_ == 0; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_gaussian_integer() const { return is_integer(re_) && is_integer(im_); }

  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational conj() const { return {re_, -im_}; }
  // Throws DomainError for zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

// "3/2+1/2i", "-i", "5".
std::string to_string(const GaussianRational& z);
// Accepts a rational, optionally followed or replaced by a "+b i"/"-b i"
// imaginary part, e.g. "1-i", "3/2+1/2i", "2i", "1+2 i".
GaussianRational parse_gaussian(std::string_view text);

// Splits n > 0 into f^2 * r with r squarefree. Trial division covers every
// prime up to min(cbrt(n), 2^16); a remaining cofactor is absorbed when it is
// itself a perfect square, so r is exactly squarefree for n < 2^48 and for any
// n whose repeated prime factors are below 2^16.
struct SquareSplit {
  Integer root;        // f
  Integer squarefree;  // r
};
SquareSplit split_square(const Integer& n);

// An element (a + b*sqrt(d))/c of Q(sqrt d): c > 0, d > 1 squarefree,
// gcd(a, b, c) = 1. b == 0 marks a rational element that still belongs to the
// field, which keeps the field closed under arithmetic.
class QuadraticSurd {
 public:
  // d must be positive and not a perfect square; any square factor of d is
  // moved into b.
  QuadraticSurd(const Integer& a, const Integer& b, const Integer& c, const Integer& d);
  static QuadraticSurd from_rational(const Rational& r, const Integer& d);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  Rational rational_part() const { return make_rational(a_, c_); }
  Rational sqrt_coefficient() const { return make_rational(b_, c_); }

  int sign() const;
  QuadraticSurd conjugate() const { return {a_, -b_, c_, d_, Canonical{}}; }
  // Field norm a^2 - b^2 d over c^2.
  Rational norm() const;

  QuadraticSurd operator-() const { return {-a_, -b_, c_, d_, Canonical{}}; }
  QuadraticSurd& operator+=(const QuadraticSurd& o);
  QuadraticSurd& operator-=(const QuadraticSurd& o);
  QuadraticSurd& operator*=(const QuadraticSurd& o);
  QuadraticSurd& operator/=(const QuadraticSurd& o);
  QuadraticSurd& operator+=(const Rational& r);
  QuadraticSurd& operator*=(const Rational& r);

  friend QuadraticSurd operator+(QuadraticSurd s, const QuadraticSurd& t) { return s += t; }
  friend QuadraticSurd operator-(QuadraticSurd s, const QuadraticSurd& t) { return s -= t; }
  friend QuadraticSurd operator*(QuadraticSurd s, const QuadraticSurd& t) { return s *= t; }
  friend QuadraticSurd operator/(QuadraticSurd s, const QuadraticSurd& t) { return s /= t; }
  friend QuadraticSurd operator+(QuadraticSurd s, const Rational& r) { return s += r; }
  friend QuadraticSurd operator*(QuadraticSurd s, const Rational& r) { return s *= r; }

  // Exact comparison; both sides must lie in the same field.
  friend bool operator==(const QuadraticSurd& s, const QuadraticSurd& t);
  friend std::strong_ordering operator<=>(const QuadraticSurd& s, const QuadraticSurd& t);
  friend bool operator==(const QuadraticSurd& s, const Rational& r) {
    return s.b_ == 0 && s.rational_part() == r;
  }

 private:
  struct Canonical {};
  QuadraticSurd(Integer a, Integer b, Integer c, Integer d, Canonical);
  // Rebuilds from x + y*sqrt(d_) with rational x, y.
  void assign(const Rational& x, const Rational& y);
  // Coefficient of sqrt(d_) for o expressed in this field; throws DomainError
  // when o lies in a different quadratic field.
  Rational coefficient_in_field(const QuadraticSurd& o) const;

  Integer a_, b_, c_, d_;
};

// "(a+b√d)/c".
std::string to_string(const QuadraticSurd& s);

// Round-half-away-from-zero decimal with exactly `digits` fractional digits.
std::string surd_decimal(const QuadraticSurd& s, int digits);

enum class RootBranch { larger, smaller };

// Real root of A x^2 + B x + C = 0. The discriminant must be positive and not
// a perfect square; otherwise the root is rational or complex and DomainError
// is thrown.
QuadraticSurd quadratic_root(const Integer& A, const Integer& B, const Integer& C,
                             RootBranch branch);

}  // namespace nearcf
