#include "nearcf/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nearcf/errors.hpp"

namespace nearcf {

namespace {

mpz_srcptr raw(const Integer& n) { return n.backend().data(); }

// Scaled integer R printed as R / 10^digits.
std::string format_scaled(const Integer& scaled, int digits) {
  const bool negative = scaled < 0;
  std::string body = to_string(negative ? Integer(-scaled) : scaled);
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  return negative ? "-" + body : body;
}

Integer pow10(int digits) {
  Integer out = 1;
  mpz_ui_pow_ui(out.backend().data(), 10, static_cast<unsigned long>(digits));
  return out;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 1u << 16;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= kLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (std::uint64_t q = std::uint64_t{p} * p; q <= kLimit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

}  // namespace

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of negative integer " + to_string(n));
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(raw(n)) != 0; }

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("division by zero");
  Integer q;
  mpz_fdiv_q(q.backend().data(), raw(a), raw(b));
  return q;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(num, den);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
  if (is_integer(r)) return numer(r).str();
  return numer(r).str() + "/" + denom(r).str();
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  Integer value{std::string(digits)};
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("signed denominator: '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string rational_decimal(const Rational& r, int digits) {
  if (digits < 0) throw DomainError("negative digit count");
  const Integer scale = pow10(digits);
  const Integer n = boost::multiprecision::abs(numer(r)) * scale;
  const Integer d = denom(r);
  // floor(|x| + 1/2) == floor((2n + d) / 2d)
  Integer rounded = floor_div(2 * n + d, 2 * d);
  if (r < 0) rounded = -rounded;
  return format_scaled(rounded, digits);
}

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm();
  if (n == 0) throw DomainError("inverse of zero Gaussian rational");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_ == 0 && o.im_ == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (im_ == 0 && o.im_ == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  const Rational mag = z.im() < 0 ? Rational(-z.im()) : z.im();
  std::string imag = mag == 1 ? "i" : to_string(mag) + "i";
  if (z.re() == 0) return (z.im() < 0 ? "-" : "") + imag;
  return to_string(z.re()) + (z.im() < 0 ? "-" : "+") + imag;
}

GaussianRational parse_gaussian(std::string_view input) {
  const std::string text = strip_spaces(input);
  if (text.empty()) throw std::invalid_argument("empty entry");
  if (text.back() != 'i') return parse_rational(text);

  const std::string body = text.substr(0, text.size() - 1);
  // The split sign is the last '+'/'-' that is not the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t pos = body.size(); pos-- > 1;) {
    if (body[pos] == '+' || body[pos] == '-') {
      split = pos;
      break;
    }
  }
  const auto imag_of = [&](const std::string& coeff) -> Rational {
    if (coeff.empty() || coeff == "+") return Rational(1);
    if (coeff == "-") return Rational(-1);
    return parse_rational(coeff);
  };
  if (split == std::string::npos) return {Rational(0), imag_of(body)};
  return {parse_rational(body.substr(0, split)), imag_of(body.substr(split))};
}

// ---------------------------------------------------------------------------
// Quadratic surds

SquareSplit split_square(const Integer& n) {
  if (n <= 0) throw DomainError("square split of nonpositive integer");
  Integer root = 1;
  Integer kept = 1;  // small primes with odd exponent
  Integer rest = n;  // part not yet trial-divided
  for (const std::uint32_t p : small_primes()) {
    const std::uint64_t cube = std::uint64_t{p} * p * p;
    if (mpz_cmp_ui(raw(rest), cube) < 0) break;
    if (!mpz_divisible_ui_p(raw(rest), p)) continue;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(raw(rest), p)) {
      mpz_divexact_ui(rest.backend().data(), raw(rest), p);
      ++exponent;
    }
    for (unsigned e = 0; e < exponent / 2; ++e) root *= p;
    if (exponent % 2 == 1) kept *= p;
  }
  // Every prime factor of rest now exceeds cbrt(rest), so rest is squarefree
  // unless it is the square of a prime.
  if (rest > 1 && is_perfect_square(rest)) {
    root *= isqrt(rest);
    rest = 1;
  }
  return {root, kept * rest};
}

QuadraticSurd::QuadraticSurd(const Integer& a, const Integer& b, const Integer& c,
                             const Integer& d) {
  if (c == 0) throw DomainError("surd with zero denominator");
  if (d <= 0 || is_perfect_square(d)) {
    throw DomainError("surd radicand must be positive and not a square: " + to_string(d));
  }
  const SquareSplit split = split_square(d);
  d_ = split.squarefree;
  assign(make_rational(a, c), make_rational(b * split.root, c));
}

QuadraticSurd::QuadraticSurd(Integer a, Integer b, Integer c, Integer d, Canonical)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

QuadraticSurd QuadraticSurd::from_rational(const Rational& r, const Integer& d) {
  return QuadraticSurd(numer(r), 0, denom(r), d);
}

void QuadraticSurd::assign(const Rational& x, const Rational& y) {
  const Integer dx = denom(x);
  const Integer dy = denom(y);
  c_ = boost::multiprecision::lcm(dx, dy);
  a_ = numer(x) * (c_ / dx);
  b_ = numer(y) * (c_ / dy);
  const Integer g = gcd(gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

Rational QuadraticSurd::coefficient_in_field(const QuadraticSurd& o) const {
  if (o.b_ == 0) return Rational(0);
  if (o.d_ == d_) return o.sqrt_coefficient();
  const Integer product = d_ * o.d_;
  if (!is_perfect_square(product)) {
    throw DomainError("surds from different quadratic fields: sqrt(" + to_string(d_) +
                      ") and sqrt(" + to_string(o.d_) + ")");
  }
  return o.sqrt_coefficient() * make_rational(isqrt(product), d_);
}

int QuadraticSurd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  return a_ * a_ > b_ * b_ * d_ ? sa : sb;
}

Rational QuadraticSurd::norm() const { return make_rational(a_ * a_ - b_ * b_ * d_, c_ * c_); }

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
  if (b_ == 0 && o.b_ != 0) d_ = o.d_;
  assign(rational_part() + o.rational_part(), sqrt_coefficient() + coefficient_in_field(o));
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) { return *this += -o; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
  if (b_ == 0 && o.b_ != 0) d_ = o.d_;
  const Rational x1 = rational_part();
  const Rational y1 = sqrt_coefficient();
  const Rational x2 = o.rational_part();
  const Rational y2 = coefficient_in_field(o);
  assign(x1 * x2 + y1 * y2 * Rational(d_), x1 * y2 + x2 * y1);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
  if (b_ == 0 && o.b_ != 0) d_ = o.d_;
  const Rational x2 = o.rational_part();
  const Rational y2 = coefficient_in_field(o);
  const Rational n = x2 * x2 - y2 * y2 * Rational(d_);
  if (n == 0) throw DomainError("division by zero surd");
  // s / t = s * conj(t) / norm(t)
  const Rational x1 = rational_part();
  const Rational y1 = sqrt_coefficient();
  assign((x1 * x2 - y1 * y2 * Rational(d_)) / n, (y1 * x2 - x1 * y2) / n);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator+=(const Rational& r) {
  assign(rational_part() + r, sqrt_coefficient());
  return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const Rational& r) {
  assign(rational_part() * r, sqrt_coefficient() * r);
  return *this;
}

bool operator==(const QuadraticSurd& s, const QuadraticSurd& t) { return (s - t).sign() == 0; }

std::strong_ordering operator<=>(const QuadraticSurd& s, const QuadraticSurd& t) {
  return (s - t).sign() <=> 0;
}

std::string to_string(const QuadraticSurd& s) {
  const bool negative = s.b() < 0;
  return "(" + to_string(s.a()) + (negative ? "-" : "+") +
         to_string(negative ? Integer(-s.b()) : s.b()) + "√" + to_string(s.d()) + ")/" +
         to_string(s.c());
}

std::string surd_decimal(const QuadraticSurd& s, int digits) {
  if (digits < 0) throw DomainError("negative digit count");
  if (s.is_rational()) return rational_decimal(s.rational_part(), digits);
  const bool negative = s.sign() < 0;
  const QuadraticSurd v = negative ? -s : s;
  // F = floor(2 * v * 10^digits). With r = floor(sqrt(b^2 M^2 d)) the
  // irrational term lies strictly between r and r + 1, so the floor of the
  // whole quotient is decided by the integer neighbour on the correct side.
  const Integer m = 2 * pow10(digits);
  const Integer r = isqrt(v.b() * v.b() * m * m * v.d());
  const Integer lower = v.b() > 0 ? Integer(v.a() * m + r) : Integer(v.a() * m - r - 1);
  const Integer twice = floor_div(lower, v.c());
  Integer rounded = floor_div(twice + 1, 2);
  if (negative) rounded = -rounded;
  return format_scaled(rounded, digits);
}

QuadraticSurd quadratic_root(const Integer& A, const Integer& B, const Integer& C,
                             RootBranch branch) {
  if (A == 0) throw DomainError("quadratic_root: leading coefficient is zero");
  const Integer disc = B * B - 4 * A * C;
  if (disc <= 0 || is_perfect_square(disc)) {
    throw DomainError("quadratic_root: rational or complex root (discriminant " +
                      to_string(disc) + ")");
  }
  // Roots (-B +- sqrt(disc)) / 2A; with a positive denominator the larger
  // root carries +sqrt.
  const bool positive_lead = A > 0;
  const Integer a = positive_lead ? Integer(-B) : B;
  const Integer c = positive_lead ? Integer(2 * A) : Integer(-2 * A);
  const Integer b = branch == RootBranch::larger ? 1 : -1;
  return QuadraticSurd(a, b, c, disc);
}

}  // namespace nearcf
