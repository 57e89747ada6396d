#pragma once

// Euler's continuant polynomials evaluated over exact entries.
//
//   K[] = 1,  K[a0] = a0,  K[a0..an] = an * K[a0..a(n-1)] + K[a0..a(n-2)]
//
// and finite continued fractions [a0; a1, ..., an] = K[a0..an] / K[a1..an].
// Entry types: Integer, Rational or GaussianRational.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "nearcf/errors.hpp"
#include "nearcf/exactnum.hpp"

namespace nearcf {

using EntrySeq = std::vector<GaussianRational>;

template <class T>
T continuant(std::span<const T> entries) {
  T before(0);  // K over a window of length -1
  T current(1);
  for (const T& entry : entries) {
    T next = entry * current + before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

template <class T>
T continuant(const std::vector<T>& entries) {
  return continuant(std::span<const T>(entries));
}

// K over entries with `front` items removed from the start and `back` from the
// end. Removing exactly one more item than exists yields the length -1 window,
// whose continuant is 0.
template <class T>
T continuant_trimmed(std::span<const T> entries, std::size_t front, std::size_t back) {
  const std::size_t removed = front + back;
  if (removed == entries.size() + 1) return T(0);
  if (removed > entries.size() + 1) throw std::out_of_range("continuant window below length -1");
  return continuant(entries.subspan(front, entries.size() - removed));
}

// Value of the finite continued fraction [a0; a1, ..., an]. Throws DomainError
// when K[a1..an] vanishes, which needs nonpositive or complex entries.
template <class T>
T cf_eval(std::span<const T> entries) {
  if (entries.empty()) throw DomainError("cf_eval: empty continued fraction");
  const T den = continuant(entries.subspan(1));
  if (den == T(0)) throw DomainError("cf_eval: divergent finite CF (zero denominator continuant)");
  return continuant(entries) / den;
}

template <class T>
T cf_eval(const std::vector<T>& entries) {
  return cf_eval(std::span<const T>(entries));
}

inline bool is_positive(const Rational& r) { return r > 0; }
inline bool is_positive(const Integer& n) { return n > 0; }
inline bool is_positive(const GaussianRational& z) { return z.is_real() && z.re() > 0; }

// The convergence hypothesis of the mean identities: every entry real and > 0.
template <class T>
bool all_positive(std::span<const T> entries) {
  for (const T& entry : entries) {
    if (!is_positive(entry)) return false;
  }
  return true;
}

template <class From>
EntrySeq to_entry_seq(std::span<const From> entries) {
  EntrySeq out;
  out.reserve(entries.size());
  for (const From& entry : entries) out.emplace_back(entry);
  return out;
}

std::vector<Rational> to_rationals(std::span<const Integer> entries);

}  // namespace nearcf
