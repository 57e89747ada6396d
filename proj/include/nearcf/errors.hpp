#pragma once

#include <stdexcept>
#include <string>

namespace nearcf {

// Input outside an operation's domain (negative radicand, square n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured resource limit was hit, e.g. the period cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical fact the library relies on did not hold for some input.
// Carries a one-line diagnostic with the offending input and expansion.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nearcf
