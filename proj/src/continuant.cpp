#include "nearcf/continuant.hpp"

namespace nearcf {

std::vector<Rational> to_rationals(std::span<const Integer> entries) {
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (const Integer& entry : entries) out.emplace_back(entry);
  return out;
}

}  // namespace nearcf
