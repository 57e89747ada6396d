#pragma once

// Text and json-lines renderings of every result type. JSON records share the
// shape {"op", "input", "result", "checks"} and carry integers as decimal
// strings so arbitrary precision survives any JSON parser.

#include <json.hpp>

#include <span>
#include <string>

#include "nearcf/cfcore.hpp"
#include "nearcf/numth.hpp"
#include "nearcf/surdexp.hpp"

namespace nearcf {

using Json = nlohmann::ordered_json;

Json make_record(std::string_view op, Json input, Json result, Json checks = Json::object());

Json strings(std::span<const Integer> values);
Json strings(std::span<const Rational> values);

Json to_json(const PalindromicExpansion& e, std::string_view op, const Rational& radicand);
Json to_json(const PellSolution& sol, std::string_view op);
Json to_json(const FactorOutcome& outcome);
Json to_json(const SumOfSquares& sos);
Json to_json(const MordellReport& report);

std::string to_text(const PalindromicExpansion& e, std::string_view op);
std::string to_text(const PellSolution& sol);
std::string to_text(const FactorOutcome& outcome);
std::string to_text(const SumOfSquares& sos);
std::string to_text(const MordellReport& report);

}  // namespace nearcf
