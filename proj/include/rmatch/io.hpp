#pragma once

#include "rmatch/generators.hpp"
#include "rmatch/graph.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace rmatch {

using Json = nlohmann::json;
using Instance = std::variant<WeightedGraph, ExplicitInstance>;

// Exact weight encoding: {"num":..,"den":..} plus an optional
// {"sqrt2_coeff":{"num":..,"den":..}} term. Plain JSON numbers are accepted
// on input and converted exactly (doubles are dyadic). Integers that do not
// fit in 64 bits are carried as decimal strings.
Json quad_to_json(const Quad& q);
Quad quad_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json instance_to_json(const WeightedGraph& g);
Json instance_to_json(const ExplicitInstance& inst);
Instance parse_instance(const Json& j);

// "0.3" -> 3/10 (also accepts "3/10" and plain integers).
Rational parse_decimal_rational(const std::string& text);

}  // namespace rmatch
