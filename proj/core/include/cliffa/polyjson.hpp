#pragma once

#include <string>
#include <string_view>

#include "cliffa/polynomial.hpp"

namespace cliffa {

// Exact polynomial interchange format:
//
//   {"schema": "poly-v1", "dim": 3, "kind": "vector",
//    "terms": [{"exponent": [1, 0, 2], "coefficient": {"e12": "1/2", "1": "-3"}}]}
//
// Coefficients are rational strings keyed by blade name, so a round trip
// is exact. Terms are written in graded-lex order; parsing accepts any
// order and sums repeated exponents.
std::string polynomial_to_json(const PolynomialQ& p);
PolynomialQ polynomial_from_json(std::string_view text);

}  // namespace cliffa
