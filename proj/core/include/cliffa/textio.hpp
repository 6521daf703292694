#pragma once

#include <string>
#include <string_view>

#include "cliffa/multivector.hpp"

namespace cliffa {

// "1" for the scalar blade, "e13" for e1e3, and "e2_11" once any index
// needs two digits.
std::string blade_name(Blade b);
Blade parse_blade(std::string_view s);

// Terms in ascending blade order, e.g. "2.5*e12 + 1*e3 - 1/2*1". The zero
// multivector prints as "0".
template <class S>
std::string to_string(const Multivector<S>& a);

// Inverse of to_string. Bit-exact for rational scalars; doubles use
// shortest round-trip formatting so they round-trip as well.
template <class S>
Multivector<S> parse_multivector(int dim, std::string_view text);

Rational parse_rational(std::string_view s);
double parse_double(std::string_view s);

}  // namespace cliffa
