#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cliffa {

using Rational = mpq_class;
using Complex = std::complex<double>;

enum class ScalarField { RealExact, RealFloat, ComplexFloat };

// Per-scalar-type hooks used by the generic containers.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarField field = ScalarField::RealExact;
  static bool is_zero(const Rational& s) { return sgn(s) == 0; }
  static double magnitude(const Rational& s) { return std::abs(s.get_d()); }
  static Rational from_int(long v) { return Rational(v); }
};

template <>
struct ScalarTraits<double> {
  static constexpr ScalarField field = ScalarField::RealFloat;
  static bool is_zero(double s) { return s == 0.0; }
  static double magnitude(double s) { return std::abs(s); }
  static double from_int(long v) { return static_cast<double>(v); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr ScalarField field = ScalarField::ComplexFloat;
  static bool is_zero(const Complex& s) { return s == Complex(0.0, 0.0); }
  static double magnitude(const Complex& s) { return std::abs(s); }
  static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
};

template <class S>
bool is_zero(const S& s) {
  return ScalarTraits<S>::is_zero(s);
}

template <class S>
double magnitude(const S& s) {
  return ScalarTraits<S>::magnitude(s);
}

// Explicit conversions between scalar fields. Exact -> float is allowed,
// float -> exact is not (there is no implicit rounding back to rationals).
inline double to_double(const Rational& s) { return s.get_d(); }
inline double to_double(double s) { return s; }

template <class To>
To convert_scalar(const Rational& s) {
  if constexpr (std::is_same_v<To, Rational>) {
    return s;
  } else {
    return To(s.get_d());
  }
}
template <class To>
To convert_scalar(double s) {
  static_assert(!std::is_same_v<To, Rational>, "float to exact conversion is not supported");
  return To(s);
}
template <class To>
To convert_scalar(const Complex& s) {
  static_assert(std::is_same_v<To, Complex>, "complex values only convert to complex");
  return s;
}

// Round-trip text for scalars: rationals as p/q, doubles in shortest
// round-trip form, complex numbers as (re,im).
std::string format_scalar(const Rational& s);
std::string format_scalar(double s);
std::string format_scalar(const Complex& s);

}  // namespace cliffa
