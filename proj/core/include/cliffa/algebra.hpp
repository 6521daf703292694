#pragma once

#include <utility>
#include <vector>

#include "cliffa/multivector.hpp"

namespace cliffa {

// Symmetric bilinear inner product of the grade-1 parts, sum_j x_j y_j.
template <class S>
S inner(const Multivector<S>& x, const Multivector<S>& y) {
  x.require_same(y);
  S s(0);
  for (const auto& [b, c] : x.terms())
    if (blade_grade(b) == 1) s += c * y.coef(b);
  return s;
}

// x^{-1} = x / (x x) for a non-null vector; for real x this is -x / |x|^2.
template <class S>
Multivector<S> vector_inverse(const Multivector<S>& x) {
  if (!x.is_vector()) throw InvalidArgument("vector_inverse: input is not grade-1");
  S q = -inner(x, x);  // x*x = -<x,x>
  if (is_zero(q)) throw SingularPoint("vector_inverse: zero (or null) vector");
  return x / q;
}

// Inverse of an element g of the Clifford group (a product of invertible
// vectors, possibly plus scalars such as cx+d for Vahlen matrices). Uses
// g * conj(g), which is a scalar for such elements.
template <class S>
Multivector<S> versor_inverse(const Multivector<S>& g, double scalar_tol = 1e-10) {
  Multivector<S> gc = g.conjugation();
  Multivector<S> q = g * gc;
  S s = q.scalar_part();
  Multivector<S> rest = q - Multivector<S>::scalar(g.dim(), s);
  if constexpr (ScalarTraits<S>::field == ScalarField::RealExact) {
    if (!rest.is_zero()) throw InvalidArgument("versor_inverse: g*conj(g) is not a scalar");
  } else {
    if (rest.max_abs() > scalar_tol * std::max(1.0, magnitude(s)))
      throw InvalidArgument("versor_inverse: g*conj(g) is not a scalar");
  }
  if (is_zero(s)) throw SingularPoint("versor_inverse: element is not invertible");
  return gc / s;
}

// The vector sum_j x_j e_j built from real coordinates.
template <class S>
Multivector<S> make_vector(int dim, const std::vector<S>& coords) {
  return Multivector<S>::vector(dim, coords);
}

// E_+ = (1 + e1e2e3)/2 and E_- = (1 - e1e2e3)/2 in Cl_3.
std::pair<MultivectorQ, MultivectorQ> quaternion_projectors(int n);

// theta: Cl_{n-1} -> Cl_n^+, e_j -> e_n^{-1} e_j, extended multiplicatively.
template <class S>
Multivector<S> unital_isomorphism(const Multivector<S>& a) {
  const int m = a.dim();
  const int n = m + 1;
  check_dim(n);
  Multivector<S> en_inv = -Multivector<S>::basis(n, n);
  Multivector<S> out(n);
  for (const auto& [b, c] : a.terms()) {
    Multivector<S> prod = Multivector<S>::one(n);
    for (int j = 1; j <= m; ++j)
      if (b & generator_blade(j)) prod = prod * (en_inv * Multivector<S>::basis(n, j));
    out += prod * c;
  }
  return out;
}

// Multivector with every coefficient replaced by its complex conjugate.
MultivectorC complex_conjugate(const MultivectorC& a);

}  // namespace cliffa
