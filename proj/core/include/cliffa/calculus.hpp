#pragma once

#include "cliffa/polynomial.hpp"

namespace cliffa {

namespace detail {

template <class S>
void require_kind(const Polynomial<S>& f, VariableKind k, const char* op) {
  if (f.kind() != k)
    throw InvalidArgument(std::string(op) + (k == VariableKind::Vector ? ": needs vector variables" : ": needs unital variables"));
}

// sum_slot sign_slot * g_slot * d_slot f, with g on the left or right.
template <class S>
Polynomial<S> first_order(const Polynomial<S>& f, bool left, int sign_generators) {
  using MV = Multivector<S>;
  Polynomial<S> out(f.dim(), f.kind());
  for (int slot = 0; slot < f.nvars(); ++slot) {
    int j = f.generator_of(slot);
    MV g = j == 0 ? MV::one(f.dim()) : MV::basis(f.dim(), j) * S(sign_generators);
    Polynomial<S> d = f.partial(slot);
    out += left ? g * d : d * g;
  }
  return out;
}

}  // namespace detail

// D f = sum_j e_j df/dx_j
template <class S>
Polynomial<S> dirac_left(const Polynomial<S>& f) {
  detail::require_kind(f, VariableKind::Vector, "dirac_left");
  return detail::first_order(f, true, 1);
}

// f D = sum_j df/dx_j e_j
template <class S>
Polynomial<S> dirac_right(const Polynomial<S>& f) {
  detail::require_kind(f, VariableKind::Vector, "dirac_right");
  return detail::first_order(f, false, 1);
}

// D' f = df/dx0 + sum_{j=1}^{m} e_j df/dx_j
template <class S>
Polynomial<S> dirac_unital(const Polynomial<S>& f) {
  detail::require_kind(f, VariableKind::Unital, "dirac_unital");
  return detail::first_order(f, true, 1);
}

// conj(D') f = df/dx0 - sum_j e_j df/dx_j
template <class S>
Polynomial<S> dirac_unital_conjugate(const Polynomial<S>& f) {
  detail::require_kind(f, VariableKind::Unital, "dirac_unital_conjugate");
  return detail::first_order(f, true, -1);
}

template <class S>
Polynomial<S> dirac_power(Polynomial<S> f, int k) {
  for (int i = 0; i < k; ++i) f = dirac_left(f);
  return f;
}

template <class S>
Polynomial<S> laplacian(const Polynomial<S>& f) {
  Polynomial<S> out(f.dim(), f.kind());
  for (int slot = 0; slot < f.nvars(); ++slot) out += f.partial(slot).partial(slot);
  return out;
}

// E f = sum_j x_j df/dx_j, i.e. degree times each homogeneous part.
template <class S>
Polynomial<S> euler(const Polynomial<S>& f) {
  Polynomial<S> out(f.dim(), f.kind());
  for (const auto& [e, c] : f.terms()) {
    int d = total_degree(e);
    if (d) out.add_term(e, c * S(d));
  }
  return out;
}

// Lambda f = sum_{i<k} e_i e_k (x_i d_k - x_k d_i) f
template <class S>
Polynomial<S> angular(const Polynomial<S>& f) {
  detail::require_kind(f, VariableKind::Vector, "angular");
  using MV = Multivector<S>;
  const int n = f.dim();
  Polynomial<S> out(n);
  std::vector<Polynomial<S>> d(n), xs(n);
  for (int i = 0; i < n; ++i) {
    d[i] = f.partial(i);
    xs[i] = Polynomial<S>::variable(n, i);
  }
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      MV eik = MV::basis(n, i + 1) * MV::basis(n, k + 1);
      out += eik * (xs[i] * d[k] - xs[k] * d[i]);
    }
  return out;
}

// Multiplication by the vector variable x from the left.
template <class S>
Polynomial<S> times_x(const Polynomial<S>& f) {
  return Polynomial<S>::identity_vector(f.dim(), f.kind()) * f;
}

// x^j as a polynomial (vector variables).
template <class S>
Polynomial<S> x_power(int dim, int j) {
  return Polynomial<S>::identity_vector(dim).pow(j);
}

}  // namespace cliffa
