#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "cliffa/multivector.hpp"

namespace cliffa {

template <class V>
using FieldFn = std::function<V(const std::vector<double>&)>;

// Central difference of f along coordinate `slot`; order 2 or 4.
template <class V>
V partial_fd(const FieldFn<V>& f, const std::vector<double>& x, int slot, double h, int order = 2) {
  auto at = [&](double t) {
    std::vector<double> y = x;
    y[slot] += t;
    return f(y);
  };
  if (order == 4) {
    V d = (at(h) - at(-h)) * 8.0 - (at(2 * h) - at(-2 * h));
    return d * (1.0 / (12 * h));
  }
  return (at(h) - at(-h)) * (1.0 / (2 * h));
}

template <class V>
V generator_as(int dim, int j) {
  return V::basis(dim, j);
}

// sum_j e_j df/dx_j (left) or sum_j df/dx_j e_j (right) by central differences.
template <class V>
V dirac_fd(const FieldFn<V>& f, const std::vector<double>& x, double h, int order = 2, bool left = true) {
  V out;
  bool first = true;
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    V d = partial_fd(f, x, j, h, order);
    V e = generator_as<V>(d.dim(), j + 1);
    V term = left ? e * d : d * e;
    if (first) {
      out = term;
      first = false;
    } else {
      out += term;
    }
  }
  return out;
}

// D^k f by nesting difference quotients. Use a larger step and order 4 for
// k > 1: the round-off of nested quotients grows like eps / h^k.
template <class V>
V dirac_power_fd(const FieldFn<V>& f, const std::vector<double>& x, int k, double h, int order = 4) {
  if (k == 0) return f(x);
  FieldFn<V> inner = [f, k, h, order](const std::vector<double>& y) { return dirac_power_fd<V>(f, y, k - 1, h, order); };
  return dirac_fd<V>(inner, x, h, order);
}

// Lambda f = sum_{i<k} e_i e_k (x_i d_k - x_k d_i) f, where each rotation
// field derivative is taken along the exact rotation in the (i,k) plane, so
// points stay on the sphere through x.
template <class V>
V angular_fd(const FieldFn<V>& f, const std::vector<double>& x, double h) {
  const int m = static_cast<int>(x.size());
  V out;
  bool first = true;
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k) {
      auto rot = [&](double t) {
        std::vector<double> y = x;
        y[i] = x[i] * std::cos(t) - x[k] * std::sin(t);
        y[k] = x[i] * std::sin(t) + x[k] * std::cos(t);
        return f(y);
      };
      V d = (rot(h) - rot(-h)) * (1.0 / (2 * h));
      V term = generator_as<V>(d.dim(), i + 1) * generator_as<V>(d.dim(), k + 1) * d;
      if (first) {
        out = term;
        first = false;
      } else {
        out += term;
      }
    }
  return out;
}

// Spherical Dirac operator D_s = x (Lambda_n + n/2) on S^n in R^{n+1}.
template <class V>
V spherical_dirac_fd(const FieldFn<V>& f, const std::vector<double>& x, double h) {
  const int n = static_cast<int>(x.size()) - 1;
  V fx = f(x);
  V inner = angular_fd(f, x, h) + fx * (0.5 * n);
  std::vector<typename V::Scalar> xc(x.begin(), x.end());
  return V::vector(fx.dim(), xc) * inner;
}

}  // namespace cliffa
