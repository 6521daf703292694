#pragma once

// Independent oracles shared by the unit tests. Nothing here calls into the
// library's own product, differentiation or kernel code.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "cliffa/kernels.hpp"
#include "cliffa/multivector.hpp"
#include "cliffa/polynomial.hpp"

namespace testing {

using cliffa::MultivectorD;
using cliffa::MultivectorQ;
using cliffa::Point;
using cliffa::Rational;

// Product of two basis blades given as sorted index lists: concatenate,
// bubble-sort while counting swaps, then cancel equal neighbours with
// e_j e_j = -1.
inline std::pair<int, std::vector<int>> naive_blade_product(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < a.size() - i; ++j)
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        sign = -sign;
      }
  std::vector<int> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i + 1 < a.size() && a[i] == a[i + 1]) {
      sign = -sign;
      ++i;
    } else {
      out.push_back(a[i]);
    }
  }
  return {sign, out};
}

inline std::vector<int> blade_indices(cliffa::Blade b) {
  std::vector<int> idx;
  for (int j = 1; j <= cliffa::kMaxDim; ++j)
    if (b & cliffa::generator_blade(j)) idx.push_back(j);
  return idx;
}

inline cliffa::Blade indices_blade(const std::vector<int>& idx) {
  cliffa::Blade b = 0;
  for (int j : idx) b |= cliffa::generator_blade(j);
  return b;
}

// Multivector product through the naive blade rule, accumulated in a map.
inline MultivectorQ naive_product(const MultivectorQ& a, const MultivectorQ& b) {
  std::map<cliffa::Blade, Rational> acc;
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      auto [s, idx] = naive_blade_product(blade_indices(ba), blade_indices(bb));
      acc[indices_blade(idx)] += ca * cb * s;
    }
  MultivectorQ out(a.dim());
  for (const auto& [bl, c] : acc)
    if (c != 0) out += MultivectorQ::blade(a.dim(), bl, c);
  return out;
}

inline MultivectorQ random_mv(int n, std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<int> blade(0, (1 << n) - 1), num(-8, 8);
  MultivectorQ out(n);
  for (int i = 0; i < terms; ++i) {
    Rational c(num(rng), 4);
    c.canonicalize();
    out += MultivectorQ::blade(n, blade(rng), c);
  }
  return out;
}

inline Point random_point(int n, std::mt19937_64& rng, double lo = -1, double hi = 1) {
  std::uniform_real_distribution<double> u(lo, hi);
  Point p(n);
  for (auto& v : p) v = u(rng);
  return p;
}

inline Point random_unit(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Point p(n);
  double s = 0;
  for (auto& v : p) s += (v = g(rng)) * v;
  for (auto& v : p) v /= std::sqrt(s);
  return p;
}

inline Point random_in_ball(int n, std::mt19937_64& rng, double r) {
  std::uniform_real_distribution<double> u(0, 1);
  Point p = random_unit(n, rng);
  double s = r * std::pow(u(rng), 1.0 / n);
  for (auto& v : p) v *= s;
  return p;
}

// Coefficients of the product e_j * a written out by hand from the blade
// rule, so the finite-difference Dirac operator below does not use the
// library's product.
inline MultivectorD left_generator_times(int j, const MultivectorD& a) {
  MultivectorD out(a.dim());
  for (const auto& [b, c] : a.terms()) {
    auto [s, idx] = naive_blade_product({j}, blade_indices(b));
    out += MultivectorD::blade(a.dim(), indices_blade(idx), s * c);
  }
  return out;
}

using Field = std::function<MultivectorD(const Point&)>;

// Fourth-order central difference.
inline MultivectorD partial(const Field& f, const Point& x, int slot, double h) {
  auto at = [&](double t) {
    Point y = x;
    y[slot] += t;
    return f(y);
  };
  return (at(-2 * h) - at(2 * h) + (at(h) - at(-h)) * 8.0) * (1.0 / (12 * h));
}

inline MultivectorD dirac(const Field& f, const Point& x, double h) {
  MultivectorD out(static_cast<int>(x.size()));
  for (int j = 0; j < static_cast<int>(x.size()); ++j) out += left_generator_times(j + 1, partial(f, x, j, h));
  return out;
}

inline MultivectorD vec(const Point& x) {
  MultivectorD v(static_cast<int>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) v += MultivectorD::blade(v.dim(), cliffa::generator_blade(j + 1), x[j]);
  return v;
}

inline double dist(const MultivectorD& a, const MultivectorD& b) { return (a - b).norm(); }

}  // namespace testing
