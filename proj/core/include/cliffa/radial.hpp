#pragma once

#include <cmath>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "cliffa/calculus.hpp"
#include "cliffa/polynomial.hpp"

namespace cliffa {

// Key (m, s) of a term P(x) * ||x||^{-m} * (log ||x||)^s.
struct RadialKey {
  int m = 0;
  int s = 0;
  friend auto operator<=>(const RadialKey&, const RadialKey&) = default;
};

// Finite sum of P(x) ||x||^{-m} (log ||x||)^s with m >= 0 and s in {0, 1}.
// Closed under d/dx_j, so every kernel of the theory lives here exactly.
template <class S>
class RadialExpr {
 public:
  using Poly = Polynomial<S>;
  using MV = Multivector<S>;

  RadialExpr() = default;
  explicit RadialExpr(int dim) : dim_(dim) { check_dim(dim); }

  static RadialExpr term(const Poly& p, int m, int s = 0) {
    if (p.kind() != VariableKind::Vector) throw InvalidArgument("radial expressions use vector variables");
    if (m < 0 || s < 0 || s > 1) throw InvalidArgument("radial term needs m >= 0 and s in {0,1}");
    RadialExpr r(p.dim());
    r.add(RadialKey{m, s}, p);
    return r;
  }
  static RadialExpr polynomial(const Poly& p) { return term(p, 0, 0); }

  // ||x||^e for any integer e, expressed with m >= 0.
  static RadialExpr radius_power(int dim, int e) {
    if (e <= 0) return term(Poly::constant(dim, S(1)), -e, 0);
    Poly ns = Poly::norm_squared(dim);
    if (e % 2 == 0) return term(ns.pow(e / 2), 0, 0);
    return term(ns.pow((e + 1) / 2), 1, 0);
  }

  int dim() const { return dim_; }
  const std::map<RadialKey, Poly>& terms() const { return terms_; }

  RadialExpr& operator+=(const RadialExpr& o) {
    require_same(o);
    for (const auto& [k, p] : o.terms_) add(k, p);
    return *this;
  }
  RadialExpr& operator-=(const RadialExpr& o) {
    require_same(o);
    for (const auto& [k, p] : o.terms_) add(k, -p);
    return *this;
  }
  RadialExpr operator-() const {
    RadialExpr r(dim_);
    for (const auto& [k, p] : terms_) r.terms_.emplace(k, -p);
    return r;
  }
  friend RadialExpr operator+(RadialExpr a, const RadialExpr& b) { return a += b; }
  friend RadialExpr operator-(RadialExpr a, const RadialExpr& b) { return a -= b; }
  friend RadialExpr operator*(const RadialExpr& a, const S& s) {
    RadialExpr r(a.dim_);
    for (const auto& [k, p] : a.terms_) r.add(k, p * s);
    return r;
  }
  friend RadialExpr operator*(const S& s, const RadialExpr& a) { return a * s; }
  friend RadialExpr operator*(const MV& c, const RadialExpr& a) {
    RadialExpr r(a.dim_);
    for (const auto& [k, p] : a.terms_) r.add(k, c * p);
    return r;
  }
  friend RadialExpr operator*(const RadialExpr& a, const MV& c) {
    RadialExpr r(a.dim_);
    for (const auto& [k, p] : a.terms_) r.add(k, p * c);
    return r;
  }
  friend RadialExpr operator*(const Poly& q, const RadialExpr& a) {
    RadialExpr r(a.dim_);
    for (const auto& [k, p] : a.terms_) r.add(k, q * p);
    return r;
  }
  friend RadialExpr operator*(const RadialExpr& a, const Poly& q) {
    RadialExpr r(a.dim_);
    for (const auto& [k, p] : a.terms_) r.add(k, p * q);
    return r;
  }
  // Product of two radial expressions (log powers must not exceed 1).
  friend RadialExpr operator*(const RadialExpr& a, const RadialExpr& b) {
    a.require_same(b);
    RadialExpr r(a.dim_);
    for (const auto& [ka, pa] : a.terms_)
      for (const auto& [kb, pb] : b.terms_) {
        if (ka.s + kb.s > 1) throw InvalidArgument("product would need (log r)^2");
        r.add(RadialKey{ka.m + kb.m, ka.s + kb.s}, pa * pb);
      }
    return r;
  }

  // d/dx_j with slot = j - 1:
  // d[P r^-m L^s] = (dP) r^-m L^s - m x_j P r^-(m+2) L^s + s x_j P r^-(m+2)
  RadialExpr partial(int slot) const {
    RadialExpr r(dim_);
    Poly xj = Poly::variable(dim_, slot);
    for (const auto& [k, p] : terms_) {
      r.add(k, p.partial(slot));
      if (k.m != 0) r.add(RadialKey{k.m + 2, k.s}, xj * p * S(-k.m));
      if (k.s == 1) r.add(RadialKey{k.m + 2, 0}, xj * p);
    }
    return r;
  }

  // D applied from the left: the same rule with x_j replaced by e_j x_j.
  RadialExpr dirac_left() const { return dirac(true); }
  RadialExpr dirac_right() const { return dirac(false); }

  // Canonical form: terms of equal (m mod 2, s) are merged over a common
  // power of ||x||, and factors ||x||^2 are divided out while m >= 2. Two
  // expressions are equal as functions iff their canonical forms agree.
  RadialExpr canonical() const {
    std::map<std::pair<int, int>, std::vector<std::pair<int, const Poly*>>> groups;
    for (const auto& [k, p] : terms_) groups[{k.m % 2, k.s}].push_back({k.m, &p});
    RadialExpr out(dim_);
    Poly ns = Poly::norm_squared(dim_);
    for (const auto& [g, members] : groups) {
      int M = 0;
      for (const auto& mp : members) M = std::max(M, mp.first);
      Poly q(dim_);
      for (const auto& [m, p] : members) q += ns.pow((M - m) / 2) * *p;
      if (q.is_zero()) continue;
      Poly quotient;
      while (M >= 2 && divide_by_norm_squared(q, quotient)) {
        q = std::move(quotient);
        M -= 2;
      }
      out.terms_.emplace(RadialKey{M, g.second}, std::move(q));
    }
    return out;
  }

  bool is_zero() const { return canonical().terms_.empty(); }
  friend bool equivalent(const RadialExpr& a, const RadialExpr& b) { return (a - b).is_zero(); }

  template <class T>
  RadialExpr<T> convert() const {
    RadialExpr<T> r(dim_);
    for (const auto& [k, p] : terms_) r += RadialExpr<T>::term(p.template convert<T>(), k.m, k.s);
    return r;
  }

  // Floating evaluation at x != 0 (or anywhere for pure polynomials).
  MultivectorD evaluate(const std::vector<double>& x) const {
    double r2 = 0;
    for (double v : x) r2 += v * v;
    double r = std::sqrt(r2);
    MultivectorD out(dim_);
    for (const auto& [k, p] : terms_) {
      if ((k.m > 0 || k.s > 0) && r == 0.0) throw SingularPoint("radial expression evaluated at the origin");
      double w = std::pow(r, -k.m) * (k.s ? std::log(r) : 1.0);
      out += p.template evaluate_as<double>(x) * w;
    }
    return out;
  }

  // Exact evaluation; only defined when every term has even m and no log.
  MV evaluate_exact(const std::vector<S>& x) const {
    S r2(0);
    for (const auto& v : x) r2 += v * v;
    MV out(dim_);
    for (const auto& [k, p] : terms_) {
      if (k.s != 0 || k.m % 2 != 0) throw InvalidArgument("exact evaluation needs even powers of ||x|| and no log");
      if (k.m > 0 && cliffa::is_zero(r2)) throw SingularPoint("radial expression evaluated at the origin");
      S w(1);
      for (int i = 0; i < k.m / 2; ++i) w /= r2;
      out += p.evaluate(x) * w;
    }
    return out;
  }

  void require_same(const RadialExpr& o) const {
    if (dim_ != o.dim_) throw ContextMismatch("radial expressions over different algebras");
  }

  void add(RadialKey k, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  RadialExpr dirac(bool left) const {
    RadialExpr r(dim_);
    Poly x = Poly::identity_vector(dim_);
    for (const auto& [k, p] : terms_) {
      r.add(k, left ? cliffa::dirac_left(p) : cliffa::dirac_right(p));
      Poly xp = left ? x * p : p * x;
      if (k.m != 0) r.add(RadialKey{k.m + 2, k.s}, xp * S(-k.m));
      if (k.s == 1) r.add(RadialKey{k.m + 2, 0}, xp);
    }
    return r;
  }

  int dim_ = 0;
  std::map<RadialKey, Poly> terms_;
};

using RadialQ = RadialExpr<Rational>;
using RadialD = RadialExpr<double>;

template <class S>
RadialExpr<S> dirac_left(const RadialExpr<S>& f) {
  return f.dirac_left();
}
template <class S>
RadialExpr<S> dirac_right(const RadialExpr<S>& f) {
  return f.dirac_right();
}

// Coordinates of a canonical radial expression, keyed by (m, s, exponent,
// blade); used for exact linear solves.
template <class S>
std::map<std::tuple<int, int, Exponent, Blade>, S> radial_coordinates(const RadialExpr<S>& f) {
  std::map<std::tuple<int, int, Exponent, Blade>, S> out;
  for (const auto& [k, p] : f.canonical().terms())
    for (const auto& [e, c] : p.terms())
      for (const auto& [b, v] : c.terms()) out.emplace(std::make_tuple(k.m, k.s, e, b), v);
  return out;
}

template <class S>
std::string to_string(const RadialExpr<S>& f);

}  // namespace cliffa
