#pragma once

#include <string_view>

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cliffa/algebra.hpp"
#include "cliffa/multivector.hpp"

namespace cliffa {

// Vector variables are x1..xn paired with e1..en. Unital variables are
// x0, x1..x_{m} over Cl_m, where x0 pairs with the identity.
enum class VariableKind { Vector, Unital };

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic: lower total degree first, then larger leading
// exponents first (x1^2 < x1 x2 < x2^2).
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

// Multivariate polynomial with Clifford-valued coefficients. Coefficients
// multiply from the left of the variables; since the variables are real they
// commute with everything, so left/right placement only matters when a
// polynomial is multiplied by another Clifford quantity.
template <class S>
class Polynomial {
 public:
  using MV = Multivector<S>;
  using TermMap = std::map<Exponent, MV, GradedLex>;

  Polynomial() = default;
  Polynomial(int dim, VariableKind kind = VariableKind::Vector) : dim_(dim), kind_(kind) {
    check_dim(dim);
    nvars_ = kind == VariableKind::Vector ? dim : dim + 1;
  }

  static Polynomial constant(const MV& c, VariableKind kind = VariableKind::Vector) {
    Polynomial p(c.dim(), kind);
    if (!c.is_zero()) p.terms_.emplace(Exponent(p.nvars_, 0), c);
    return p;
  }
  static Polynomial constant(int dim, const S& s, VariableKind kind = VariableKind::Vector) {
    return constant(MV::scalar(dim, s), kind);
  }
  static Polynomial monomial(const Exponent& e, const MV& c, VariableKind kind = VariableKind::Vector) {
    Polynomial p(c.dim(), kind);
    if (static_cast<int>(e.size()) != p.nvars_) throw InvalidArgument("exponent length does not match variable count");
    for (int v : e)
      if (v < 0) throw InvalidArgument("negative exponent");
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
  }
  // The coordinate function of variable slot i (0-based).
  static Polynomial variable(int dim, int slot, VariableKind kind = VariableKind::Vector) {
    Polynomial p(dim, kind);
    if (slot < 0 || slot >= p.nvars_) throw InvalidArgument("variable slot out of range");
    Exponent e(p.nvars_, 0);
    e[slot] = 1;
    p.terms_.emplace(e, MV::one(dim));
    return p;
  }
  // x = sum_j x_j e_j (vector kind) or x0 + sum_j x_j e_j (unital kind).
  static Polynomial identity_vector(int dim, VariableKind kind = VariableKind::Vector) {
    Polynomial p(dim, kind);
    for (int slot = 0; slot < p.nvars_; ++slot) {
      Exponent e(p.nvars_, 0);
      e[slot] = 1;
      int j = p.generator_of(slot);
      p.terms_.emplace(e, j == 0 ? MV::one(dim) : MV::basis(dim, j));
    }
    return p;
  }
  // ||x||^2 over the vector variables.
  static Polynomial norm_squared(int dim, VariableKind kind = VariableKind::Vector) {
    Polynomial p(dim, kind);
    for (int slot = 0; slot < p.nvars_; ++slot) {
      Exponent e(p.nvars_, 0);
      e[slot] = 2;
      p.terms_.emplace(e, MV::one(dim));
    }
    return p;
  }

  int dim() const { return dim_; }
  VariableKind kind() const { return kind_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // The generator paired with a variable slot (0 for the unital x0).
  int generator_of(int slot) const { return kind_ == VariableKind::Vector ? slot + 1 : slot; }
  // Slot of x_j for 1 <= j <= dim.
  int slot_of_generator(int j) const { return kind_ == VariableKind::Vector ? j - 1 : j; }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.first));
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& t : terms_)
      if (total_degree(t.first) != d) return false;
    return true;
  }
  Polynomial homogeneous_part(int d) const {
    Polynomial p(dim_, kind_);
    for (const auto& t : terms_)
      if (total_degree(t.first) == d) p.terms_.insert(t);
    return p;
  }
  MV coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? MV(dim_) : it->second;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }
  Polynomial& operator+=(const Polynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same(b);
    Polynomial p(a.dim_, a.kind_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    }
    return p;
  }
  // Clifford constant on the left / right.
  friend Polynomial operator*(const MV& c, const Polynomial& a) {
    Polynomial p(a.dim_, a.kind_);
    for (const auto& [e, v] : a.terms_) p.add_term(e, c * v);
    return p;
  }
  friend Polynomial operator*(const Polynomial& a, const MV& c) {
    Polynomial p(a.dim_, a.kind_);
    for (const auto& [e, v] : a.terms_) p.add_term(e, v * c);
    return p;
  }
  friend Polynomial operator*(const Polynomial& a, const S& s) {
    Polynomial p(a.dim_, a.kind_);
    for (const auto& [e, v] : a.terms_) p.add_term(e, v * s);
    return p;
  }
  friend Polynomial operator*(const S& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.kind_ == b.kind_ && a.terms_ == b.terms_;
  }

  Polynomial pow(int k) const {
    Polynomial r = constant(dim_, S(1), kind_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  // d/dx_slot
  Polynomial partial(int slot) const {
    Polynomial p(dim_, kind_);
    for (const auto& [e, c] : terms_) {
      if (e[slot] == 0) continue;
      Exponent f = e;
      f[slot] -= 1;
      p.add_term(f, c * S(e[slot]));
    }
    return p;
  }

  // Coefficientwise map.
  template <class F>
  Polynomial map_coefficients(F f) const {
    Polynomial p(dim_, kind_);
    for (const auto& [e, c] : terms_) p.add_term(e, f(c));
    return p;
  }

  Polynomial reversion() const { return map_coefficients([](const MV& c) { return c.reversion(); }); }
  Polynomial conjugation() const { return map_coefficients([](const MV& c) { return c.conjugation(); }); }

  // Restriction x_slot = 0.
  Polynomial restrict_zero(int slot) const {
    Polynomial p(dim_, kind_);
    for (const auto& t : terms_)
      if (t.first[slot] == 0) p.terms_.insert(t);
    return p;
  }
  bool depends_on(int slot) const {
    for (const auto& t : terms_)
      if (t.first[slot] != 0) return true;
    return false;
  }

  // Evaluation at a point of any scalar type T the coefficients convert to.
  template <class T>
  Multivector<T> evaluate_as(const std::vector<T>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw InvalidArgument("point has wrong number of coordinates");
    // Cache powers per variable.
    int maxdeg = 0;
    for (const auto& t : terms_)
      for (int v : t.first) maxdeg = std::max(maxdeg, v);
    std::vector<std::vector<T>> pw(nvars_, std::vector<T>(maxdeg + 1, T(1)));
    for (int i = 0; i < nvars_; ++i)
      for (int k = 1; k <= maxdeg; ++k) pw[i][k] = pw[i][k - 1] * point[i];
    std::vector<typename Multivector<T>::Term> acc;
    for (const auto& [e, c] : terms_) {
      T m(1);
      for (int i = 0; i < nvars_; ++i) m *= pw[i][e[i]];
      for (const auto& [b, v] : c.terms()) acc.emplace_back(b, convert_scalar<T>(v) * m);
    }
    return Multivector<T>::from_terms(dim_, std::move(acc));
  }
  MV evaluate(const std::vector<S>& point) const { return evaluate_as<S>(point); }

  template <class T>
  Polynomial<T> convert() const {
    Polynomial<T> p(dim_, kind_);
    for (const auto& [e, c] : terms_) p += Polynomial<T>::monomial(e, c.template convert<T>(), kind_);
    return p;
  }

  // Drops coefficients whose magnitude is below tol (float polynomials).
  Polynomial chop(double tol) const {
    Polynomial p(dim_, kind_);
    for (const auto& [e, c] : terms_) {
      std::vector<typename MV::Term> kept;
      for (const auto& t : c.terms())
        if (magnitude(t.second) > tol) kept.push_back(t);
      p.add_term(e, MV::from_terms(dim_, std::move(kept)));
    }
    return p;
  }
  // Keeps only terms of total degree <= d.
  Polynomial truncate(int d) const {
    Polynomial p(dim_, kind_);
    for (const auto& t : terms_)
      if (total_degree(t.first) <= d) p.terms_.insert(t);
    return p;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& t : terms_) m = std::max(m, t.second.max_abs());
    return m;
  }

  void add_term(const Exponent& e, const MV& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void require_same(const Polynomial& o) const {
    if (dim_ != o.dim_) throw ContextMismatch("polynomials over different algebras");
    if (kind_ != o.kind_) throw ContextMismatch("polynomials with different variable kinds");
  }

 private:
  int dim_ = 0;
  VariableKind kind_ = VariableKind::Vector;
  int nvars_ = 0;
  TermMap terms_;
};

using PolynomialQ = Polynomial<Rational>;
using PolynomialD = Polynomial<double>;

// Division by (||x||^2 - c) using x1^2 as the leading monomial:
// p = (||x||^2 - c) q + r with r of degree <= 1 in x1.
template <class S>
std::pair<Polynomial<S>, Polynomial<S>> divmod_sphere(const Polynomial<S>& p, const S& c) {
  if (p.kind() != VariableKind::Vector || p.nvars() == 0) throw InvalidArgument("sphere reduction needs vector variables");
  Polynomial<S> q(p.dim()), r = p;
  Polynomial<S> divisor = Polynomial<S>::norm_squared(p.dim()) - Polynomial<S>::constant(p.dim(), c);
  while (true) {
    // Pick a term with the largest x1 exponent >= 2.
    const Exponent* best = nullptr;
    for (const auto& t : r.terms())
      if (t.first[0] >= 2 && (!best || t.first[0] > (*best)[0])) best = &t.first;
    if (!best) break;
    Exponent e = *best;
    auto coef = r.coefficient(e);
    e[0] -= 2;
    Polynomial<S> m = Polynomial<S>::monomial(e, coef);
    q += m;
    r -= divisor * m;
  }
  return {q, r};
}

// Remainder of p modulo the unit-sphere ideal (||x||^2 - 1).
template <class S>
Polynomial<S> reduce_on_sphere(const Polynomial<S>& p) {
  return divmod_sphere(p, S(1)).second;
}

// Exact quotient p / ||x||^2 if it exists.
template <class S>
bool divide_by_norm_squared(const Polynomial<S>& p, Polynomial<S>& quotient) {
  auto [q, r] = divmod_sphere(p, S(0));
  if (!r.is_zero()) return false;
  quotient = std::move(q);
  return true;
}

// Terms "(coef)*x1^2*x3" joined by " + ", in graded-lex order; the zero
// polynomial prints as "0". Unital variables are named x0..xm.
template <class S>
std::string to_string(const Polynomial<S>& p);

// Inverse of to_string; a bare "x2" or "(1/2*e1)" term is accepted too.
template <class S>
Polynomial<S> parse_polynomial(int dim, std::string_view text, VariableKind kind = VariableKind::Vector);

}  // namespace cliffa
