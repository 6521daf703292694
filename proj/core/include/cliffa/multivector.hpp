#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliffa/error.hpp"
#include "cliffa/scalar.hpp"

namespace cliffa {

// A basis blade e_{i1}...e_{ir} (i1 < ... < ir) is stored as a bitmask whose
// bit (i-1) is set for every generator e_i it contains.
using Blade = std::uint32_t;

inline constexpr int kMaxDim = 16;

struct AlgebraContext {
  int n = 0;
  ScalarField field = ScalarField::RealExact;
};

inline int blade_grade(Blade b) { return std::popcount(b); }

inline Blade generator_blade(int j) { return Blade(1) << (j - 1); }

// Sign of e_A e_B after reordering into canonical order and contracting
// repeated generators with e_j^2 = -1.
inline int blade_product_sign(Blade a, Blade b) {
  int swaps = 0;
  for (Blade t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

inline void check_dim(int n) {
  if (n < 0 || n > kMaxDim) throw InvalidArgument("algebra dimension must lie in [0, 16], got " + std::to_string(n));
}

// Sparse element of Cl_n: a sorted list of (blade, coefficient) pairs with no
// zero coefficients. The dimension travels with the value so that mixing
// algebras is caught at run time.
template <class S>
class Multivector {
 public:
  using Scalar = S;
  using Term = std::pair<Blade, S>;

  Multivector() = default;
  explicit Multivector(int dim) : dim_(dim) { check_dim(dim); }

  static Multivector scalar(int dim, const S& s) { return blade(dim, 0, s); }
  static Multivector one(int dim) { return scalar(dim, S(1)); }

  static Multivector blade(int dim, Blade b, const S& s = S(1)) {
    Multivector m(dim);
    if (b >> dim) throw InvalidArgument("blade uses a generator beyond e" + std::to_string(dim));
    if (!cliffa::is_zero(s)) m.terms_.emplace_back(b, s);
    return m;
  }

  // e_j, 1-based.
  static Multivector basis(int dim, int j) {
    if (j < 1 || j > dim) throw InvalidArgument("generator index out of range");
    return blade(dim, generator_blade(j));
  }

  // sum_j c[j] e_{j+1}
  static Multivector vector(int dim, const std::vector<S>& c) {
    if (static_cast<int>(c.size()) > dim) throw InvalidArgument("too many vector components");
    Multivector m(dim);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!cliffa::is_zero(c[j])) m.terms_.emplace_back(generator_blade(int(j) + 1), c[j]);
    return m;
  }

  // Builds from unsorted, possibly repeated terms.
  static Multivector from_terms(int dim, std::vector<Term> terms) {
    Multivector m(dim);
    for (auto& t : terms)
      if (t.first >> dim) throw InvalidArgument("blade uses a generator beyond e" + std::to_string(dim));
    m.terms_ = std::move(terms);
    m.normalize();
    return m;
  }

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coef(Blade b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, Blade key) { return t.first < key; });
    return (it != terms_.end() && it->first == b) ? it->second : S(0);
  }
  S scalar_part() const { return coef(0); }
  S component(int j) const { return coef(generator_blade(j)); }

  // Components of the grade-1 part as a dense vector of length dim.
  std::vector<S> vector_part() const {
    std::vector<S> v(dim_, S(0));
    for (const auto& [b, c] : terms_)
      if (blade_grade(b) == 1) v[std::countr_zero(b)] = c;
    return v;
  }

  Multivector grade(int r) const {
    Multivector m(dim_);
    for (const auto& t : terms_)
      if (blade_grade(t.first) == r) m.terms_.push_back(t);
    return m;
  }
  Multivector even_part() const {
    Multivector m(dim_);
    for (const auto& t : terms_)
      if (blade_grade(t.first) % 2 == 0) m.terms_.push_back(t);
    return m;
  }

  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_vector() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return blade_grade(t.first) == 1; });
  }
  bool is_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return blade_grade(t.first) % 2 == 0; });
  }

  // Euclidean coefficient norm sqrt(sum |c_A|^2).
  double norm() const {
    double s = 0;
    for (const auto& t : terms_) {
      double m = magnitude(t.second);
      s += m * m;
    }
    return std::sqrt(s);
  }
  double max_abs() const {
    double s = 0;
    for (const auto& t : terms_) s = std::max(s, magnitude(t.second));
    return s;
  }

  Multivector reversion() const { return sign_map([](int r) { return ((r * (r - 1) / 2) & 1) ? -1 : 1; }); }
  Multivector grade_involution() const { return sign_map([](int r) { return (r & 1) ? -1 : 1; }); }
  Multivector conjugation() const { return sign_map([](int r) { return ((r * (r + 1) / 2) & 1) ? -1 : 1; }); }

  Multivector operator-() const {
    Multivector m = *this;
    for (auto& t : m.terms_) t.second = -t.second;
    return m;
  }

  Multivector& operator+=(const Multivector& o) { return *this = combine(o, false); }
  Multivector& operator-=(const Multivector& o) { return *this = combine(o, true); }
  Multivector& operator*=(const S& s) {
    if (cliffa::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= s;
    drop_zeros();
    return *this;
  }
  Multivector& operator/=(const S& s) {
    if (cliffa::is_zero(s)) throw SingularPoint("division of a multivector by zero");
    for (auto& t : terms_) t.second /= s;
    drop_zeros();
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) {
    // Scalars are central, so left and right scaling agree.
    return a *= s;
  }
  friend Multivector operator/(Multivector a, const S& s) { return a /= s; }

  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.require_same(b);
    Multivector m(a.dim_);
    if (a.terms_.empty() || b.terms_.empty()) return m;
    const std::size_t pairs = a.terms_.size() * b.terms_.size();
    if (a.dim_ <= 10 && pairs >= 64) {
      // Dense accumulator; terms land on each blade in the same order the
      // sort-and-merge path would add them, so results are identical.
      std::vector<S> acc(std::size_t(1) << a.dim_, S(0));
      std::vector<char> hit(acc.size(), 0);
      for (const auto& [ba, ca] : a.terms_) {
        for (const auto& [bb, cb] : b.terms_) {
          const Blade r = ba ^ bb;
          S c = ca * cb;
          if (blade_product_sign(ba, bb) < 0) c = -c;
          if (hit[r]) {
            acc[r] += c;
          } else {
            acc[r] = std::move(c);
            hit[r] = 1;
          }
        }
      }
      for (std::size_t r = 0; r < acc.size(); ++r)
        if (hit[r] && !cliffa::is_zero(acc[r])) m.terms_.emplace_back(static_cast<Blade>(r), std::move(acc[r]));
      return m;
    }
    m.terms_.reserve(pairs);
    for (const auto& [ba, ca] : a.terms_) {
      for (const auto& [bb, cb] : b.terms_) {
        S c = ca * cb;
        if (blade_product_sign(ba, bb) < 0) c = -c;
        m.terms_.emplace_back(ba ^ bb, std::move(c));
      }
    }
    m.normalize();
    return m;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  template <class T>
  Multivector<T> convert() const {
    std::vector<typename Multivector<T>::Term> out;
    out.reserve(terms_.size());
    for (const auto& [b, c] : terms_) out.emplace_back(b, convert_scalar<T>(c));
    return Multivector<T>::from_terms(dim_, std::move(out));
  }

  // Re-embeds into a larger algebra (generators keep their indices).
  Multivector embed(int new_dim) const {
    if (new_dim < dim_) {
      for (const auto& t : terms_)
        if (t.first >> new_dim) throw InvalidArgument("cannot restrict: blade uses a dropped generator");
    }
    Multivector m(new_dim);
    m.terms_ = terms_;
    return m;
  }

  void require_same(const Multivector& o) const {
    if (dim_ != o.dim_)
      throw ContextMismatch("multivectors from Cl_" + std::to_string(dim_) + " and Cl_" + std::to_string(o.dim_));
  }

 private:
  template <class F>
  Multivector sign_map(F f) const {
    Multivector m = *this;
    for (auto& t : m.terms_)
      if (f(blade_grade(t.first)) < 0) t.second = -t.second;
    return m;
  }

  Multivector combine(const Multivector& o, bool subtract) const {
    require_same(o);
    Multivector m(dim_);
    m.terms_.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        m.terms_.push_back(*i++);
      } else if (i == terms_.end() || j->first < i->first) {
        m.terms_.emplace_back(j->first, subtract ? S(-j->second) : j->second);
        ++j;
      } else {
        S c = subtract ? S(i->second - j->second) : S(i->second + j->second);
        if (!cliffa::is_zero(c)) m.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return m;
  }

  void normalize() {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& x, const Term& y) { return x.first < y.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      Blade b = terms_[r].first;
      S acc = std::move(terms_[r].second);
      for (++r; r < terms_.size() && terms_[r].first == b; ++r) acc += terms_[r].second;
      if (!cliffa::is_zero(acc)) terms_[w++] = Term(b, std::move(acc));
    }
    terms_.resize(w);
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return cliffa::is_zero(t.second); });
  }

  int dim_ = 0;
  std::vector<Term> terms_;
};

using MultivectorQ = Multivector<Rational>;
using MultivectorD = Multivector<double>;
using MultivectorC = Multivector<Complex>;

// Complexification of a real multivector.
inline MultivectorC complexify(const MultivectorD& a) { return a.convert<Complex>(); }

// Real and imaginary parts of a complex multivector.
inline MultivectorD real_part(const MultivectorC& a) {
  std::vector<MultivectorD::Term> t;
  for (const auto& [b, c] : a.terms()) t.emplace_back(b, c.real());
  return MultivectorD::from_terms(a.dim(), std::move(t));
}
inline MultivectorD imag_part(const MultivectorC& a) {
  std::vector<MultivectorD::Term> t;
  for (const auto& [b, c] : a.terms()) t.emplace_back(b, c.imag());
  return MultivectorD::from_terms(a.dim(), std::move(t));
}

}  // namespace cliffa
