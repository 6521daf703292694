#include "cliffa/series.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "cliffa/integration.hpp"

namespace cliffa {

std::vector<MultiIndex> enumerate_multi_indices(int n, int j) {
  if (n < 2) throw InvalidArgument("multi-indices need n >= 2");
  const int slots = n - 1;
  std::vector<MultiIndex> out;
  MultiIndex cur(slots, 0);
  // Recursive fill, larger leading exponents first (graded-lex).
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == slots - 1) {
      cur[slot] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[slot] = v;
      rec(slot + 1, left - v);
    }
  };
  rec(0, j);
  return out;
}

PolynomialQ fueter_variable(int n, int k) {
  if (k < 2 || k > n) throw InvalidArgument("Fueter variable index must lie in 2..n");
  MultivectorQ e1k = MultivectorQ::basis(n, 1) * MultivectorQ::basis(n, k);
  return PolynomialQ::variable(n, k - 1) + e1k * PolynomialQ::variable(n, 0);
}

PolynomialQ fueter_polynomial(int n, const MultiIndex& idx) {
  if (static_cast<int>(idx.size()) != n - 1) throw InvalidArgument("multi-index must have n-1 entries");
  for (int v : idx)
    if (v < 0) throw InvalidArgument("multi-index entries must be non-negative");
  std::vector<PolynomialQ> z;
  for (int k = 2; k <= n; ++k) z.push_back(fueter_variable(n, k));
  std::map<MultiIndex, PolynomialQ> memo;
  std::function<PolynomialQ(const MultiIndex&)> words = [&](const MultiIndex& a) -> PolynomialQ {
    int total = 0;
    for (int v : a) total += v;
    if (total == 0) return PolynomialQ::constant(n, Rational(1));
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
    PolynomialQ acc(n);
    for (int i = 0; i < n - 1; ++i) {
      if (a[i] == 0) continue;
      MultiIndex b = a;
      --b[i];
      acc += z[i] * words(b);
    }
    memo.emplace(a, acc);
    return acc;
  };
  int j = 0;
  for (int v : idx) j += v;
  mpz_class fact = 1;
  for (int i = 2; i <= j; ++i) fact *= i;
  return words(idx) * Rational(mpz_class(1), fact);
}

PolynomialQ ck_extension(const PolynomialQ& fprime) {
  if (fprime.kind() != VariableKind::Vector) throw InvalidArgument("ck_extension needs vector variables");
  if (fprime.depends_on(0)) throw InvalidArgument("ck_extension: data must not depend on x1");
  const int n = fprime.dim();
  MultivectorQ e1 = MultivectorQ::basis(n, 1);
  PolynomialQ x1 = PolynomialQ::variable(n, 0);
  PolynomialQ result = fprime;
  PolynomialQ cur = fprime;
  PolynomialQ x1k = PolynomialQ::constant(n, Rational(1));
  mpz_class fact = 1;
  for (int k = 1; !cur.is_zero(); ++k) {
    // Tangential Dirac operator, then e1 on the left.
    PolynomialQ d(n);
    for (int j = 2; j <= n; ++j) d += MultivectorQ::basis(n, j) * cur.partial(j - 1);
    cur = e1 * d;
    x1k = x1k * x1;
    fact *= k;
    result += x1k * cur * Rational(mpz_class(1), fact);
  }
  return result;
}

Rational x_power_dirac_factor(int n, int j, int d) {
  if (j % 2 == 0) return Rational(j);
  return Rational(j - 1 + n + 2 * d);
}

namespace {

void require_vector(const PolynomialQ& p, const char* op) {
  if (p.kind() != VariableKind::Vector) throw InvalidArgument(std::string(op) + ": needs vector variables");
}

}  // namespace

std::vector<PolynomialQ> kmonogenic_split(const PolynomialQ& p, int k) {
  require_vector(p, "kmonogenic_split");
  if (k < 1) throw InvalidArgument("kmonogenic_split needs k >= 1");
  const int n = p.dim();
  if (!dirac_power(p, k).is_zero()) throw InvalidArgument("kmonogenic_split: D^k p is not zero");
  if (k == 1) return {p};
  // Split D p (which is (k-1)-monogenic) and invert D(x^j f) = -c x^{j-1} f
  // on each homogeneous component.
  std::vector<PolynomialQ> g = kmonogenic_split(dirac_left(p), k - 1);
  std::vector<PolynomialQ> f(k, PolynomialQ(n));
  PolynomialQ rest = p;
  for (int j = 1; j < k; ++j) {
    const PolynomialQ& gj = g[j - 1];
    for (int d = 0; d <= gj.degree(); ++d) {
      PolynomialQ comp = gj.homogeneous_part(d);
      if (comp.is_zero()) continue;
      f[j] += comp * Rational(-1 / x_power_dirac_factor(n, j, d));
    }
    rest -= x_power_poly(n, j) * f[j];
  }
  f[0] = rest;
  if (!dirac_left(f[0]).is_zero()) throw UnsolvableAnsatz("kmonogenic_split: leading part is not monogenic");
  return f;
}

PolynomialQ kmonogenic_join(const std::vector<PolynomialQ>& parts) {
  if (parts.empty()) throw InvalidArgument("kmonogenic_join: no parts");
  const int n = parts[0].dim();
  PolynomialQ out(n);
  for (std::size_t j = 0; j < parts.size(); ++j) out += x_power_poly(n, static_cast<int>(j)) * parts[j];
  return out;
}

AlmansiSplit almansi_split(const PolynomialQ& h) {
  require_vector(h, "almansi_split");
  if (!dirac_power(h, 2).is_zero()) throw InvalidArgument("almansi_split: input is not harmonic");
  auto parts = kmonogenic_split(h, 2);
  return AlmansiSplit{parts[1], parts[0]};
}

PolynomialQ x_power_monogenic(const PolynomialQ& f, int k) {
  require_vector(f, "x_power_monogenic");
  if (k < 1) throw InvalidArgument("x_power_monogenic needs k >= 1");
  if (!dirac_left(f).is_zero()) throw InvalidArgument("x_power_monogenic: input is not monogenic");
  return x_power_poly(f.dim(), k - 1) * f;
}

// ---------------------------------------------------------------------------

RadialQ cauchy_kernel_derivative(int n, const MultiIndex& idx) {
  static std::mutex mu;
  static std::map<std::pair<int, MultiIndex>, RadialQ> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, idx});
    if (it != cache.end()) return it->second;
  }
  RadialQ g = cauchy_kernel_expr(n);
  for (int i = 0; i < n - 1; ++i)
    for (int c = 0; c < idx[i]; ++c) g = g.partial(i + 1).canonical();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(n, idx), g);
  return g;
}

MultivectorD TaylorExpansion::evaluate(const Point& y) const {
  Point d = sub(y, center);
  MultivectorD out(n);
  for (const auto& [idx, a] : coefficients) {
    MultivectorD p = fueter_polynomial(n, idx).evaluate_as<double>(d);
    out += side == Side::Left ? p * a : a * p.reversion();
  }
  return out;
}

TaylorExpansion taylor_coefficients(const std::function<MultivectorD(const Point&)>& f, const QuadratureRule& rule,
                                    int order, Side side) {
  if (rule.kind != SurfaceKind::Sphere) throw InvalidArgument("taylor_coefficients needs a sphere rule on dB(w, R)");
  const int n = rule.n;
  TaylorExpansion te;
  te.n = n;
  te.center = rule.center;
  te.order = order;
  te.side = side;
  std::vector<MultivectorD> fv;
  fv.reserve(rule.nodes.size());
  for (const auto& q : rule.nodes) fv.push_back(f(q.x));
  const double inv_omega = 1 / sphere_area(n);
  for (int j = 0; j <= order; ++j) {
    for (const auto& idx : enumerate_multi_indices(n, j)) {
      RadialD dg = cauchy_kernel_derivative(n, idx).convert<double>();
      std::vector<MultivectorD> vals;
      vals.reserve(rule.nodes.size());
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const auto& q = rule.nodes[i];
        MultivectorD k = dg.evaluate(sub(q.x, rule.center));
        MultivectorD nv = vec_d(q.normal);
        vals.push_back((side == Side::Left ? k * nv * fv[i] : fv[i] * nv * k) * q.w);
      }
      double sign = (j % 2 == 0) ? -1.0 : 1.0;
      te.coefficients[idx] = pairwise_sum(vals, n) * (sign * inv_omega);
    }
  }
  return te;
}

// ---------------------------------------------------------------------------

double BivariatePoly::evaluate(double s, double t) const {
  double v = 0;
  for (const auto& [e, c] : terms) v += c.get_d() * std::pow(s, e.first) * std::pow(t, e.second);
  return v;
}

BivariatePoly BivariatePoly::ds() const {
  BivariatePoly out;
  for (const auto& [e, c] : terms)
    if (e.first > 0) out.terms[{e.first - 1, e.second}] += c * e.first;
  std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

BivariatePoly BivariatePoly::dt() const {
  BivariatePoly out;
  for (const auto& [e, c] : terms)
    if (e.second > 0) out.terms[{e.first, e.second - 1}] += c * e.second;
  std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

bool BivariatePoly::operator==(const BivariatePoly& o) const {
  auto clean = [](const BivariatePoly& p) {
    auto t = p.terms;
    std::erase_if(t, [](const auto& kv) { return sgn(kv.second) == 0; });
    return t;
  };
  return clean(*this) == clean(o);
}

bool cauchy_riemann_holds(const BivariatePoly& u, const BivariatePoly& v) {
  BivariatePoly neg_vs;
  for (const auto& [e, c] : v.ds().terms) neg_vs.terms[e] = -c;
  return u.ds() == v.dt() && u.dt() == neg_vs;
}

FueterSce fueter_sce(int n, const BivariatePoly& u, const BivariatePoly& v) {
  if (n % 2 != 0) throw InvalidArgument("Fueter-Sce construction needs even n");
  if (!cauchy_riemann_holds(u, v)) throw InvalidArgument("Fueter-Sce: (u, v) violate the Cauchy-Riemann equations");
  return FueterSce{n, u, v};
}

FueterSce fueter_sce_from_coefficients(int n, const std::vector<Rational>& c) {
  // (s + i t)^k = sum_m binom(k, m) s^{k-m} (i t)^m
  BivariatePoly u, v;
  for (std::size_t k = 0; k < c.size(); ++k) {
    mpz_class binom = 1;
    for (std::size_t m = 0; m <= k; ++m) {
      if (m > 0) binom = binom * mpz_class(static_cast<unsigned long>(k - m + 1)) / mpz_class(static_cast<unsigned long>(m));
      Rational coef = c[k] * Rational(binom);
      int sgn_i = (m / 2) % 2 ? -1 : 1;
      auto key = std::make_pair(static_cast<int>(k - m), static_cast<int>(m));
      if (m % 2 == 0) u.terms[key] += coef * sgn_i;
      else v.terms[key] += coef * sgn_i;
    }
  }
  std::erase_if(u.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  std::erase_if(v.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return fueter_sce(n, u, v);
}

MultivectorD fueter_sce_eval(const FueterSce& fs, const Point& x) {
  const int n = fs.n;
  if (static_cast<int>(x.size()) != n) throw InvalidArgument("Fueter-Sce: point must have n coordinates");
  Point xp = x;
  xp[0] = 0;
  double rho = norm(xp);
  MultivectorD out = MultivectorD::scalar(n, fs.u.evaluate(x[0], rho));
  if (rho > 0) {
    // e1^{-1} = -e1
    MultivectorD unit = -MultivectorD::basis(n, 1) * vec_d(xp) * (1 / rho);
    out += unit * fs.v.evaluate(x[0], rho);
  }
  return out;
}

PolynomialQ fueter_sce_power(int n, int k) {
  PolynomialQ w = (-MultivectorQ::basis(n, 1)) * PolynomialQ::identity_vector(n);
  return w.pow(k);
}

PolynomialQ x_power_times_e1(int n, int k) { return x_power_poly(n, k) * MultivectorQ::basis(n, 1); }

}  // namespace cliffa
