#include "cliffa/kernels.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace cliffa {

RadialQ cauchy_kernel_expr(int n) {
  if (n < 2) throw InvalidArgument("Cauchy kernel needs n >= 2");
  return RadialQ::term(PolynomialQ::identity_vector(n), n, 0);
}

KernelFamily cauchy_kernel(int n) {
  KernelFamily f;
  f.n = n;
  f.k = 1;
  f.symbolic = cauchy_kernel_expr(n);
  f.C = 1;
  return f;
}

RadialQ newton_kernel_expr(int n) {
  if (n < 3) throw InvalidArgument("H = 1/((n-2)||x||^{n-2}) needs n >= 3");
  return RadialQ::term(PolynomialQ::constant(n, Rational(1, n - 2)), n - 2, 0);
}

PolynomialQ x_power_poly(int n, int j) {
  if (j < 0) throw InvalidArgument("x_power_poly needs j >= 0");
  // x^{2q} = (-1)^q ||x||^{2q}, x^{2q+1} = (-1)^q ||x||^{2q} x
  int q = j / 2;
  PolynomialQ p = PolynomialQ::norm_squared(n).pow(q) * Rational(q % 2 ? -1 : 1);
  if (j % 2) p = p * PolynomialQ::identity_vector(n);
  return p;
}

namespace {

using CoordKey = std::tuple<int, int, Exponent, Blade>;

// Expresses every input over a common power of ||x|| per (m mod 2, s)
// class so that coordinates are linear in the inputs.
std::vector<std::map<CoordKey, Rational>> common_frame(const std::vector<const RadialQ*>& exprs) {
  std::map<std::pair<int, int>, int> top;
  for (const RadialQ* e : exprs)
    for (const auto& [k, p] : e->terms()) {
      auto key = std::make_pair(k.m % 2, k.s);
      auto it = top.find(key);
      if (it == top.end() || it->second < k.m) top[key] = k.m;
    }
  std::vector<std::map<CoordKey, Rational>> out;
  for (const RadialQ* e : exprs) {
    std::map<CoordKey, Rational> coords;
    int n = e->dim();
    PolynomialQ ns = PolynomialQ::norm_squared(n);
    for (const auto& [k, p] : e->terms()) {
      int M = top[{k.m % 2, k.s}];
      PolynomialQ lifted = ns.pow((M - k.m) / 2) * p;
      for (const auto& [ex, c] : lifted.terms())
        for (const auto& [b, v] : c.terms()) {
          auto& slot = coords[std::make_tuple(k.m % 2, k.s, ex, b)];
          slot += v;
        }
    }
    out.push_back(std::move(coords));
  }
  return out;
}

}  // namespace

std::vector<Rational> solve_radial_linear(const std::vector<RadialQ>& columns, const RadialQ& rhs,
                                          std::vector<bool>* free_out) {
  std::vector<const RadialQ*> all;
  for (const auto& c : columns) all.push_back(&c);
  all.push_back(&rhs);
  auto coords = common_frame(all);
  std::map<CoordKey, int> rows;
  for (const auto& m : coords)
    for (const auto& kv : m) rows.emplace(kv.first, 0);
  int r = 0;
  for (auto& kv : rows) kv.second = r++;
  const int ncols = static_cast<int>(columns.size());
  std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(ncols + 1));
  for (int c = 0; c <= ncols; ++c)
    for (const auto& [key, v] : coords[c])
      if (sgn(v) != 0) a[rows[key]][c] = v;

  // Gauss-Jordan elimination.
  std::vector<int> pivot_col;
  int prow = 0;
  for (int c = 0; c < ncols && prow < static_cast<int>(a.size()); ++c) {
    int sel = -1;
    for (int i = prow; i < static_cast<int>(a.size()); ++i)
      if (sgn(a[i][c]) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[prow], a[sel]);
    Rational inv = 1 / a[prow][c];
    for (auto& v : a[prow]) v *= inv;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      if (i == prow || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (int j = 0; j <= ncols; ++j) a[i][j] -= f * a[prow][j];
    }
    pivot_col.push_back(c);
    ++prow;
  }
  for (int i = prow; i < static_cast<int>(a.size()); ++i)
    if (sgn(a[i][ncols]) != 0) throw UnsolvableAnsatz("kernel ansatz has no exact solution");
  std::vector<Rational> x(ncols, Rational(0));
  std::vector<bool> is_free(ncols, true);
  for (int i = 0; i < prow; ++i) {
    x[pivot_col[i]] = a[i][ncols];
    is_free[pivot_col[i]] = false;
  }
  if (free_out) *free_out = is_free;
  return x;
}

namespace {

KernelFamily solve_kernel(int n, int k, const KernelFamily& prev) {
  KernelFamily f;
  f.n = n;
  f.k = k;
  const RadialQ& target = prev.symbolic;
  if (n % 2 == 0 && k >= n) {
    f.log_case = true;
    PolynomialQ xp = x_power_poly(n, k - n);
    RadialQ with_log = RadialQ::term(xp, 0, 1);
    RadialQ plain = RadialQ::polynomial(xp);
    std::vector<bool> is_free;
    auto sol = solve_radial_linear({dirac_left(with_log), dirac_left(plain)}, target, &is_free);
    if (is_free[0] || sgn(sol[0]) == 0) throw UnsolvableAnsatz("log-case kernel constant undetermined");
    f.C = sol[0];
    f.A_free = is_free[1];
    f.A = sol[1] / sol[0];
    f.symbolic = with_log * f.C + plain * (f.C * *f.A);
  } else {
    RadialQ basis = (k % 2 == 1) ? RadialQ::term(PolynomialQ::identity_vector(n), 0, 0) *
                                       RadialQ::radius_power(n, -(n - k + 1))
                                 : RadialQ::radius_power(n, -(n - k));
    std::vector<bool> is_free;
    auto sol = solve_radial_linear({dirac_left(basis)}, target, &is_free);
    if (is_free[0]) throw UnsolvableAnsatz("kernel constant undetermined");
    f.C = sol[0];
    f.symbolic = basis * f.C;
  }
  if (!equivalent(dirac_left(f.symbolic), target)) throw UnsolvableAnsatz("solved kernel fails D G_k = G_{k-1}");
  return f;
}

}  // namespace

KernelFamily iterated_kernel(int n, int k) {
  if (k < 1) throw InvalidArgument("iterated kernel needs k >= 1");
  if (n < 2) throw InvalidArgument("iterated kernel needs n >= 2");
  static std::mutex mu;
  static std::map<std::pair<int, int>, KernelFamily> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  KernelFamily f = k == 1 ? cauchy_kernel(n) : solve_kernel(n, k, iterated_kernel(n, k - 1));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(n, k), f);
  return f;
}

KernelFamily iterated_kernel_uncached(int n, int k) {
  if (k < 1) throw InvalidArgument("iterated kernel needs k >= 1");
  if (n < 2) throw InvalidArgument("iterated kernel needs n >= 2");
  KernelFamily f = cauchy_kernel(n);
  for (int j = 2; j <= k; ++j) f = solve_kernel(n, j, f);
  return f;
}

// ---------------------------------------------------------------------------

Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
Point scale(const Point& a, double s) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}
double dot(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
double norm(const Point& a) { return std::sqrt(dot(a, a)); }

MultivectorD vec_d(const Point& x) { return MultivectorD::vector(static_cast<int>(x.size()), x); }

MultivectorD eval_cauchy(const Point& x) {
  const int n = static_cast<int>(x.size());
  double r = norm(x);
  if (r == 0) throw SingularPoint("G evaluated at the origin");
  return vec_d(x) * std::pow(r, -n);
}

MultivectorD eval_cauchy_diff(const Point& x, const Point& y) { return eval_cauchy(sub(x, y)); }

double eval_newton(const Point& x) {
  const int n = static_cast<int>(x.size());
  double r = norm(x);
  if (r == 0) throw SingularPoint("H evaluated at the origin");
  return std::pow(r, 2 - n) / (n - 2);
}

MultivectorD spherical_G(int n, const Point& x, const Point& y) {
  Point d = sub(x, y);
  double r = norm(d);
  if (r < 1e-14) throw SingularPoint("spherical kernel at coincident points");
  return vec_d(d) * std::pow(r, -n);
}

MultivectorD spherical_G_closed_form(int n, const Point& x, const Point& y) {
  double t = 1 - dot(x, y);
  if (t <= 1e-14) throw SingularPoint("spherical kernel at coincident points");
  return vec_d(sub(x, y)) * (std::pow(2.0, -0.5 * n) * std::pow(t, -0.5 * n));
}

MultivectorD spherical_H(int n, const Point& x, const Point& y) {
  double r = norm(sub(x, y));
  if (r < 1e-14) throw SingularPoint("spherical kernel at coincident points");
  return MultivectorD::scalar(static_cast<int>(x.size()), std::pow(r, 2 - n) / (n - 2));
}

}  // namespace cliffa
