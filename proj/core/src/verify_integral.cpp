#include <algorithm>
#include <cmath>

#include "cliffa/integration.hpp"
#include "cliffa/moebius.hpp"
#include "cliffa/series.hpp"
#include "verify_internal.hpp"

namespace cliffa::suites {

namespace {

void require_quadrature_dim(int n, const char* suite) {
  if (n < 2 || n > 5) throw InvalidArgument(std::string(suite) + ": n must lie in [2, 5] for product quadrature");
}

Point offset_center(int n) {
  static const double c[] = {0.1, -0.2, 0.05, 0.15, -0.1};
  return Point(c, c + n);
}

PolynomialQ monogenic_up_to(int n, int maxdeg, std::mt19937_64& rng) {
  PolynomialQ f(n);
  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& idx : enumerate_multi_indices(n, d)) f += fueter_polynomial(n, idx) * random_coefficient(n, rng);
  return f;
}

Density as_density(const PolynomialQ& p) { return BoundaryDensity::from_polynomial(p).eval; }

int resolution_or(const SuiteParams& p, int dflt) {
  int r = p.resolution.value_or(dflt);
  if (r < 2 || r > 256) throw InvalidArgument("resolution must lie in [2, 256]");
  return r;
}

int degree_or(const SuiteParams& p, int dflt, int hi) {
  int d = p.degree.value_or(dflt);
  if (d < 0 || d > hi) throw InvalidArgument("degree must lie in [0, " + std::to_string(hi) + "]");
  return d;
}

}  // namespace

Report cauchy(const SuiteParams& p) {
  Report r;
  r.suite = "cauchy";
  const int res = resolution_or(p, 24);
  const int deg = degree_or(p, 3, 6);
  r.params = {p.n.value_or(0), deg, res, p.seed};
  std::mt19937_64 rng(p.seed);
  for (int n : dims_or(p, {3, 4}, {3})) {
    require_quadrature_dim(n, "cauchy");
    const Point c = offset_center(n);
    PolynomialQ f = monogenic_up_to(n, deg, rng);
    PolynomialQ g = f.reversion();  // right monogenic
    Density F = as_density(f), Gr = as_density(g);
    auto rule = sphere_rule(n, c, 1.0, res);

    double thm = std::max(surface_integral({}, F, rule).norm(), surface_integral(Gr, {}, rule).norm());
    r.add("Cauchy theorem, int n f = int g n = 0 (" + tag(n) + ")", thm, p.tol.cauchy_theorem);

    // Error of the formula at a fixed interior point under doubling.
    Point y0 = c;
    y0[0] += 0.6;
    auto err_at = [&](int rr) { return (cauchy_integral(F, y0, sphere_rule(n, c, 1.0, rr)) - F(y0)).norm(); };
    double e8 = err_at(8), e16 = err_at(16);
    char note[96];
    std::snprintf(note, sizeof note, "error %.2e at resolution 8, %.2e at 16", e8, e16);
    r.add("spectral decay, error ratio under doubling (" + tag(n) + ")", e16 / e8, p.tol.spectral_ratio, note);

    // Interior points lie within R/2 of the centre and exterior points beyond
    // 2R, mirror images under inversion in the sphere, so both see the same
    // geometric convergence ratio of the product rule.
    double inside = 0, inside_right = 0, outside = 0;
    for (int i = 0; i < 20; ++i) {
      Point y = random_in_ball(c, 0.5, rng);
      inside = std::max(inside, (cauchy_integral(F, y, rule) - F(y)).norm());
      inside_right = std::max(inside_right, (cauchy_integral(Gr, y, rule, false) - Gr(y)).norm());
      Point z = random_in_shell(c, 2.0, 4.0, rng);
      outside = std::max(outside, cauchy_integral(F, z, rule).norm());
    }
    r.add("Cauchy formula, 20 interior points (" + tag(n) + ")", inside, p.tol.cauchy_formula);
    r.add("right Cauchy formula, 20 interior points (" + tag(n) + ")", inside_right, p.tol.cauchy_formula);
    r.add("Cauchy integral vanishes, 20 exterior points (" + tag(n) + ")", outside, p.tol.cauchy_formula);
  }
  return r;
}

Report mean(const SuiteParams& p) {
  Report r;
  r.suite = "mean";
  const int res = resolution_or(p, 16);
  const int deg = degree_or(p, 3, 6);
  r.params = {p.n.value_or(0), deg, res, p.seed};
  std::mt19937_64 rng(p.seed + 1);
  for (int n : dims_or(p, {3, 4}, {3})) {
    require_quadrature_dim(n, "mean");
    Density F = as_density(monogenic_up_to(n, deg, rng));
    double ball = 0, surf = 0;
    for (int i = 0; i < 5; ++i) {
      Point y = random_in_ball(Point(n, 0.0), 1.0, rng);
      ball = std::max(ball, (mean_value_ball(F, ball_rule(n, y, 0.5, std::min(res, 12))) - F(y)).norm());
      surf = std::max(surf, (surface_mean(F, sphere_rule(n, y, 0.5, res)) - F(y)).norm());
    }
    r.add("ball mean value (" + tag(n) + ")", ball, p.tol.mean_value);
    r.add("surface mean value (" + tag(n) + ")", surf, p.tol.mean_value);
  }
  return r;
}

Report green(const SuiteParams& p) {
  Report r;
  r.suite = "green";
  const int res = resolution_or(p, 32);
  const int deg = degree_or(p, 2, 5);
  r.params = {p.n.value_or(0), deg, res, p.seed};
  std::mt19937_64 rng(p.seed + 2);
  for (int n : dims_or(p, {3, 4}, {3})) {
    require_quadrature_dim(n, "green");
    const Point c = offset_center(n);
    // Harmonic h = x f1 + f2.
    PolynomialQ h = times_x(monogenic_up_to(n, deg, rng)) + monogenic_up_to(n, deg + 1, rng);
    Density H = as_density(h), DH = as_density(dirac_left(h));
    auto rule = sphere_rule(n, c, 1.0, res);
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      Point y = random_in_ball(c, 0.5, rng);
      worst = std::max(worst, (greens_formula(H, DH, y, rule) - H(y)).norm());
    }
    r.add("Green's formula for harmonic h, 10 points (" + tag(n) + ")", worst, p.tol.green);
  }
  return r;
}

Report kgreen(const SuiteParams& p) {
  Report r;
  r.suite = "kgreen";
  const int res = resolution_or(p, 32);
  const int deg = degree_or(p, 2, 4);
  r.params = {p.n.value_or(0), deg, res, p.seed};
  std::mt19937_64 rng(p.seed + 3);
  for (int n : dims_or(p, {3, 4}, {3})) {
    require_quadrature_dim(n, "kgreen");
    const Point c = offset_center(n);
    auto rule = sphere_rule(n, c, 1.0, res);
    for (int k = 1; k <= 3; ++k) {
      std::vector<PolynomialQ> parts;
      for (int j = 0; j < k; ++j) parts.push_back(monogenic_up_to(n, deg, rng));
      PolynomialQ f = kmonogenic_join(parts);
      std::vector<Density> derivs;
      PolynomialQ cur = f;
      for (int j = 0; j < k; ++j) {
        derivs.push_back(as_density(cur));
        cur = dirac_left(cur);
      }
      double worst = 0;
      for (int i = 0; i < 10; ++i) {
        Point y = random_in_ball(c, 0.5, rng);
        worst = std::max(worst, (cauchy_green_k(derivs, y, rule) - derivs[0](y)).norm());
      }
      r.add("Cauchy-Green reproduction (" + tag(n, k) + ")", worst, p.tol.green);
    }
  }
  return r;
}

Report taylor(const SuiteParams& p) {
  Report r;
  r.suite = "taylor";
  const int res = resolution_or(p, 16);
  const int deg = degree_or(p, 3, 4);
  r.params = {p.n.value_or(0), deg, res, p.seed};
  for (int n : dims_or(p, {3, 4}, {3})) {
    require_quadrature_dim(n, "taylor");
    auto rule = sphere_rule(n, Point(n, 0.0), 1.0, res);
    double worst = 0;
    int count = 0;
    for (int d = 0; d <= deg; ++d)
      for (const auto& beta : enumerate_multi_indices(n, d)) {
        Density P = as_density(fueter_polynomial(n, beta));
        TaylorExpansion t = taylor_coefficients(P, rule, deg);
        for (const auto& [alpha, a] : t.coefficients) {
          MultivectorD want = alpha == beta ? MultivectorD::one(n) : MultivectorD(n);
          worst = std::max(worst, (a - want).norm());
        }
        ++count;
      }
    r.add("Taylor coefficients of Fueter polynomials are unit/zero (" + tag(n) + ", " + std::to_string(count) +
              " polynomials)",
          worst, p.tol.taylor);

    // <x p_{l-1}, p_l> = (1/omega) int conj(x p_{l-1}) p_l dsigma
    double orth = 0;
    const double omega = sphere_area(n);
    for (int l = 1; l <= 3; ++l)
      for (const auto& a : enumerate_multi_indices(n, l - 1))
        for (const auto& b : enumerate_multi_indices(n, l)) {
          PolynomialD xp = times_x(fueter_polynomial(n, a)).convert<double>();
          PolynomialD q = fueter_polynomial(n, b).convert<double>();
          MultivectorD acc(n);
          for (const auto& node : rule.nodes)
            acc += xp.evaluate(node.x).conjugation() * q.evaluate(node.x) * (node.w / omega);
          orth = std::max(orth, acc.norm());
        }
    r.add("<x p_{l-1}, p_l> = 0 on the sphere (" + tag(n) + ", l<=3)", orth, p.tol.orthogonality);
  }
  return r;
}

Report holomorphic(const SuiteParams& p) {
  Report r;
  r.suite = "holomorphic";
  const int res = resolution_or(p, 24);
  const int deg = degree_or(p, 2, 4);
  int n = p.n.value_or(4);
  if (n != 2 && n != 4) throw InvalidArgument("holomorphic: n must be 2 or 4");
  r.params = {n, deg, res, p.seed};
  std::mt19937_64 rng(p.seed + 4);
  PolynomialQ f = monogenic_up_to(n, deg, rng);
  Density F = as_density(f);
  auto rule = sphere_rule(n, Point(n, 0.0), 1.0, res);
  double real_pts = 0, complex_pts = 0;
  for (int i = 0; i < 5; ++i) {
    Point y = random_in_ball(Point(n, 0.0), 0.3, rng);
    std::vector<Complex> zr(y.begin(), y.end()), zc(n);
    for (int j = 0; j < n; ++j) zc[j] = Complex(y[j], uniform(rng, -0.1, 0.1));
    real_pts = std::max(real_pts, (holomorphic_extension(F, zr, rule) - complexify(F(y))).norm());
    complex_pts = std::max(complex_pts, (holomorphic_extension(F, zc, rule) - f.evaluate_as<Complex>(zc)).norm());
  }
  r.add("G-dagger extension agrees with f at real points (" + tag(n) + ")", real_pts, p.tol.holomorphic);
  r.add("G-dagger extension agrees with the complexified polynomial (" + tag(n) + ")", complex_pts, p.tol.holomorphic);
  return r;
}

Report plemelj(const SuiteParams& p) {
  Report r;
  r.suite = "plemelj";
  const int res = resolution_or(p, 16);
  const int deg = degree_or(p, 3, 4);
  int n = p.n.value_or(3);
  require_quadrature_dim(n, "plemelj");
  r.params = {n, deg, res, p.seed};
  std::mt19937_64 rng(p.seed + 5);
  const Point origin(n, 0.0);
  auto sphere = sphere_rule(n, origin, 1.0, res);

  double pv = 0;
  for (int i = 0; i < 5; ++i) pv = std::max(pv, std::abs(pv_constant(n, random_unit(n, rng), res) - 0.5));
  r.add("C(1) = 1/2 (" + tag(n) + ")", pv, p.tol.pv_constant);

  // Inner data: monogenic polynomials. Outer data: their Kelvin images
  // G(x) f(x^{-1}), monogenic outside the ball and decaying.
  const VahlenMatrix kelvin = inversion(n);
  double inner = 0, outer = 0;
  std::vector<Density> inner_data, outer_data;
  for (int d = 0; d <= deg; ++d) {
    PolynomialQ f = monogenic_up_to(n, d, rng);
    inner_data.push_back(as_density(f));
    outer_data.push_back(pullback(kelvin, as_density(monogenic_up_to(n, d, rng))));
  }
  std::vector<Point> zs;
  for (int i = 0; i < 8; ++i) zs.push_back(random_unit(n, rng));
  for (std::size_t d = 0; d < inner_data.size(); ++d)
    for (const Point& z : zs) {
      inner = std::max(inner, (singular_cauchy(inner_data[d], z, sphere) - inner_data[d](z) * 0.5).norm());
      outer = std::max(outer, (singular_cauchy(outer_data[d], z, sphere) + outer_data[d](z) * 0.5).norm());
    }
  r.add("C theta = +theta/2 for inner data (" + tag(n) + ", deg<=" + std::to_string(deg) + ")", inner, p.tol.plemelj);
  r.add("C theta = -theta/2 for outer data (" + tag(n) + ", deg<=" + std::to_string(deg) + ")", outer, p.tol.plemelj);

  const Density& fin = inner_data.back();
  const Density& fout = outer_data.back();
  Density mix = [&](const Point& x) { return fin(x) + fout(x); };
  HardySplit split = hardy_split(mix, sphere);
  double rec = 0;
  for (const Point& z : zs) rec = std::max({rec, (split.inner(z) - fin(z)).norm(), (split.outer(z) - fout(z)).norm()});
  r.add("Hardy split recovers inner and outer parts (" + tag(n) + ")", rec, p.tol.plemelj);

  HardySplit again = hardy_split(split.inner, sphere);
  double idem = 0;
  for (std::size_t i = 0; i < 4; ++i) idem = std::max(idem, (again.inner(zs[i]) - split.inner(zs[i])).norm());
  r.add("re-splitting the inner part leaves it unchanged (" + tag(n) + ")", idem, p.tol.plemelj);
  return r;
}

}  // namespace cliffa::suites
