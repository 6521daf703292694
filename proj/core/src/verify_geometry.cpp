#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "cliffa/algebra.hpp"
#include "cliffa/calculus.hpp"
#include "cliffa/integration.hpp"
#include "cliffa/moebius.hpp"
#include "cliffa/numdiff.hpp"
#include "cliffa/series.hpp"
#include "verify_internal.hpp"

namespace cliffa::suites {

namespace {

PolynomialQ monogenic_of_degree(int n, int d, std::mt19937_64& rng) {
  PolynomialQ f(n);
  for (const auto& idx : enumerate_multi_indices(n, d)) f += fueter_polynomial(n, idx) * random_coefficient(n, rng);
  return f;
}

PolynomialQ random_polynomial(int n, int deg, std::mt19937_64& rng) {
  PolynomialQ f(n);
  Exponent e(n, 0);
  for (int t = 0; t < 4; ++t) {
    int left = static_cast<int>(rng() % (deg + 1));
    for (int i = 0; i < n; ++i) {
      e[i] = i + 1 == n ? left : static_cast<int>(rng() % (left + 1));
      left -= e[i];
    }
    f += PolynomialQ::monomial(e, random_coefficient(n, rng));
  }
  return f;
}

FieldFn<MultivectorD> field(const Density& f) { return [f](const Point& x) { return f(x); }; }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Point sampled until `ok` accepts it.
template <class Gen, class Ok>
Point draw(Gen gen, Ok ok) {
  for (int tries = 0; tries < 1000; ++tries) {
    Point x = gen();
    if (ok(x)) return x;
  }
  throw Error("could not sample an admissible point");
}

}  // namespace

Report moebius(const SuiteParams& p) {
  Report r;
  r.suite = "moebius";
  int res = p.resolution.value_or(32);
  r.params = {p.n.value_or(0), 2, res, p.seed};
  std::mt19937_64 rng(p.seed + 10);
  for (int n : dims_or(p, {3, 4}, {3})) {
    if (n < 2 || n > 5) throw InvalidArgument("moebius: n must lie in [2, 5]");
    const Point origin(n, 0.0);

    double cov = 0;
    for (int i = 0; i < 200; ++i) {
      VahlenMatrix m = random_generator_product(n, 1 + i % 4, rng);
      while (true) {
        Point x = random_in_ball(origin, 2.0, rng), y = random_in_ball(origin, 2.0, rng);
        try {
          cov = std::max(cov, kernel_covariance_residual(m, x, y));
          break;
        } catch (const SingularPoint&) {
          // x, y or their images hit a pole or each other; redraw.
        }
      }
    }
    r.add("kernel covariance, 200 random products (" + tag(n) + ")", cov, p.tol.covariance);

    // Change of variables on a sphere of radius 1/2 kept at distance > 2
    // from every pole used here (0, +-e1, -e2 and the translated -e1).
    Point c(n, 0.0);
    c[0] = 0.3;
    c[1] = 2.2;
    if (n > 2) c[2] = 1.2;
    auto rule = sphere_rule(n, c, 0.5, n > 3 ? std::min(res, 24) : res);
    Density f = BoundaryDensity::from_polynomial(random_polynomial(n, 2, rng)).eval;
    Density g = BoundaryDensity::from_polynomial(random_polynomial(n, 2, rng)).eval;
    double cv = 0;
    for (const VahlenMatrix& m :
         {cayley(n, 1), cayley(n, 2), cayley_inverse(n, 1), cayley(n, 1) * translation(n, scale(c, -0.2)),
          inversion(n) * dilation(n, 1.5)}) {
      ChangeOfVariables out = change_of_variables(m, f, g, rule);
      cv = std::max(cv, out.residual);
    }
    r.add("change of variables for Cayley maps on polynomial data (" + tag(n) + ")", cv, p.tol.change_of_variables);

    // Pullback monogenicity for every generator kind.
    Density mono = BoundaryDensity::from_polynomial(monogenic_of_degree(n, 2, rng) + monogenic_of_degree(n, 1, rng)).eval;
    Point u1 = random_unit(n, rng), u2 = random_unit(n, rng);
    Point v = random_in_ball(origin, 1.0, rng);
    std::vector<VahlenMatrix> gens = {translation(n, v), dilation(n, 0.7), rotation(n, u1, u2), inversion(n),
                                      cayley(n, 1),      cayley_inverse(n, 1)};
    double pb = 0, pbk = 0;
    for (const VahlenMatrix& m : gens) {
      Density h = pullback(m, mono, 1);
      for (int i = 0; i < 3; ++i) {
        Point x = draw([&] { return random_in_shell(origin, 0.5, 1.5, rng); },
                       [&](const Point& x) { return denominator(m, x).norm() > 0.3; });
        pb = std::max(pb, dirac_fd<MultivectorD>(field(h), x, 1e-3, 4).norm());
      }
      // J_k for k = 2, 3 on k-monogenic data.
      for (int k = 2; k <= 3; ++k) {
        PolynomialQ fk = x_power_monogenic(monogenic_of_degree(n, 1, rng), k);
        Density hk = pullback(m, BoundaryDensity::from_polynomial(fk).eval, k);
        Point x = draw([&] { return random_in_shell(origin, 0.5, 1.5, rng); },
                       [&](const Point& x) { return denominator(m, x).norm() > 0.9; });
        pbk = std::max(pbk, dirac_power_fd<MultivectorD>(field(hk), x, k, 3e-3, 4).norm());
      }
    }
    r.add("pullback J f(Mx) is monogenic for every generator (" + tag(n) + ")", pb, p.tol.pullback);
    r.add("pullback J_k f(Mx) is k-monogenic, k=2,3 (" + tag(n) + ")", pbk, p.tol.pullback);

    // CK extension from the unit sphere reproduces monogenic data.
    PolynomialQ data = monogenic_of_degree(n, 2, rng) + monogenic_of_degree(n, 3, rng);
    SphereCK ext(data);
    PolynomialD dd = data.convert<double>();
    double ck = 0;
    for (int i = 0; i < 10; ++i) {
      Point x = scale(random_unit(n, rng), i % 3 == 0 ? 1.0 : (i % 3 == 1 ? 0.97 : 1.03));
      ck = std::max(ck, (ext(x) - dd.evaluate(x)).norm());
    }
    r.add("sphere CK extension reproduces monogenic data (" + tag(n) + ")", ck, p.tol.sphere_ck);
  }
  return r;
}

Report spherical(const SuiteParams& p) {
  Report r;
  r.suite = "spherical";
  int n = p.n.value_or(3);
  if (n < 3 || n > 5) throw InvalidArgument("spherical: n must lie in [3, 5]");
  int res = p.resolution.value_or(24);
  r.params = {n, 0, res, p.seed};
  std::mt19937_64 rng(p.seed + 20);
  const int m = n + 1;  // ambient dimension
  const double h = 1e-5;

  double ds_g = 0, closed = 0, literal = 0, corrected = 0;
  for (int i = 0; i < 50; ++i) {
    Point x = random_unit(m, rng);
    Point y = draw([&] { return random_unit(m, rng); }, [&](const Point& y) { return norm(sub(x, y)) > 0.5; });
    FieldFn<MultivectorD> Gs = [&](const Point& t) { return spherical_G(n, t, y); };
    FieldFn<MultivectorD> Hs = [&](const Point& t) { return spherical_H(n, t, y); };
    ds_g = std::max(ds_g, spherical_dirac_fd(Gs, x, h).norm());
    closed = std::max(closed, (Gs(x) - spherical_G_closed_form(n, x, y)).norm());
    MultivectorD dh = spherical_dirac_fd(Hs, x, h), xh = vec_d(x) * Hs(x), g = Gs(x);
    literal = std::max(literal, (dh + xh - g).norm());
    corrected = std::max(corrected, (dh - xh - g).norm());
  }
  r.add("x Lambda G_s + (n/2) x G_s = 0, 50 pairs (" + tag(n) + ")", ds_g, p.tol.spherical_fd);
  r.add("G_s equals its closed form (" + tag(n) + ")", closed, p.tol.spherical_fd);
  r.add("(D_s + x) H_s = G_s, literal (" + tag(n) + ")", literal, p.tol.spherical_fd,
        "does not hold; the identity satisfied is (D_s - x) H_s = G_s");
  r.add("(D_s - x) H_s = G_s (" + tag(n) + ")", corrected, p.tol.spherical_fd);

  // Lambda <x, y'> = x ^ y' in exact arithmetic.
  std::vector<Rational> yc(m);
  for (auto& v : yc) v = Rational(static_cast<long>(rng() % 11) - 5, 3);
  PolynomialQ inner_xy(m);
  for (int j = 0; j < m; ++j) inner_xy += PolynomialQ::variable(m, j) * yc[j];
  MultivectorQ Y = MultivectorQ::vector(m, yc);
  PolynomialQ X = PolynomialQ::identity_vector(m);
  PolynomialQ wedge = (X * Y - Y * X) * Rational(1, 2);
  r.add("Lambda <x, y'> = x ^ y' (exact, " + tag(n) + ")", exact_residual(angular(inner_xy) - wedge), 0);

  // Spherical Cauchy formula on the hemisphere around -e_{n+1}.
  Point pole(m, 0.0);
  pole[n] = -1;
  auto cap = cap_boundary_rule(n, pole, std::numbers::pi / 2, res);
  PolynomialQ f = monogenic_of_degree(n, 2, rng) + monogenic_of_degree(n, 1, rng);
  Density fprime = sphere_pullback(BoundaryDensity::from_polynomial(f).eval);
  double sc = 0, sg = 0;
  Point w(m, 0.0);
  w[0] = 0.6;
  w[n] = 0.8;  // outside the cap
  Density hs = [&](const Point& x) { return spherical_H(n, x, w); };
  Density dsh = [&](const Point& x) { return spherical_G(n, x, w) + vec_d(x) * spherical_H(n, x, w); };
  for (int i = 0; i < 10; ++i) {
    Point yp = sphere_cayley(random_in_ball(Point(n, 0.0), 0.6, rng));
    sc = std::max(sc, (spherical_cauchy(fprime, yp, cap) - fprime(yp)).norm());
    sg = std::max(sg, (spherical_green(hs, dsh, yp, cap) - hs(yp)).norm());
  }
  r.add("spherical Cauchy formula reproduces f' (" + tag(n) + ")", sc, p.tol.spherical_cauchy);
  r.add("spherical Green formula reproduces H_s(., w) (" + tag(n) + ")", sg, p.tol.spherical_cauchy);
  return r;
}

namespace {

// a + i b with a, b in Cl_n over the rationals; i commutes with everything.
struct ExactComplexMV {
  MultivectorQ re, im;
  friend ExactComplexMV operator*(const ExactComplexMV& x, const ExactComplexMV& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend ExactComplexMV operator-(const ExactComplexMV& x, const ExactComplexMV& y) { return {x.re - y.re, x.im - y.im}; }
  friend ExactComplexMV operator+(const ExactComplexMV& x, const ExactComplexMV& y) { return {x.re + y.re, x.im + y.im}; }
  double residual() const { return std::max(re.max_abs(), im.max_abs()); }
};

// Unit vectors with rational entries in R^{n-1}.
std::vector<Rational> rational_unit(int n) {
  switch (n - 1) {
    case 1: return {Rational(1)};
    case 2: return {Rational(3, 5), Rational(4, 5)};
    case 3: return {Rational(2, 3), Rational(1, 3), Rational(2, 3)};
    case 4: return {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    default: {
      std::vector<Rational> u(n - 1, Rational(0));
      u[0] = 1;
      return u;
    }
  }
}

}  // namespace

Report planewave(const SuiteParams& p) {
  Report r;
  r.suite = "planewave";
  r.params = {p.n.value_or(0), 0, 0, p.seed};
  std::mt19937_64 rng(p.seed + 30);
  for (int n : dims_or(p, {3, 4, 5}, {3, 4})) {
    if (n < 2 || n > 8) throw InvalidArgument("planewave: n must lie in [2, 8]");
    // Projector algebra with an exact unit zeta'.
    std::vector<Rational> u = rational_unit(n);
    u.push_back(0);
    MultivectorQ zen = MultivectorQ::vector(n, u) * MultivectorQ::basis(n, n);
    MultivectorQ half = MultivectorQ::scalar(n, Rational(1, 2));
    ExactComplexMV pp{half, zen * Rational(1, 2)}, pm{half, zen * Rational(-1, 2)};
    ExactComplexMV one{MultivectorQ::one(n), MultivectorQ(n)};
    double alg = std::max({(pp * pp - pp).residual(), (pm * pm - pm).residual(), (pp * pm).residual(),
                           (pm * pp).residual(), (pp + pm - one).residual()});
    r.add("p_+^2 = p_+, p_-^2 = p_-, p_+ p_- = 0, p_+ + p_- = 1 (exact, " + tag(n) + ")", alg, 0);

    double fd = 0;
    for (int sign : {1, -1})
      for (int i = 0; i < 3; ++i) {
        Point zeta = scale(random_unit(n - 1, rng), uniform(rng, 0.5, 2.0));
        PlaneWave wave = plane_wave(n, zeta, sign);
        Point x = random_in_ball(Point(n, 0.0), 1.0, rng);
        x[n - 1] = sign * std::abs(x[n - 1]);
        FieldFn<MultivectorC> e = [&](const Point& t) { return plane_wave_eval(wave, t); };
        fd = std::max(fd, dirac_fd<MultivectorC>(e, x, 1e-3, 4).norm());
      }
    r.add("D e_+- = 0 by finite differences (" + tag(n) + ")", fd, p.tol.planewave_fd);

    double lap = 0;
    for (int i = 0; i < 20; ++i)
      lap = std::max(lap, laplace_planewave_identity(n, uniform(rng, -3, 3), uniform(rng, 0.5, 3)).relative_error);
    r.add("Laplace / plane-wave identity, 20 (a,b) pairs (" + tag(n) + ")", lap, p.tol.laplace);
  }
  return r;
}

Report periodic(const SuiteParams& p) {
  Report r;
  r.suite = "periodic";
  const int R = p.resolution.value_or(12);
  if (R < 4 || R > 40) throw InvalidArgument("periodic: truncation must lie in [4, 40]");
  r.params = {p.n.value_or(0), 0, R, p.seed};
  std::mt19937_64 rng(p.seed + 40);
  struct Case {
    int n, k, l;
  };
  std::vector<Case> cases = {{3, 1, 1}, {3, 2, 1}, {3, 2, 2}, {4, 2, 1}, {4, 3, 3}, {5, 3, 2}};
  if (p.quick) cases = {{3, 1, 1}, {3, 2, 1}, {4, 2, 1}};
  if (p.n) {
    std::erase_if(cases, [&](const Case& c) { return c.n != *p.n; });
    if (cases.empty()) throw InvalidArgument("periodic: no kernel configuration for this n (use 3, 4 or 5)");
  }
  for (const Case& c : cases) {
    Point x(c.n), y(c.n);
    for (int i = 0; i < c.n; ++i) {
      x[i] = uniform(rng, -0.4, 0.4);
      y[i] = uniform(rng, -0.4, 0.4);
    }
    auto defect = [&](int RR, double& bound, double& tail) {
      LatticeSum s = periodic_kernel_cot(c.n, c.k, c.l, x, y, RR);
      bound = s.boundary_bound;
      tail = s.tail_estimate;
      double worst = 0;
      for (int j = 0; j < c.k; ++j) {
        Point xs = x;
        xs[j] += 1;
        LatticeSum t = periodic_kernel_cot(c.n, c.k, c.l, xs, y, RR);
        // e_1..e_l shifts flip the sign, the others keep it.
        worst = std::max(worst, (j < c.l ? t.value + s.value : t.value - s.value).norm());
      }
      return worst;
    };
    double b12, t12, b10, t10;
    double d12 = defect(R, b12, t12), d10 = defect(R - 2, b10, t10);
    std::string name = "cot_{" + std::to_string(c.k) + "," + std::to_string(c.l) + "} (anti)periodicity / tail bound (n=" +
                       std::to_string(c.n) + ")";
    r.add(name + ", R=" + std::to_string(R), d12 / b12, 1.0,
          fmt("defect %.2e", d12) + fmt(", bound %.2e", b12) + fmt(", |S_R - S_{R-2}| %.2e", t12));
    r.add(name + ", R=" + std::to_string(R - 2), d10 / b10, 1.0, fmt("defect %.2e", d10) + fmt(", bound %.2e", b10));
  }

  for (int n : {3, 4}) {
    if (p.n && *p.n != n) continue;
    double worst = 0;
    for (int i = 0; i < 5; ++i) {
      Point y = random_in_shell(Point(n, 0.0), 0.6, 1.6, rng);
      // Keep x at an angle from y, hence off the orbit {2^m y}.
      Point x = draw([&] { return random_in_shell(Point(n, 0.0), 0.6, 1.6, rng); },
                     [&](const Point& x) { return norm(sub(scale(x, 1 / norm(x)), scale(y, 1 / norm(y)))) > 0.5; });
      FieldFn<MultivectorD> k = [&](const Point& t) { return dilation_kernel(n, t, y).value; };
      worst = std::max(worst, dirac_fd<MultivectorD>(k, x, 1e-4, 2).norm());
    }
    r.add("dilation kernel is monogenic in x off the orbit (" + tag(n) + ")", worst, p.tol.dilation_fd);
  }
  return r;
}

}  // namespace cliffa::suites
