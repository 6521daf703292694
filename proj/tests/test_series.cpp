#include <doctest.h>

#include "cliffa/calculus.hpp"
#include "cliffa/error.hpp"
#include "cliffa/quadrature.hpp"
#include "cliffa/series.hpp"
#include "support.hpp"

using namespace cliffa;

namespace {

PolynomialQ var(int n, int j) { return PolynomialQ::variable(n, j - 1); }
MultivectorQ e(int n, int j) { return MultivectorQ::basis(n, j); }

PolynomialQ random_monogenic(int n, int degree, std::mt19937_64& rng) {
  PolynomialQ p(n);
  for (int d = 0; d <= degree; ++d)
    for (const auto& idx : enumerate_multi_indices(n, d)) p += fueter_polynomial(n, idx) * testing::random_mv(n, rng, 2);
  return p;
}

PolynomialD to_double(const PolynomialQ& p) {
  PolynomialD out(p.dim());
  for (const auto& [ex, c] : p.terms()) out += PolynomialD::monomial(ex, c.convert<double>());
  return out;
}

}  // namespace

TEST_CASE("Almansi split") {
  const int n = 3;
  // h = x1^2 - x2^2: f1 = -(2 x1 e1 - 2 x2 e2) / 5, f2 = h - x f1
  PolynomialQ h = var(n, 1).pow(2) - var(n, 2).pow(2);
  auto s = almansi_split(h);
  PolynomialQ f1 = -(e(n, 1) * var(n, 1) * Rational(2) - e(n, 2) * var(n, 2) * Rational(2)) * Rational(1, 5);
  CHECK(s.f1 == f1);
  CHECK(s.f2 == h - times_x(f1));
  CHECK(dirac_left(s.f1).is_zero());
  CHECK(dirac_left(s.f2).is_zero());

  std::mt19937_64 rng(41);
  PolynomialQ mono = random_monogenic(n, 3, rng);
  auto sm = almansi_split(mono);
  CHECK(sm.f1.is_zero());
  CHECK(sm.f2 == mono);

  // homogeneous h_l = p_l + x p_{l-1}
  PolynomialQ g = fueter_polynomial(4, {1, 1, 0}) + times_x(fueter_polynomial(4, {0, 0, 1}));
  auto sg = almansi_split(g);
  CHECK(sg.f2.is_homogeneous());
  CHECK(sg.f2.degree() == 2);
  CHECK(sg.f1.degree() == 1);
  CHECK(times_x(sg.f1) + sg.f2 == g);

  CHECK_THROWS_AS(almansi_split(var(n, 1).pow(2)), InvalidArgument);
}

TEST_CASE("k-monogenic split") {
  const int n = 3;
  PolynomialQ x = PolynomialQ::identity_vector(n);
  auto parts = kmonogenic_split(x, 2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].is_zero());
  CHECK(parts[1] == PolynomialQ::constant(n, Rational(1)));

  PolynomialQ p1 = fueter_polynomial(n, {1, 0});
  auto q = kmonogenic_split(times_x(p1), 2);
  CHECK(q[0].is_zero());
  CHECK(q[1] == p1);

  auto single = kmonogenic_split(p1, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == p1);

  std::mt19937_64 rng(42);
  for (int k = 1; k <= 4; ++k) {
    std::vector<PolynomialQ> gen;
    for (int j = 0; j < k; ++j) gen.push_back(random_monogenic(n, 2, rng));
    PolynomialQ p = kmonogenic_join(gen);
    CHECK(dirac_power(p, k).is_zero());
    auto split = kmonogenic_split(p, k);
    CHECK(split == gen);
    CHECK(kmonogenic_join(split) == p);
  }
  CHECK_THROWS_AS(kmonogenic_split(PolynomialQ::norm_squared(n), 2), InvalidArgument);
}

TEST_CASE("powers of x times monogenic functions") {
  const int n = 4;
  PolynomialQ one = PolynomialQ::constant(n, Rational(1));
  CHECK(x_power_monogenic(one, 1) == one);
  CHECK(x_power_monogenic(one, 2) == PolynomialQ::identity_vector(n));
  CHECK(dirac_power(PolynomialQ::identity_vector(n), 2).is_zero());
  PolynomialQ p1 = fueter_polynomial(n, {1, 0, 0});
  CHECK(dirac_power(x_power_monogenic(p1, 3), 3).is_zero());
  CHECK_FALSE(dirac_power(x_power_monogenic(p1, 3), 2).is_zero());

  // D(x^j f) = -c(j, d) x^{j-1} f
  std::mt19937_64 rng(43);
  for (int d = 0; d <= 2; ++d)
    for (int j = 1; j <= 4; ++j) {
      PolynomialQ f(n);
      for (const auto& idx : enumerate_multi_indices(n, d)) f += fueter_polynomial(n, idx) * testing::random_mv(n, rng, 1);
      PolynomialQ lhs = dirac_left(x_power<Rational>(n, j) * f);
      PolynomialQ rhs = -(x_power<Rational>(n, j - 1) * f) * x_power_dirac_factor(n, j, d);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("Fueter-Sce construction") {
  const int n = 4;
  std::mt19937_64 rng(44);
  auto constant = fueter_sce_from_coefficients(n, {1});
  for (int t = 0; t < 5; ++t) {
    Point x = testing::random_point(n, rng);
    CHECK(testing::dist(fueter_sce_eval(constant, x), MultivectorD::one(n)) < 1e-15);
  }
  // f(z) = z^k gives (e1^{-1} x)^k, annihilated by D^{n-1}
  for (int k = 0; k <= 4; ++k) {
    std::vector<Rational> c(k + 1, 0);
    c[k] = 1;
    auto fs = fueter_sce_from_coefficients(n, c);
    PolynomialD pk = to_double(fueter_sce_power(n, k));
    for (int t = 0; t < 5; ++t) {
      Point x = testing::random_point(n, rng);
      CHECK(testing::dist(fueter_sce_eval(fs, x), pk.evaluate_as<double>(x)) < 1e-12);
    }
    CHECK(dirac_power(fueter_sce_power(n, k), n - 1).is_zero());
  }
  CHECK(fueter_sce_power(n, 1) == -(e(n, 1) * PolynomialQ::identity_vector(n)));  // e1^{-1} = -e1

  // The literal x^k e1 family is annihilated only up to k = 2; by the
  // factors D x^3 = -6 x^2, D x^2 = -2 x, D x = -4 (n = 4), D^3 (x^3 e1) = -48 e1.
  for (int k = 0; k <= 2; ++k) CHECK(dirac_power(x_power_times_e1(n, k), 3).is_zero());
  CHECK(dirac_power(x_power_times_e1(n, 3), 3) == PolynomialQ::constant(e(n, 1) * Rational(-48)));

  BivariatePoly u, v;
  u.terms[{1, 0}] = 1;
  v.terms[{0, 1}] = 1;
  CHECK(cauchy_riemann_holds(u, v));
  CHECK_FALSE(cauchy_riemann_holds(u, u));
  CHECK_THROWS_AS(fueter_sce(3, u, v), InvalidArgument);
  CHECK_THROWS_AS(fueter_sce(4, u, u), InvalidArgument);
}

TEST_CASE("Taylor coefficients") {
  const int n = 3;
  Point w = {0.1, -0.2, 0.05};
  auto rule = sphere_rule(n, w, 0.5, 16);

  MultivectorD c = MultivectorD::one(n) * 2.0 + MultivectorD::basis(n, 2) * -0.5;
  auto tc = taylor_coefficients([&](const Point&) { return c; }, rule, 2);
  CHECK(testing::dist(tc.coefficients.at({0, 0}), c) < 1e-12);
  for (const auto& [idx, a] : tc.coefficients)
    if (idx != MultiIndex{0, 0}) CHECK(a.norm() < 1e-12);

  // each Fueter polynomial (about w) has a single unit coefficient
  for (int d = 0; d <= 3; ++d)
    for (const auto& idx0 : enumerate_multi_indices(n, d)) {
      PolynomialD v = to_double(fueter_polynomial(n, idx0));
      auto t = taylor_coefficients([&](const Point& x) { return v.evaluate_as<double>(sub(x, w)); }, rule, 3);
      for (const auto& [idx, a] : t.coefficients) {
        double expect = idx == idx0 ? 1.0 : 0.0;
        CHECK(testing::dist(a, MultivectorD::one(n) * expect) < 1e-8);
      }
    }

  // a finite Taylor series reproduces polynomial monogenic data
  std::mt19937_64 rng(45);
  PolynomialD f = to_double(random_monogenic(n, 3, rng));
  auto field = [&](const Point& x) { return f.evaluate_as<double>(x); };
  auto full = taylor_coefficients(field, rule, 3);
  for (int t = 0; t < 10; ++t) {
    Point y = add(w, testing::random_in_ball(n, rng, 0.4));
    CHECK(testing::dist(full.evaluate(y), field(y)) < 1e-6);
  }

  // right-sided expansion of right-monogenic data
  PolynomialD g = f.map_coefficients([](const MultivectorD& m) { return m.reversion(); });
  auto gfield = [&](const Point& x) { return g.evaluate_as<double>(x); };
  auto right = taylor_coefficients(gfield, rule, 3, Side::Right);
  for (int t = 0; t < 5; ++t) {
    Point y = add(w, testing::random_in_ball(n, rng, 0.4));
    CHECK(testing::dist(right.evaluate(y), gfield(y)) < 1e-6);
  }
}
