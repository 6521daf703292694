#include <doctest.h>

#include <numbers>

#include "cliffa/calculus.hpp"
#include "cliffa/error.hpp"
#include "cliffa/integration.hpp"
#include "cliffa/quadrature.hpp"
#include "cliffa/series.hpp"
#include "support.hpp"

using namespace cliffa;

namespace {

constexpr double pi = std::numbers::pi;

Density poly_density(const PolynomialQ& p) { return BoundaryDensity::from_polynomial(p).eval; }

// P1 = x2 + x1 e1e2, written out by hand
MultivectorD p1(const Point& x) {
  MultivectorD e12 = MultivectorD::blade(static_cast<int>(x.size()), 0b11);
  return MultivectorD::scalar(static_cast<int>(x.size()), x[1]) + e12 * x[0];
}

}  // namespace

TEST_CASE("sphere quadrature") {
  CHECK(sphere_rule(3, {0, 0, 0}, 1, 12).total_weight() == doctest::Approx(4 * pi).epsilon(1e-13));
  CHECK(sphere_rule(4, {0, 0, 0, 0}, 1, 12).total_weight() == doctest::Approx(2 * pi * pi).epsilon(1e-13));
  CHECK(sphere_rule(3, {1, 2, 3}, 2, 12).total_weight() == doctest::Approx(16 * pi).epsilon(1e-13));
  CHECK(sphere_area(5) == doctest::Approx(8 * pi * pi / 3).epsilon(1e-14));
  // the product rule is spectrally accurate rather than exact in the angles
  for (int n : {3, 4, 5}) {
    auto rule = sphere_rule(n, Point(n, 0.0), 1, 24);
    double s = 0, worst = 0;
    for (const auto& q : rule.nodes) {
      s += q.w * q.x[0] * q.x[0];
      worst = std::max({worst, std::abs(norm(q.x) - 1), std::abs(dot(q.x, q.normal) - 1)});
    }
    CHECK(worst < 1e-14);
    CHECK(std::abs(s / sphere_area(n) * n - 1) < 1e-11);
  }
  // Monte Carlo rule for high dimensions: equal weights summing to the area
  auto mc = monte_carlo_sphere_rule(6, Point(6, 0.0), 1, 2000, 5);
  CHECK(mc.total_weight() == doctest::Approx(sphere_area(6)).epsilon(1e-12));
  auto ball = ball_rule(3, {0, 0, 0}, 1, 10);
  CHECK(ball.total_weight() == doctest::Approx(4 * pi / 3).epsilon(1e-12));
  CHECK_THROWS_AS(sphere_rule(3, {0, 0}, 1, 8), InvalidArgument);
}

TEST_CASE("Cauchy theorem") {
  auto rule = sphere_rule(3, {0.1, 0.2, -0.1}, 1, 16);
  CHECK(surface_integral({}, {}, rule).norm() < 1e-13);
  CHECK(surface_integral({}, p1, rule).norm() < 1e-8);
  // flux of the gradient of a harmonic function vanishes
  Density grad = [](const Point& x) { return MultivectorD::vector(3, {2 * x[0], -2 * x[1], 0}); };
  CHECK(std::abs(surface_integral(grad, {}, rule).scalar_part()) < 1e-12);
}

TEST_CASE("Cauchy integral formula") {
  const int n = 3;
  Point c = {0.2, -0.1, 0.3};
  auto rule = sphere_rule(n, c, 1, 24);
  Density one = [](const Point&) { return MultivectorD::one(3); };
  std::mt19937_64 rng(51);
  for (int t = 0; t < 10; ++t) {
    Point y = add(c, testing::random_in_ball(n, rng, 0.5));
    CHECK(testing::dist(cauchy_integral(one, y, rule), MultivectorD::one(n)) < 1e-8);
    CHECK(testing::dist(cauchy_integral(p1, y, rule), p1(y)) < 1e-7);
    // right-monogenic data through the right-handed formula
    Density rp1 = [](const Point& x) { return p1(x).reversion(); };
    CHECK(testing::dist(cauchy_integral(rp1, y, rule, false), rp1(y)) < 1e-7);
    Point far = add(c, scale(testing::random_unit(n, rng), 2.5));
    CHECK(cauchy_integral(p1, far, rule).norm() < 1e-7);
  }
}

TEST_CASE("mean-value properties") {
  const int n = 3;
  Density one = [](const Point&) { return MultivectorD::one(3); };
  CHECK(testing::dist(surface_mean(one, sphere_rule(n, {0, 0, 0}, 0.7, 12)), MultivectorD::one(n)) < 1e-12);
  Density h = [](const Point& x) { return MultivectorD::scalar(3, x[0] * x[0] - x[1] * x[1]); };
  CHECK(surface_mean(h, sphere_rule(n, {0, 0, 0}, 1, 12)).norm() < 1e-12);
  Point y = {0.3, 0.1, -0.2};
  CHECK(testing::dist(surface_mean(p1, sphere_rule(n, y, 0.5, 12)), p1(y)) < 1e-12);
  CHECK(testing::dist(mean_value_ball(p1, ball_rule(n, {0, 0, 0}, 0.5, 12)), MultivectorD(n)) < 1e-7);
  CHECK(testing::dist(mean_value_ball(p1, ball_rule(n, y, 0.5, 12)), p1(y)) < 1e-7);
}

TEST_CASE("Green and Cauchy-Green formulas") {
  const int n = 3;
  auto rule = sphere_rule(n, {0, 0, 0}, 1, 32);
  Density h = [](const Point& x) { return MultivectorD::scalar(3, x[0] * x[0] - x[1] * x[1]); };
  Density dh = [](const Point& x) { return MultivectorD::vector(3, {2 * x[0], -2 * x[1], 0}); };
  Density c = [](const Point&) { return MultivectorD::scalar(3, 2.5); };
  Density zero = [](const Point&) { return MultivectorD(3); };
  std::mt19937_64 rng(52);
  for (int t = 0; t < 5; ++t) {
    Point y = testing::random_in_ball(n, rng, 0.5);
    CHECK(testing::dist(greens_formula(h, dh, y, rule), h(y)) < 1e-7);
    CHECK(testing::dist(greens_formula(c, zero, y, rule), c(y)) < 1e-10);
    CHECK(testing::dist(greens_formula(p1, zero, y, rule), cauchy_integral(p1, y, rule)) < 1e-12);

    // k = 1 reduces to the Cauchy formula
    CHECK(testing::dist(cauchy_green_k({p1}, y, rule), p1(y)) < 1e-7);
    // k = 2, f = x with D x = -n
    Density x = [](const Point& p) { return testing::vec(p); };
    Density dx = [](const Point&) { return MultivectorD::scalar(3, -3); };
    CHECK(testing::dist(cauchy_green_k({x, dx}, y, rule), x(y)) < 1e-7);
    // k = 3, f = x P1
    PolynomialQ f = times_x(fueter_polynomial(n, {1, 0}));
    std::vector<Density> derivs = {poly_density(f), poly_density(dirac_left(f)), poly_density(dirac_power(f, 2))};
    CHECK(testing::dist(cauchy_green_k(derivs, y, rule), derivs[0](y)) < 1e-6);
  }
}

TEST_CASE("Cauchy transform of point masses") {
  const int n = 3;
  Point y = {0.3, -0.4, 0.2};
  auto one = cauchy_transform({{{0, 0, 0}, MultivectorD::one(n)}}, y);
  CHECK(testing::dist(one, testing::vec(y) * std::pow(norm(y), -3)) < 1e-15);
  // masses at +-e1 seen from the x2 axis: the e1 component cancels
  auto pair = cauchy_transform({{{1, 0, 0}, MultivectorD::one(n)}, {{-1, 0, 0}, MultivectorD::one(n)}}, {0, 0.7, 0});
  CHECK(std::abs(pair.component(1)) < 1e-15);
  CHECK(std::abs(pair.component(2)) > 0.1);
  // monogenic away from the masses
  testing::Field t = [](const Point& p) {
    return cauchy_transform({{{1, 0, 0}, MultivectorD::basis(3, 2)}, {{0, 1, 1}, MultivectorD::scalar(3, -0.5)}}, p);
  };
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) CHECK(testing::dirac(t, testing::random_point(n, rng, 2, 3), 1e-3).norm() < 1e-6);
}

TEST_CASE("holomorphic extension") {
  const int n = 4;
  auto rule = sphere_rule(n, Point(n, 0.0), 1, 20);
  auto f = poly_density(fueter_polynomial(n, {1, 0, 0}));
  Point y = {0.1, 0.2, -0.1, 0.05};
  std::vector<Complex> z(y.begin(), y.end());
  MultivectorC v = holomorphic_extension(f, z, rule);
  CHECK(testing::dist(real_part(v), f(y)) < 1e-7);
  CHECK(imag_part(v).norm() < 1e-7);
  // P1 is linear, so its complexification is P1(Re z) + i P1(Im z)
  z[0] += Complex(0, 0.1);
  Point im = {0.1, 0, 0, 0};
  MultivectorC w = holomorphic_extension(f, z, rule);
  CHECK(testing::dist(real_part(w), f(y)) < 1e-6);
  CHECK(testing::dist(imag_part(w), f(im)) < 1e-6);
  CHECK_THROWS_AS(holomorphic_extension(f, {0, 0, 0}, sphere_rule(3, {0, 0, 0}, 1, 8)), InvalidArgument);
}

TEST_CASE("Plemelj projections on the unit sphere") {
  const int n = 3;
  auto sphere = sphere_rule(n, {0, 0, 0}, 1, 16);
  std::mt19937_64 rng(54);
  for (int t = 0; t < 4; ++t) {
    Point z = testing::random_unit(n, rng);
    CHECK(std::abs(pv_constant(n, z, 16) - 0.5) < 1e-10);
    Density one = [](const Point&) { return MultivectorD::one(3); };
    CHECK(testing::dist(singular_cauchy(one, z, sphere), MultivectorD::one(n) * 0.5) < 1e-10);
    // inner data: C theta = theta / 2
    CHECK(testing::dist(singular_cauchy(p1, z, sphere), p1(z) * 0.5) < 1e-5);
    // outer data G(x) = x on the sphere: C theta = -theta / 2
    Density x = [](const Point& p) { return testing::vec(p); };
    CHECK(testing::dist(singular_cauchy(x, z, sphere), testing::vec(z) * -0.5) < 1e-5);
  }
  Density mix = [](const Point& p) { return p1(p) + testing::vec(p); };
  auto split = hardy_split(mix, sphere);
  for (int t = 0; t < 3; ++t) {
    Point z = testing::random_unit(n, rng);
    CHECK(testing::dist(split.inner(z), p1(z)) < 1e-4);
    CHECK(testing::dist(split.outer(z), testing::vec(z)) < 1e-4);
  }
}

TEST_CASE("spherical Cauchy formula on a hemisphere") {
  const int n = 3;
  Point pole = {0, 0, 0, -1};
  auto cap = cap_boundary_rule(n, pole, pi / 2, 24);
  for (const auto& q : cap.nodes) {
    CHECK(norm(q.x) == doctest::Approx(1).epsilon(1e-13));
    CHECK(std::abs(dot(q.normal, q.x)) < 1e-13);
  }
  // sphere Cayley map round trip
  std::mt19937_64 rng(55);
  for (int t = 0; t < 10; ++t) {
    Point y = testing::random_point(n, rng);
    Point s = sphere_cayley(y);
    CHECK(norm(s) == doctest::Approx(1).epsilon(1e-14));
    Point back = sphere_cayley_inverse(s);
    CHECK(norm(sub(back, y)) < 1e-12);
  }
  Density fprime = sphere_pullback(p1);
  for (int t = 0; t < 5; ++t) {
    Point yp = sphere_cayley(testing::random_in_ball(n, rng, 0.5));
    CHECK(testing::dist(spherical_cauchy(fprime, yp, cap), fprime(yp)) < 1e-5);
  }
}
