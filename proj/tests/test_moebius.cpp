#include <doctest.h>

#include "cliffa/calculus.hpp"
#include "cliffa/error.hpp"
#include "cliffa/moebius.hpp"
#include "cliffa/quadrature.hpp"
#include "cliffa/series.hpp"
#include "support.hpp"

using namespace cliffa;

namespace {

Point point_inverse(const Point& x) { return scale(x, -1 / dot(x, x)); }

// x - 2 <x, u> u / |u|^2
Point reflect(const Point& x, const Point& u) { return sub(x, scale(u, 2 * dot(x, u) / dot(u, u))); }

// psi(x) = e + 2 (x + e)^{-1}, with y^{-1} = -y / |y|^2
Point cayley_by_hand(const Point& x, int axis, int sign) {
  Point e(x.size(), 0.0);
  e[axis - 1] = sign;
  return add(e, scale(point_inverse(add(x, e)), 2));
}

double point_dist(const Point& a, const Point& b) { return norm(sub(a, b)); }

Point away_from(const Point& pole, int n, std::mt19937_64& rng, double gap = 0.3) {
  Point x;
  do x = testing::random_point(n, rng, -2, 2);
  while (point_dist(x, pole) < gap);
  return x;
}

}  // namespace

TEST_CASE("generators act as the elementary maps") {
  const int n = 3;
  std::mt19937_64 rng(61);
  Point v = {0.5, -1, 2}, u1 = testing::random_unit(n, rng), u2 = testing::random_unit(n, rng);
  for (int t = 0; t < 30; ++t) {
    Point x = away_from(Point(n, 0.0), n, rng);
    CHECK(point_dist(moebius_apply(VahlenMatrix::identity(n), x), x) < 1e-15);
    CHECK(point_dist(moebius_apply(translation(n, v), x), add(x, v)) < 1e-14);
    CHECK(point_dist(moebius_apply(dilation(n, 2.5), x), scale(x, 2.5)) < 1e-14);
    CHECK(point_dist(moebius_apply(inversion(n), x), point_inverse(x)) < 1e-14);
    // u1 u2 x (u1 u2)^{-1} is the product of the two hyperplane reflections
    CHECK(point_dist(moebius_apply(rotation(n, u1, u2), x), reflect(reflect(x, u2), u1)) < 1e-13);
  }
  CHECK(point_dist(moebius_apply(inversion(n), {1, 0, 0}), {-1, 0, 0}) < 1e-15);
  CHECK_THROWS_AS(moebius_apply(inversion(n), {0, 0, 0}), PoleError);
  CHECK_THROWS_AS(dilation(n, -1), InvalidArgument);
  CHECK_THROWS_AS(rotation(n, {0, 0, 0}, u2), InvalidArgument);
}

TEST_CASE("Cayley maps") {
  for (int n : {2, 3, 4}) {
    Point zero(n, 0.0), en(n, 0.0);
    en[n - 1] = -1;
    CHECK(point_dist(moebius_apply(cayley(n, n), zero), en) < 1e-14);
    std::mt19937_64 rng(62 + n);
    for (int t = 0; t < 20; ++t) {
      Point x = testing::random_point(n, rng, -3, 3);
      x[0] = 0;  // the hyperplane orthogonal to e1
      for (int sign : {1, -1}) {
        Point s = moebius_apply(cayley(n, 1, sign), x);
        CHECK(point_dist(s, cayley_by_hand(x, 1, sign)) < 1e-12);
        CHECK(norm(s) == doctest::Approx(1).epsilon(1e-12));
        CHECK(point_dist(moebius_apply(cayley_inverse(n, 1, sign), s), x) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(cayley(3, 4), InvalidArgument);
  CHECK_THROWS_AS(cayley(3, 1, 2), InvalidArgument);
}

TEST_CASE("composition and inverses") {
  const int n = 4;
  std::mt19937_64 rng(63);
  for (int t = 0; t < 20; ++t) {
    VahlenMatrix a = random_generator_product(n, 2, rng), b = random_generator_product(n, 3, rng);
    Point x = testing::random_point(n, rng, -2, 2);
    try {
      Point ab = moebius_apply(a * b, x);
      CHECK(point_dist(ab, moebius_apply(a, moebius_apply(b, x))) < 1e-9 * std::max(1.0, norm(ab)));
      CHECK(point_dist(moebius_apply(inverse(a * b), ab), x) < 1e-9 * std::max(1.0, norm(ab)));
    } catch (const PoleError&) {
      // drew a point too close to a pole of one of the factors
    }
  }
}

TEST_CASE("conformal weights") {
  const int n = 3;
  std::mt19937_64 rng(64);
  for (int t = 0; t < 20; ++t) {
    Point x = away_from(Point(n, 0.0), n, rng);
    CHECK(testing::dist(weight(translation(n, {1, 2, 3}), x), MultivectorD::one(n)) < 1e-15);
    // inversion: c x + d = x, so J = rev(x) / |x|^n = x / |x|^n
    MultivectorD expect = testing::vec(x) * std::pow(norm(x), -n);
    CHECK(testing::dist(weight(inversion(n), x), expect) < 1e-14 * expect.norm());
    // J_k: odd k keeps the vector factor, even k is a scalar power
    CHECK(testing::dist(weight_k(inversion(n), x, 1), expect) < 1e-14 * expect.norm());
    CHECK(testing::dist(weight_k(inversion(n), x, 2), MultivectorD::one(n) * std::pow(norm(x), 2 - n)) < 1e-13);
    MultivectorD j3 = testing::vec(x) * std::pow(norm(x), 3 - n - 1);
    CHECK(testing::dist(weight_k(inversion(n), x, 3), j3) < 1e-13 * std::max(1.0, j3.norm()));
  }
  CHECK_THROWS_AS(weight_k(inversion(n), {1, 0, 0}, 0), InvalidArgument);
}

TEST_CASE("kernel covariance") {
  std::mt19937_64 rng(65);
  for (int n : {3, 4}) {
    double worst_t = 0, worst_i = 0, worst_r = 0;
    Point v(n, 0.4);
    for (int t = 0; t < 100; ++t) {
      Point x = away_from(Point(n, 0.0), n, rng), y = away_from(x, n, rng);
      if (norm(y) < 0.3) continue;
      worst_t = std::max(worst_t, kernel_covariance_residual(translation(n, v), x, y));
      worst_i = std::max(worst_i, kernel_covariance_residual(inversion(n), x, y));
      VahlenMatrix m = random_generator_product(n, 4, rng);
      try {
        worst_r = std::max(worst_r, kernel_covariance_residual(m, x, y));
      } catch (const SingularPoint&) {
      }
    }
    CHECK(worst_t < 1e-14);
    CHECK(worst_i < 1e-9);
    CHECK(worst_r < 1e-8);
  }
}

TEST_CASE("pullbacks of monogenic functions stay monogenic") {
  const int n = 3;
  std::mt19937_64 rng(66);
  Density one = [](const Point&) { return MultivectorD::one(3); };
  Density p = BoundaryDensity::from_polynomial(fueter_polynomial(n, {1, 1})).eval;
  for (const VahlenMatrix& m : {VahlenMatrix::identity(n), translation(n, {0.3, 0, -1}), inversion(n),
                                rotation(n, {1, 0, 0}, {0.6, 0.8, 0}), cayley(n, 2)}) {
    for (const Density& f : {one, p}) {
      Density h = pullback(m, f);
      for (int t = 0; t < 3; ++t) {
        Point x;
        do x = testing::random_point(n, rng, -1.5, 1.5);
        while (denominator(m, x).norm() < 0.4);
        CHECK(testing::dirac(h, x, 1e-3).norm() < 1e-6);
      }
    }
  }
  // identity pullback is the function itself
  Point x = {0.2, 0.4, -0.6};
  CHECK(testing::dist(pullback(VahlenMatrix::identity(n), p)(x), p(x)) < 1e-15);
}

TEST_CASE("change of variables on a sphere") {
  const int n = 3;
  Point c = {0.3, 2.2, 1.2};
  auto rule = sphere_rule(n, c, 0.5, 24);
  Density one = [](const Point&) { return MultivectorD::one(3); };
  auto id = change_of_variables(VahlenMatrix::identity(n), one, one, rule);
  CHECK(id.residual < 1e-12);
  CHECK_FALSE(id.orientation_reversed);
  auto dil = change_of_variables(dilation(n, 2), one, one, rule);
  CHECK(dil.residual < 1e-12);

  Density f = BoundaryDensity::from_polynomial(fueter_polynomial(n, {2, 0}) + PolynomialQ::identity_vector(n)).eval;
  Density g = BoundaryDensity::from_polynomial(PolynomialQ::norm_squared(n)).eval;
  for (const VahlenMatrix& m : {cayley(n, 1), cayley_inverse(n, 1), inversion(n) * dilation(n, 1.5)}) {
    auto out = change_of_variables(m, f, g, rule);
    CHECK(out.residual < 1e-5);
  }
  // with the pole outside the ball the image ball is not turned inside out
  auto inv = change_of_variables(inversion(n), f, g, rule);
  CHECK_FALSE(inv.orientation_reversed);
  CHECK(inv.residual < 1e-5);
  // the sphere through the inversion pole
  auto bad = sphere_rule(n, {0.2, 0, 0}, 0.5, 8);
  CHECK_THROWS_AS(change_of_variables(inversion(n), one, one, bad), PoleError);
}

TEST_CASE("extension from the unit sphere") {
  const int n = 3;
  std::mt19937_64 rng(67);
  PolynomialQ p1 = fueter_polynomial(n, {1, 0});
  SphereCK ext(p1);
  PolynomialD pd = p1.convert<double>();
  SphereCK unit(PolynomialQ::constant(n, Rational(1)));
  for (int t = 0; t < 10; ++t) {
    Point x = scale(testing::random_unit(n, rng), 0.95 + 0.01 * t);
    CHECK(testing::dist(ext(x), pd.evaluate(x)) < 1e-8);
    CHECK(testing::dist(unit(x), MultivectorD::one(n)) < 1e-8);
  }
  // non-monogenic data: only the restriction to the sphere is reproduced,
  // and the extension is monogenic nearby
  SphereCK x1(PolynomialQ::variable(n, 0));
  for (int t = 0; t < 10; ++t) {
    Point u = testing::random_unit(n, rng);
    CHECK(testing::dist(x1(u), MultivectorD::scalar(n, u[0])) < 1e-6);
    CHECK(testing::dirac([&](const Point& p) { return x1(p); }, scale(u, 1.02), 1e-3).norm() < 1e-5);
  }
  CHECK_THROWS_AS(SphereCK(p1, 0), InvalidArgument);
}

TEST_CASE("generator language") {
  const int n = 3;
  VahlenMatrix m = parse_generators(n, "inv,trans:1,0,2,dil:2,cayley:2");
  REQUIRE(m.provenance.size() == 4);
  VahlenMatrix by_hand = inversion(n) * translation(n, {1, 0, 2}) * dilation(n, 2) * cayley(n, 2);
  Point x = {0.4, 0.1, -0.3};
  CHECK(point_dist(moebius_apply(m, x), moebius_apply(by_hand, x)) < 1e-14);
  // describe() prints something the parser accepts again
  VahlenMatrix again = parse_generators(n, describe(m));
  CHECK(point_dist(moebius_apply(again, x), moebius_apply(m, x)) < 1e-12);
  VahlenMatrix r = parse_generators(n, "rot:1,0,0/0,1,0");
  CHECK(point_dist(moebius_apply(r, x), reflect(reflect(x, {0, 1, 0}), {1, 0, 0})) < 1e-14);

  for (const char* bad : {"", "bogus", "trans:1,2", "1,inv", "inv:3", "rot:1,0,0", "cayley:9", "dil:1,2"})
    CHECK_THROWS_AS(parse_generators(n, bad), ParseError);

  // inverse(m) * m acts as the identity
  VahlenMatrix id = inverse(m) * m;
  for (const Point& y : {Point{0.7, -0.2, 0.5}, Point{-1.1, 0.3, 0.9}})
    CHECK(point_dist(moebius_apply(id, y), y) < 1e-10);
}
