#include <doctest.h>

#include <complex>

#include "cliffa/algebra.hpp"
#include "cliffa/error.hpp"
#include "cliffa/kernels.hpp"
#include "support.hpp"

using namespace cliffa;

namespace {

testing::Field kernel_field(int n, int k) {
  RadialD g = iterated_kernel(n, k).symbolic.convert<double>();
  return [g](const Point& x) { return g.evaluate(x); };
}

Point away_from_origin(int n, std::mt19937_64& rng) {
  Point x;
  do x = testing::random_point(n, rng, -1.5, 1.5);
  while (norm(x) < 0.5);
  return x;
}

}  // namespace

TEST_CASE("Cauchy kernel") {
  CHECK(testing::dist(eval_cauchy({1, 0, 0}), MultivectorD::basis(3, 1)) == 0);
  CHECK_THROWS_AS(eval_cauchy({0, 0, 0}), SingularPoint);
  // n even: x^{-1} = -x/|x|^2 and (x^{-1})^2 = -1/|x|^2, so
  // x^{-n+1} = (-1)^{n/2} x/|x|^n. With the reversed argument this is
  // G(-x) = (-1)^{(n-2)/2} x^{-n+1}.
  std::mt19937_64 rng(31);
  for (int n : {4, 6})
    for (int trial = 0; trial < 20; ++trial) {
      Point x = away_from_origin(n, rng);
      MultivectorD xi = vector_inverse(testing::vec(x)), p = MultivectorD::one(n);
      for (int i = 0; i < n - 1; ++i) p = p * xi;
      double sign = (n / 2) % 2 ? -1.0 : 1.0;
      CHECK(testing::dist(eval_cauchy(x), p * sign) < 1e-12 * eval_cauchy(x).norm());
      CHECK(testing::dist(eval_cauchy(scale(x, -1)), p * -sign) < 1e-12 * eval_cauchy(x).norm());
    }
}

TEST_CASE("iterated kernel constants follow the hand recurrence") {
  // D(C x r^{-m}) = (m - n) C r^{-m} and D(C r^{-m}) = -m C x r^{-m-2}, so
  // outside the log case C_k = C_{k-1} / (1 - k) for odd k and
  // C_k = -C_{k-1} / (n - k) for even k.
  for (int n : {3, 4, 5, 6, 7}) {
    CHECK(iterated_kernel(n, 1).C == 1);
    CHECK(iterated_kernel(n, 2).C == Rational(-1, n - 2));
    Rational c = 1;
    for (int k = 2; k <= 6; ++k) {
      if (n % 2 == 0 && k >= n) break;
      c = k % 2 ? Rational(c / (1 - k)) : Rational(-c / (n - k));
      auto fam = iterated_kernel(n, k);
      CHECK(fam.C == c);
      CHECK_FALSE(fam.log_case);
    }
  }
  CHECK(iterated_kernel(4, 3).C == Rational(1, 4));
}

TEST_CASE("D G_k = G_{k-1} by finite differences, including the log case") {
  std::mt19937_64 rng(32);
  for (int n : {3, 4, 5, 6})
    for (int k = 2; k <= 6; ++k) {
      auto gk = kernel_field(n, k), gprev = kernel_field(n, k - 1);
      for (int trial = 0; trial < 4; ++trial) {
        Point x = away_from_origin(n, rng);
        MultivectorD lhs = testing::dirac(gk, x, 1e-3), rhs = gprev(x);
        CHECK(testing::dist(lhs, rhs) < 1e-7 * std::max(1.0, rhs.norm()));
      }
    }
  CHECK(iterated_kernel(4, 4).log_case);
  CHECK(iterated_kernel(6, 7).log_case);
}

TEST_CASE("cached and uncached kernel solves agree") {
  for (int n : {3, 4, 6})
    for (int k = 1; k <= 6; ++k) {
      auto a = iterated_kernel(n, k), b = iterated_kernel_uncached(n, k);
      CHECK(a.C == b.C);
      CHECK(a.A == b.A);
      CHECK(a.symbolic.canonical().terms() == b.symbolic.canonical().terms());
    }
}

TEST_CASE("spherical kernels") {
  std::mt19937_64 rng(33);
  for (int n : {2, 3, 4})
    for (int trial = 0; trial < 100; ++trial) {
      Point x = testing::random_unit(n + 1, rng), y = testing::random_unit(n + 1, rng);
      Point d = sub(x, y);
      CHECK(dot(d, d) == doctest::Approx(2 - 2 * dot(x, y)).epsilon(1e-12));
      MultivectorD gs = spherical_G(n, x, y);
      CHECK(testing::dist(gs, spherical_G_closed_form(n, x, y)) < 1e-12 * gs.norm());
      CHECK(testing::dist(gs, testing::vec(d) * std::pow(norm(d), -n)) < 1e-12 * gs.norm());
    }
  Point p = {0, 0, 0, 1};
  CHECK_THROWS_AS(spherical_G(3, p, p), SingularPoint);
}

TEST_CASE("periodic kernel") {
  Point x = {0.3, 0.2, 0.1}, y = {0, 0, 0};
  // empty lattice: plain G(x - y)
  auto s0 = periodic_kernel_cot(3, 0, 0, x, y);
  CHECK(testing::dist(s0.value, eval_cauchy_diff(x, y)) == 0);
  CHECK(s0.terms == 1);

  auto shifted = [](Point p, int j) {
    p[j - 1] += 1;
    return p;
  };
  // antiperiodic in e1, periodic in e2 (k = 2, l = 1)
  auto s = periodic_kernel_cot(3, 2, 1, x, y, 10);
  auto s1 = periodic_kernel_cot(3, 2, 1, shifted(x, 1), y, 10);
  auto s2 = periodic_kernel_cot(3, 2, 1, shifted(x, 2), y, 10);
  CHECK((s1.value + s.value).norm() <= s.boundary_bound);
  CHECK((s2.value - s.value).norm() <= s.boundary_bound);
  CHECK(s.tail_estimate < s.boundary_bound);
  // the defect shrinks with R
  auto big = periodic_kernel_cot(3, 2, 1, x, y, 14);
  auto big1 = periodic_kernel_cot(3, 2, 1, shifted(x, 1), y, 14);
  CHECK((big1.value + big.value).norm() < (s1.value + s.value).norm());
  CHECK_THROWS_AS(periodic_kernel_cot(3, 2, 1, {1, 0, 0}, y), SingularPoint);
  CHECK_THROWS_AS(periodic_kernel_cot(3, 1, 2, x, y), InvalidArgument);
}

TEST_CASE("dilation kernel") {
  Point x = {0.7, 0.2, -0.3}, y = {-0.4, 0.5, 0.6};
  auto one = dilation_kernel(3, x, y, 1);
  CHECK(testing::dist(one.first, eval_cauchy_diff(x, y)) < 1e-15);
  // homogeneity: G(2^j * 2x - 2^j * 2y) re-indexes the first sum
  auto a = dilation_kernel(3, x, y, 30);
  auto b = dilation_kernel(3, scale(x, 2), scale(y, 2), 29);
  CHECK(testing::dist(a.first - eval_cauchy_diff(x, y), b.first) <= a.tail_estimate + 1e-14);
  // monogenic in x away from the orbit
  testing::Field f = [&](const Point& p) { return dilation_kernel(3, p, y, 40).value; };
  CHECK(testing::dirac(f, x, 1e-4).norm() < 1e-5);
  CHECK_THROWS_AS(dilation_kernel(3, scale(y, 2), y), SingularPoint);
}

TEST_CASE("plane-wave projectors") {
  for (int n : {3, 4}) {
    Point zeta(n - 1, 0.0);
    zeta[0] = 0.6;
    if (n > 2) zeta[n - 2] = 0.8;
    MultivectorC pp = plane_wave_projector(n, zeta, 1), pm = plane_wave_projector(n, zeta, -1);
    CHECK((pp * pp - pp).norm() < 1e-15);
    CHECK((pm * pm - pm).norm() < 1e-15);
    CHECK((pp * pm).norm() < 1e-15);
    CHECK((pp + pm - MultivectorC::one(n)).norm() < 1e-15);
    // i zeta e_n p_+ = |zeta| p_+
    MultivectorC z(n);
    for (int j = 0; j < n - 1; ++j) z += MultivectorC::basis(n, j + 1) * Complex(zeta[j], 0);
    MultivectorC lhs = MultivectorC::scalar(n, Complex(0, 1)) * z * MultivectorC::basis(n, n) * pp;
    CHECK((lhs - pp * Complex(norm(zeta), 0)).norm() < 1e-15);
  }
  CHECK_THROWS_AS(plane_wave(3, {0, 0}, 1), InvalidArgument);
}

TEST_CASE("plane waves are monogenic and bounded on their half space") {
  auto w = plane_wave(3, {1.2, -0.5}, 1);
  auto wm = plane_wave(3, {1.2, -0.5}, -1);
  Point x = {0.3, -0.2, 0.4};
  for (const auto& wave : {w, wm}) {
    auto re = [&](const Point& p) { return real_part(plane_wave_eval(wave, p)); };
    auto im = [&](const Point& p) { return imag_part(plane_wave_eval(wave, p)); };
    CHECK(testing::dirac(re, x, 1e-3).norm() < 1e-8);
    CHECK(testing::dirac(im, x, 1e-3).norm() < 1e-8);
  }
  // e_+ decays into the upper half space, e_- into the lower one
  CHECK(plane_wave_eval(w, {0, 0, 5}).norm() < plane_wave_eval(w, {0, 0, 1}).norm());
  CHECK(plane_wave_eval(wm, {0, 0, -5}).norm() < plane_wave_eval(wm, {0, 0, -1}).norm());
}

TEST_CASE("Laplace transform identity") {
  CHECK(std::abs(laplace_planewave_identity(3, 0, 1).numeric - Complex(1, 0)) < 1e-10);
  CHECK(std::abs(laplace_planewave_identity(4, 0, 2).numeric - Complex(0.25, 0)) < 1e-10);
  auto c = laplace_planewave_identity(3, 1, 1);
  Complex expected = 1.0 / ((Complex(1, -1)) * Complex(1, -1));
  CHECK(std::abs(c.closed_form - expected) < 1e-15);
  CHECK(c.relative_error < 1e-8);
  CHECK_THROWS_AS(laplace_planewave_identity(3, 1, 0), InvalidArgument);
}

TEST_CASE("complexified kernel") {
  std::mt19937_64 rng(34);
  for (int n : {2, 4, 6})
    for (int trial = 0; trial < 50; ++trial) {
      Point x = testing::random_point(n, rng), y = testing::random_point(n, rng);
      std::vector<Complex> z(y.begin(), y.end());
      MultivectorC g = complex_kernel_eval(x, z);
      MultivectorD ref = eval_cauchy_diff(x, y);
      CHECK(testing::dist(real_part(g), ref) < 1e-12 * ref.norm());
      CHECK(imag_part(g).norm() < 1e-12 * ref.norm());
    }
  // n = 4, x = 0, z = i e1: (x - z)^2 = 1, value -i e1
  MultivectorC v = complex_kernel_eval({0, 0, 0, 0}, {Complex(0, 1), 0, 0, 0});
  CHECK((v - MultivectorC::basis(4, 1) * Complex(0, -1)).norm() < 1e-15);
  // null cone: x - z = e1 + i e2 squares to zero
  CHECK_THROWS_AS(complex_kernel_eval({1, 0, 0, 0}, {0, Complex(0, -1), 0, 0}), SingularPoint);
  CHECK_THROWS_AS(complex_kernel_eval({1, 0, 0}, {0, 0, 0}), InvalidArgument);
}
