#include <doctest.h>

#include "cliffa/calculus.hpp"
#include "cliffa/error.hpp"
#include "cliffa/kernels.hpp"
#include "cliffa/polyjson.hpp"
#include "cliffa/radial.hpp"
#include "cliffa/series.hpp"
#include "cliffa/textio.hpp"
#include "support.hpp"

using namespace cliffa;

namespace {

PolynomialQ var(int n, int j) { return PolynomialQ::variable(n, j - 1); }
MultivectorQ eb(int n, std::initializer_list<int> idx) {
  MultivectorQ out = MultivectorQ::one(n);
  for (int j : idx) out = out * MultivectorQ::basis(n, j);
  return out;
}

PolynomialQ random_poly(int n, int degree, std::mt19937_64& rng, int terms = 5) {
  PolynomialQ p(n);
  std::uniform_int_distribution<int> slot(0, n - 1), deg(0, degree);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n, 0);
    int d = deg(rng);
    for (int i = 0; i < d; ++i) ++e[slot(rng)];
    p += PolynomialQ::monomial(e, testing::random_mv(n, rng, 2));
  }
  return p;
}

testing::Field as_field(const PolynomialQ& p) {
  auto pd = p.map_coefficients([](const MultivectorQ& c) { return c; });
  return [pd](const Point& x) { return pd.evaluate_as<double>(x); };
}

}  // namespace

TEST_CASE("left Dirac operator on small polynomials") {
  const int n = 4;
  CHECK(dirac_left(PolynomialQ::constant(eb(n, {1, 3}))).is_zero());
  CHECK(dirac_left(PolynomialQ::identity_vector(n)) == PolynomialQ::constant(n, Rational(-n)));
  PolynomialQ p1 = var(n, 2) + eb(n, {1, 2}) * var(n, 1);
  CHECK(dirac_left(p1).is_zero());
  CHECK(dirac_left(PolynomialQ::norm_squared(n)) == PolynomialQ::identity_vector(n) * Rational(2));
}

TEST_CASE("symbolic Dirac operator agrees with finite differences") {
  std::mt19937_64 rng(21);
  for (int n : {3, 4, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      PolynomialQ p = random_poly(n, 3, rng);
      PolynomialQ dp = dirac_left(p);
      Point x = testing::random_point(n, rng);
      MultivectorD fd = testing::dirac(as_field(p), x, 1e-2);
      CHECK(testing::dist(fd, dp.evaluate_as<double>(x)) < 1e-9);
    }
  }
}

TEST_CASE("right Dirac operator and conjugation") {
  // conj reverses products and flips vectors, so conj(D f) = -(conj f) D.
  std::mt19937_64 rng(22);
  auto conj = [](const PolynomialQ& p) { return p.map_coefficients([](const MultivectorQ& c) { return c.conjugation(); }); };
  for (int trial = 0; trial < 50; ++trial) {
    PolynomialQ p = random_poly(3, 3, rng);
    CHECK(conj(dirac_left(p)) == -dirac_right(conj(p)));
  }
  CHECK(dirac_right(PolynomialQ::identity_vector(3)) == PolynomialQ::constant(3, Rational(-3)));
}

TEST_CASE("unital Dirac operator") {
  const int m = 3;
  auto X = [&](int j) { return PolynomialQ::variable(m, j, VariableKind::Unital); };
  auto C = [&](const MultivectorQ& c) { return PolynomialQ::constant(c, VariableKind::Unital); };
  CHECK(dirac_unital(X(0)) == C(MultivectorQ::one(m)));
  CHECK(dirac_unital(X(0) - eb(m, {1}) * X(1)) == C(MultivectorQ::scalar(m, 2)));
  CHECK(dirac_unital(X(0) + eb(m, {1}) * X(1)).is_zero());
  CHECK(dirac_unital(eb(m, {1}) * X(0) + X(1)) == C(eb(m, {1}) * Rational(2)));

  // D' conj(D') = Laplacian on random quadratics
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    PolynomialQ q(m, VariableKind::Unital);
    std::uniform_int_distribution<int> slot(0, m);
    for (int t = 0; t < 4; ++t) {
      Exponent e(m + 1, 0);
      ++e[slot(rng)];
      ++e[slot(rng)];
      q += PolynomialQ::monomial(e, testing::random_mv(m, rng, 2), VariableKind::Unital);
    }
    CHECK(dirac_unital(dirac_unital_conjugate(q)) == laplacian(q));
    CHECK(dirac_unital_conjugate(dirac_unital(q)) == laplacian(q));
  }
}

TEST_CASE("Euler operator") {
  const int n = 3;
  CHECK(euler(PolynomialQ::constant(n, Rational(5))).is_zero());
  PolynomialQ p = var(n, 1).pow(2) * var(n, 2);
  CHECK(euler(p) == p * Rational(3));
  for (int d = 0; d <= 3; ++d)
    for (const auto& idx : enumerate_multi_indices(n, d)) {
      PolynomialQ v = fueter_polynomial(n, idx);
      CHECK(euler(v) == v * Rational(d));
    }
}

TEST_CASE("angular operator on a linear form") {
  // Lambda <x, y'> = x y' + <x, y'> for a constant vector y'.
  const int n = 4;
  std::vector<Rational> y = {Rational(1, 2), -2, 3, Rational(1, 3)};
  MultivectorQ Y = MultivectorQ::vector(n, y);
  PolynomialQ lin(n);
  for (int j = 1; j <= n; ++j) lin += var(n, j) * y[j - 1];
  CHECK(angular(lin) == PolynomialQ::identity_vector(n) * Y + lin);
  CHECK(angular(PolynomialQ::constant(n, Rational(7))).is_zero());
}

TEST_CASE("angular and Euler operators split x D") {
  // x D = -E + Lambda on any polynomial: the diagonal terms give -E, the
  // off-diagonal pairs e_i e_j (x_i d_j - x_j d_i) give Lambda.
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    PolynomialQ p = random_poly(4, 3, rng);
    CHECK(times_x(dirac_left(p)) == angular(p) - euler(p));
  }
}

TEST_CASE("Fueter polynomials") {
  const int n = 3;
  CHECK(fueter_polynomial(n, {0, 0}) == PolynomialQ::constant(n, Rational(1)));
  CHECK(fueter_polynomial(n, {1, 0}) == var(n, 2) + eb(n, {1, 2}) * var(n, 1));
  PolynomialQ v11 = fueter_polynomial(4, {1, 1, 0});
  CHECK(dirac_left(v11).is_zero());
  for (const auto& [e, c] : v11.terms())
    for (const auto& [b, s] : c.terms()) CHECK((blade_grade(b) == 0 || blade_grade(b) == 2));
  for (int m : {3, 4, 5})
    for (int d = 0; d <= 4; ++d) {
      auto idx = enumerate_multi_indices(m, d);
      // C(d + m - 2, m - 2) indices of length m - 1 summing to d
      long count = 1;
      for (int i = 1; i <= m - 2; ++i) count = count * (d + i) / i;
      CHECK(static_cast<long>(idx.size()) == count);
    }
}

TEST_CASE("Cauchy-Kowalewska extension") {
  const int n = 3;
  CHECK(ck_extension(PolynomialQ::constant(n, Rational(1))) == PolynomialQ::constant(n, Rational(1)));
  CHECK(ck_extension(var(n, 2)) == var(n, 2) + eb(n, {1, 2}) * var(n, 1));
  // The x1^2 term comes with a minus sign: D of the result must vanish.
  PolynomialQ ext = ck_extension(var(n, 2).pow(2));
  PolynomialQ expected = var(n, 2).pow(2) + eb(n, {1, 2}) * (var(n, 1) * var(n, 2) * Rational(2)) - var(n, 1).pow(2);
  CHECK(ext == expected);
  CHECK(dirac_left(expected).is_zero());
  CHECK_THROWS_AS(ck_extension(var(n, 1)), InvalidArgument);
}

TEST_CASE("radial expressions") {
  const int n = 3;
  RadialD g = cauchy_kernel_expr(n).convert<double>();
  MultivectorD v = g.evaluate({2, 0, 0});
  CHECK(testing::dist(v, MultivectorD::basis(n, 1) * 0.25) < 1e-15);
  CHECK_THROWS_AS(g.evaluate({0, 0, 0}), SingularPoint);
  std::mt19937_64 rng(25);
  for (int m : {3, 4, 5, 6})
    for (int trial = 0; trial < 25; ++trial) {
      Point x = testing::random_point(m, rng);
      double r = std::sqrt(dot(x, x));
      CHECK(testing::dist(cauchy_kernel_expr(m).convert<double>().evaluate(x), testing::vec(x) * std::pow(r, -m)) < 1e-12);
    }
  // D G = 0 symbolically, and its finite-difference counterpart
  for (int m : {3, 4, 5, 6}) CHECK(dirac_left(cauchy_kernel_expr(m)).canonical().terms().empty());
}

TEST_CASE("polynomial text and JSON formats round-trip") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 30; ++trial) {
    PolynomialQ p = random_poly(4, 4, rng, 6);
    CHECK(parse_polynomial<Rational>(4, to_string(p)) == p);
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  }
  CHECK(to_string(PolynomialQ(3)) == "0");
  CHECK(polynomial_from_json(polynomial_to_json(PolynomialQ(3))) == PolynomialQ(3));
  PolynomialQ u = PolynomialQ::variable(2, 0, VariableKind::Unital) * Rational(1, 3);
  CHECK(polynomial_from_json(polynomial_to_json(u)) == u);
  CHECK_THROWS_AS(polynomial_from_json("{\"dim\": 3, \"terms\": [{\"exponent\": [1], \"coefficient\": {}}]}"), ParseError);
  CHECK_THROWS_AS(polynomial_from_json("not json"), ParseError);
}

TEST_CASE("hand-written polynomial text") {
  const int n = 3;
  auto parse = [](std::string_view s) { return parse_polynomial<Rational>(3, s); };
  PolynomialQ h = var(n, 1).pow(2) - var(n, 2).pow(2);
  CHECK(parse("x1^2 - x2^2") == h);
  CHECK(parse("1*x1^2 + (-1)*x2^2") == h);
  CHECK(parse("-x2^2 + x1^2") == h);
  CHECK(parse("2.5*e12*x1 + 1*e3 - 0.5*1") ==
        eb(n, {1, 2}) * var(n, 1) * Rational(5, 2) + PolynomialQ::constant(eb(n, {3})) -
            PolynomialQ::constant(n, Rational(1, 2)));
  CHECK(parse("1.5e-3*x1") == var(n, 1) * Rational(3, 2000));
  CHECK(parse("(1 - e12)*x1*x2") == (PolynomialQ::constant(n, Rational(1)) - PolynomialQ::constant(eb(n, {1, 2}))) *
                                        var(n, 1) * var(n, 2));
  CHECK(parse("x1*x1") == var(n, 1).pow(2));
  for (const char* bad : {"x1 +", "x1 - -x2", "x4", "x1^", "(e1", "x1**x2", "y1"}) CHECK_THROWS_AS(parse(bad), ParseError);
}
