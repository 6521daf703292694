#include <doctest.h>

#include "cliffa/algebra.hpp"
#include "cliffa/error.hpp"
#include "cliffa/textio.hpp"
#include "support.hpp"

using namespace cliffa;

namespace {

MultivectorQ e(int n, std::initializer_list<int> idx) {
  MultivectorQ out = MultivectorQ::one(n);
  for (int j : idx) out = out * MultivectorQ::basis(n, j);
  return out;
}

}  // namespace

TEST_CASE("generators square to -1 and anticommute") {
  const int n = 4;
  CHECK(e(n, {1}) * e(n, {1}) == -MultivectorQ::one(n));
  CHECK(e(n, {1, 2}) * e(n, {1}) == e(n, {2}));
  CHECK(e(n, {1, 2}) * e(n, {1, 2}) == -MultivectorQ::one(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) CHECK(e(n, {i, j}) == -e(n, {j, i}));
}

TEST_CASE("geometric product agrees with the brute-force blade rule") {
  std::mt19937_64 rng(11);
  for (int n : {3, 4, 5, 6}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto a = testing::random_mv(n, rng, 5), b = testing::random_mv(n, rng, 5);
      CHECK(a * b == testing::naive_product(a, b));
    }
  }
}

TEST_CASE("product is associative and distributive (exact)") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = testing::random_mv(5, rng), b = testing::random_mv(5, rng), c = testing::random_mv(5, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("involutions") {
  const int n = 3;
  CHECK(e(n, {1, 2}).reversion() == -e(n, {1, 2}));
  CHECK(e(n, {1}).conjugation() == -e(n, {1}));
  MultivectorQ x = MultivectorQ::vector(n, {3, 4, 0});
  CHECK(x.conjugation() * x == MultivectorQ::scalar(n, 25));

  // reversion and conjugation reverse products; grade involution keeps order
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = testing::random_mv(4, rng), b = testing::random_mv(4, rng);
    CHECK((a * b).reversion() == b.reversion() * a.reversion());
    CHECK((a * b).conjugation() == b.conjugation() * a.conjugation());
    CHECK((a * b).grade_involution() == a.grade_involution() * b.grade_involution());
  }
}

TEST_CASE("vector inverse") {
  const int n = 3;
  CHECK(vector_inverse(e(n, {1})) == -e(n, {1}));
  CHECK(vector_inverse(MultivectorQ::vector(n, {2, 0, 0})) == MultivectorQ::vector(n, {Rational(-1, 2), 0, 0}));
  MultivectorQ x = MultivectorQ::vector(n, {1, 1, 0});
  CHECK(vector_inverse(x) == MultivectorQ::vector(n, {Rational(-1, 2), Rational(-1, 2), 0}));
  CHECK(x * vector_inverse(x) == MultivectorQ::one(n));
  CHECK_THROWS_AS(vector_inverse(MultivectorQ(n)), SingularPoint);
  CHECK_THROWS_AS(vector_inverse(e(n, {1, 2})), InvalidArgument);
}

TEST_CASE("versor inverse of products of vectors") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    MultivectorQ g = MultivectorQ::one(4);
    for (int f = 0; f < 3; ++f) {
      MultivectorQ v(4);
      for (int j = 1; j <= 4; ++j) v += MultivectorQ::basis(4, j) * Rational(std::uniform_int_distribution<int>(-3, 3)(rng));
      if (v.is_zero()) v = MultivectorQ::basis(4, 1);
      g = g * v;
    }
    CHECK(g * versor_inverse(g) == MultivectorQ::one(4));
  }
}

TEST_CASE("quaternionic projectors in Cl_3") {
  auto [ep, em] = quaternion_projectors(3);
  const auto one = MultivectorQ::one(3);
  CHECK(ep + em == one);
  CHECK(ep * ep - ep == MultivectorQ(3));
  CHECK(em * em == em);
  CHECK(ep * em == MultivectorQ(3));
  // e1e2e3 squares to +1 and is central in Cl_3
  MultivectorQ w = e(3, {1, 2, 3});
  CHECK(w * w == one);
  for (int j = 1; j <= 3; ++j) CHECK(w * e(3, {j}) == e(3, {j}) * w);
}

TEST_CASE("unital isomorphism into the even subalgebra") {
  const int m = 3, n = 4;
  CHECK(unital_isomorphism(MultivectorQ::one(m)) == MultivectorQ::one(n));
  CHECK(unital_isomorphism(e(m, {1})) == -e(n, {4}) * e(n, {1}));
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = testing::random_mv(m, rng), b = testing::random_mv(m, rng);
    CHECK(unital_isomorphism(a * b) == unital_isomorphism(a) * unital_isomorphism(b));
    CHECK(unital_isomorphism(a).is_even());
  }
}

TEST_CASE("multivector text format round-trips") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = testing::random_mv(6, rng, 6);
    CHECK(parse_multivector<Rational>(6, to_string(a)) == a);
  }
  CHECK(to_string(MultivectorQ(3)) == "0");
  CHECK(parse_multivector<Rational>(3, "2.5*e12 + 1*e3 - 0.5*1") ==
        e(3, {1, 2}) * Rational(5, 2) + e(3, {3}) - MultivectorQ::scalar(3, Rational(1, 2)));
  MultivectorD d = MultivectorD::vector(3, {0.1, 1.0 / 3, -2e-300});
  CHECK(parse_multivector<double>(3, to_string(d)) == d);
  CHECK(blade_name(testing::indices_blade({1, 11})) == "e1_11");
}
