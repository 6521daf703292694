#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cliffa/integration.hpp"
#include "cliffa/kernels.hpp"

namespace cliffa {

enum class GeneratorKind { Translation, Dilation, Rotation, Inversion, Cayley };

struct Generator {
  GeneratorKind kind = GeneratorKind::Translation;
  Point v;            // translation vector
  double lambda = 1;  // dilation factor
  Point u1, u2;       // rotation x -> (u1 u2) x (u1 u2)^{-1}
  int axis = 1;       // Cayley axis e_axis
  int sign = 1;       // Cayley direction e = sign * e_axis
  bool inverse = false;  // inverse Cayley map
};

// x -> (a x + b)(c x + d)^{-1}. Built only from generators; `provenance`
// lists them left to right, so moebius_apply(M, x) = g_1(g_2(...g_m(x))).
struct VahlenMatrix {
  int n = 0;
  MultivectorD a, b, c, d;
  std::vector<Generator> provenance;

  static VahlenMatrix identity(int n);
  friend VahlenMatrix operator*(const VahlenMatrix& l, const VahlenMatrix& r);
};

VahlenMatrix translation(int n, const Point& v);
VahlenMatrix dilation(int n, double lambda);  // [[sqrt(l), 0], [0, 1/sqrt(l)]]
VahlenMatrix rotation(int n, const Point& u1, const Point& u2);
VahlenMatrix inversion(int n);  // x -> x^{-1}
// psi(x) = e + 2 (x + e)^{-1} = (e x + 1)(x + e)^{-1}: maps the hyperplane
// orthogonal to e = e_axis onto the unit sphere (0 -> -e, infinity -> e).
// Normalised by 1/sqrt(2) so that |cx + d|^{-2} is the conformal factor.
VahlenMatrix cayley(int n, int axis = 1, int sign = 1);
VahlenMatrix cayley_inverse(int n, int axis = 1, int sign = 1);
VahlenMatrix from_generator(int n, const Generator& g);

// The matrix of the inverse map, built from the inverted generators in
// reverse order.
VahlenMatrix inverse(const VahlenMatrix& m);

// c x + d; PoleError when its norm is below 1e-8.
MultivectorD denominator(const VahlenMatrix& m, const Point& x);

// The point map x -> (ax + b)(cx + d)^{-1}. Throws PoleError at (or within
// 1e-8 of) a pole.
Point moebius_apply(const VahlenMatrix& m, const Point& x);

// J(M, x) = rev(cx + d) / |cx + d|^n.
MultivectorD weight(const VahlenMatrix& m, const Point& x);
// J_k: rev(cx + d) / |cx + d|^{n-k+1} for odd k, |cx + d|^{k-n} for even k.
MultivectorD weight_k(const VahlenMatrix& m, const Point& x, int k);

// |G(M x - M y) - J(M, x)^{-1} G(x - y) conj(J(M, y))^{-1}| / |G(M x - M y)|
double kernel_covariance_residual(const VahlenMatrix& m, const Point& x, const Point& y);

// x -> J_k(M, x) f(M x); k = 1 gives the monogenic pullback.
Density pullback(const VahlenMatrix& m, const Density& f, int k = 1);

// Lemma-2 type change of variables on a sphere S (given by `rule`):
// int_{M(S)} f n g dsigma against int_S f(Mx) rev(J) n J g(Mx) dsigma.
// The image sphere is recovered from mapped points and integrated with a
// rule of the same resolution. The image side is oriented to match
// rev(J) n J, which is minus the pushed-forward normal for maps with an odd
// number of inversions.
struct ChangeOfVariables {
  MultivectorD image_side;
  MultivectorD weighted_side;
  double residual = 0;
  bool orientation_reversed = false;
};
ChangeOfVariables change_of_variables(const VahlenMatrix& m, const Density& f, const Density& g,
                                      const QuadratureRule& rule);

// Generator DSL: comma-separated tokens "inv", "trans:v1,v2,..",
// "dil:lambda", "rot:u1/u2" (components comma-separated), "cayley[:axis]".
// Numeric tokens continue the arguments of the preceding generator.
VahlenMatrix parse_generators(int n, std::string_view text);
std::string describe(const VahlenMatrix& m);

// Product of `count` random generators drawn from translation, dilation,
// rotation and inversion.
VahlenMatrix random_generator_product(int n, int count, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Cauchy-Kowalewska extension from the unit sphere S^{n-1}.
//
// The data f is pulled to the hyperplane y1 = 0 through a Cayley map phi
// with axis +-e1 (the sign is chosen per point so that the pole of phi^{-1}
// stays on the far side of the sphere): l(y) = J(phi, y) f(phi(y)). Its
// flat extension L = sum_k y1^k / k! (e1 D')^k l is evaluated from a
// truncated Taylor jet of l about the foot point, and
// F(x) = J(phi^{-1}, x) L(phi^{-1} x).
class SphereCK {
 public:
  // f is a polynomial in x1..xn whose restriction to the sphere is the data.
  SphereCK(const PolynomialQ& f, int jet_order = 14);
  MultivectorD operator()(const Point& x) const;
  int dim() const { return n_; }

 private:
  int n_;
  int order_;
  PolynomialD f_;
};

}  // namespace cliffa
