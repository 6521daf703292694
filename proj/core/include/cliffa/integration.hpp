#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cliffa/kernels.hpp"
#include "cliffa/polynomial.hpp"
#include "cliffa/quadrature.hpp"

namespace cliffa {

using Density = std::function<MultivectorD(const Point&)>;

// A density on a surface, optionally carrying the polynomial it restricts.
struct BoundaryDensity {
  Density eval;
  std::optional<PolynomialQ> exact;

  BoundaryDensity() = default;
  BoundaryDensity(Density f) : eval(std::move(f)) {}
  static BoundaryDensity from_polynomial(const PolynomialQ& p);
  MultivectorD operator()(const Point& x) const { return eval(x); }
};

// Pairwise (tree) sum in a fixed order; the result does not depend on the
// number of worker threads.
MultivectorD pairwise_sum(const std::vector<MultivectorD>& v, int dim);

// Evaluates g(i) for every node index in parallel; results are in node order.
std::vector<MultivectorD> map_nodes(std::size_t count, const std::function<MultivectorD(std::size_t)>& g);

// sum_i w_i g(x_i) n(x_i) f(x_i). An empty g or f stands for the constant 1.
MultivectorD surface_integral(const Density& g, const Density& f, const QuadratureRule& rule);

// Interior reproduction with the kernel oriented as G(y - x):
//   f(y) = (1/omega_n) int G(y - x) n(x) f(x) dsigma(x)       (left)
//   g(y) = (1/omega_n) int g(x) n(x) G(y - x) dsigma(x)       (right)
// For y outside the sphere the integral vanishes.
MultivectorD cauchy_integral(const Density& f, const Point& y, const QuadratureRule& rule, bool left = true);

// (1/(R omega_n)) int_{D(y,R)} f(x) / |x - y|^{n-1} dx over a ball rule centred at y.
MultivectorD mean_value_ball(const Density& f, const QuadratureRule& ball);

// (1/(omega_n r^{n-1})) int_{dB} h dsigma
MultivectorD surface_mean(const Density& h, const QuadratureRule& rule);

// h(y) = (1/omega_n) int (G(y - x) n h - H(y - x) n Dh) dsigma
MultivectorD greens_formula(const Density& h, const Density& dh, const Point& y, const QuadratureRule& rule);

// f(y) = -(1/omega_n) int sum_{j=1}^k (-1)^{j-1} G_j(x - y) n D^{j-1} f dsigma,
// with derivs[j] = D^j f for j = 0..k-1.
MultivectorD cauchy_green_k(const std::vector<Density>& derivs, const Point& y, const QuadratureRule& rule);

// T(y) = sum_i G(y - p_i) w_i for point masses (p_i, w_i).
struct PointMass {
  Point p;
  MultivectorD w;
};
MultivectorD cauchy_transform(const std::vector<PointMass>& masses, const Point& y);

// f^dagger(z) = (1/omega_n) int G^dagger(z - x) n(x) f(x) dsigma for complex
// z near the ball (n even).
MultivectorC holomorphic_extension(const Density& f, const std::vector<Complex>& z, const QuadratureRule& rule);

// ---------------------------------------------------------------------------
// Boundary behaviour on a sphere S(c, r).

// PV (1/omega_n) int G(z - x) n(x) dsigma evaluated on a rule whose polar
// axis points at z, so the odd part cancels node by node. Equals 1/2.
double pv_constant(int n, const Point& z, int resolution);

// C theta(z) = (1/omega_n) int G(z - x) n (theta(x) - theta(z)) dsigma + theta(z)/2
// on the sphere described by `sphere` (its nodes are not used; a rule with
// the same resolution and its pole at z is built instead).
MultivectorD singular_cauchy(const Density& theta, const Point& z, const QuadratureRule& sphere);

// (sign/2 I + C) theta as a density on the sphere; evaluation is lazy, so
// compositions nest.
Density plemelj_project(const Density& theta, int sign, const QuadratureRule& sphere);

struct HardySplit {
  Density inner;  // (I/2 + C) theta
  Density outer;  // theta - inner = (I/2 - C) theta
};
HardySplit hardy_split(const Density& theta, const QuadratureRule& sphere);

// ---------------------------------------------------------------------------
// Spherical formulas on a cap of S^n (points in R^{n+1}).

// Cayley transform R^n -> S^n, psi(y) = (e_{n+1} y + 1)(y + e_{n+1})^{-1},
// its inverse and the weight J(psi^{-1}, x) in Cl_{n+1}.
Point sphere_cayley(const Point& y);
Point sphere_cayley_inverse(const Point& x);
MultivectorD sphere_cayley_inverse_weight(const Point& x);

// f'(x) = J(psi^{-1}, x) f(psi^{-1} x) for f monogenic on R^n (values in Cl_n,
// embedded into Cl_{n+1}).
Density sphere_pullback(const Density& f);

// f'(y') = (1/omega_n) int_{dcap} G_s(y', x) n(x) f'(x) dsigma
MultivectorD spherical_cauchy(const Density& fprime, const Point& y, const QuadratureRule& cap);

// h(y') = (1/omega_n) int_{dcap} (G_s(y', x) n h + H_s(y', x) n D_s h) dsigma
MultivectorD spherical_green(const Density& h, const Density& dsh, const Point& y, const QuadratureRule& cap);

}  // namespace cliffa
