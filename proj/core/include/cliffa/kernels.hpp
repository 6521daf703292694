#pragma once

#include <optional>
#include <vector>

#include "cliffa/radial.hpp"

namespace cliffa {

using Point = std::vector<double>;

// G_k with its derived constants. For the log case (n even, k >= n) the
// symbolic form is C (x^{k-n} log||x|| + A x^{k-n}); otherwise it is
// C x ||x||^{-(n-k+1)} for odd k and C ||x||^{-(n-k)} for even k.
struct KernelFamily {
  int n = 0;
  int k = 0;
  RadialQ symbolic;
  Rational C;
  std::optional<Rational> A;
  bool log_case = false;
  // In the log case at k = n the equation does not see A (x^0 is
  // constant); A is then fixed to 0, the minimal-support choice.
  bool A_free = false;
};

// G(x) = x / ||x||^n
RadialQ cauchy_kernel_expr(int n);
KernelFamily cauchy_kernel(int n);

// H(x) = 1 / ((n-2) ||x||^{n-2}), n >= 3.
RadialQ newton_kernel_expr(int n);

// G_k solved from D G_k = G_{k-1}; results are cached per (n, k).
KernelFamily iterated_kernel(int n, int k);
// The same chain of solves without touching the cache.
KernelFamily iterated_kernel_uncached(int n, int k);

// x^j as an exact polynomial, j >= 0.
PolynomialQ x_power_poly(int n, int j);

// Exact solution of sum_i c_i columns[i] = rhs over the rationals, free
// unknowns set to zero. Throws UnsolvableAnsatz if inconsistent. The
// optional `free_out` reports which unknowns were undetermined.
std::vector<Rational> solve_radial_linear(const std::vector<RadialQ>& columns, const RadialQ& rhs,
                                          std::vector<bool>* free_out = nullptr);

// Fast double evaluators.
MultivectorD eval_cauchy(const Point& x);                 // G(x), n = x.size()
MultivectorD eval_cauchy_diff(const Point& x, const Point& y);  // G(x - y)
double eval_newton(const Point& x);                        // H(x)
MultivectorD vec_d(const Point& x);                        // sum x_j e_j
Point sub(const Point& a, const Point& b);
Point add(const Point& a, const Point& b);
Point scale(const Point& a, double s);
double dot(const Point& a, const Point& b);
double norm(const Point& a);

// Spherical kernels on S^n in R^{n+1}; points have n+1 coordinates.
MultivectorD spherical_G(int n, const Point& x, const Point& y);
MultivectorD spherical_G_closed_form(int n, const Point& x, const Point& y);
MultivectorD spherical_H(int n, const Point& x, const Point& y);

// Truncated lattice sum over the box ||m||_inf <= R in the first k
// coordinate directions, alternating in the first l of them.
struct LatticeSum {
  MultivectorD value;
  double tail_estimate = 0;  // ||S_R - S_{R-2}||
  // sum of ||G|| over the outer shell ||m||_inf = R. A unit shift of x
  // trades one face of that shell for a face just outside it, whose terms
  // are smaller one by one, so the (anti)periodicity defect of S_R is at
  // most this number.
  double boundary_bound = 0;
  long terms = 0;
};
LatticeSum periodic_kernel_cot(int n, int k, int l, const Point& x, const Point& y, int R = 12);

// sum_{j=0}^{K-1} G(2^j x - 2^j y) + 2^{2-2n} G(x) (sum_{j=1}^{K} G(2^j x^{-1} - 2^j y^{-1})) G(y)
struct DilationSum {
  MultivectorD value;
  MultivectorD first;
  MultivectorD second;
  double tail_estimate = 0;
};
DilationSum dilation_kernel(int n, const Point& x, const Point& y, int K = 40);

// Plane waves: e_+ = exp(i<x',zeta> - x_n|zeta|) p_+ and
// e_- = exp(i<x',zeta> + x_n|zeta|) p_-, with p_{+-} = (1 +- i zeta' e_n)/2,
// bounded on the upper (resp. lower) half space.
struct PlaneWave {
  int n = 0;
  Point zeta;  // n-1 components
  int sign = 1;
};
PlaneWave plane_wave(int n, const Point& zeta, int sign);
MultivectorC plane_wave_projector(int n, const Point& zeta, int sign);
MultivectorC plane_wave_eval(const PlaneWave& w, const Point& x);

// int_0^inf exp(i r a - b r) r^{n-2} dr numerically and (n-2)!/(b - i a)^{n-1}.
struct LaplaceCheck {
  Complex numeric;
  Complex closed_form;
  double relative_error = 0;
};
LaplaceCheck laplace_planewave_identity(int n, double a, double b);

// Complexified kernel G^dagger(w) = (-1)^{n/2} w / (w^2)^{n/2} at w = x - z
// for n even; agrees with G at real arguments.
MultivectorC complex_kernel_eval(const Point& x, const std::vector<Complex>& z);

}  // namespace cliffa
