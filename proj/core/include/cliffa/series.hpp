#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "cliffa/calculus.hpp"
#include "cliffa/kernels.hpp"
#include "cliffa/polynomial.hpp"
#include "cliffa/quadrature.hpp"

namespace cliffa {

// (j_2, ..., j_n): exponents of the derivatives d/dx_2 .. d/dx_n.
using MultiIndex = std::vector<int>;

// All multi-indices of total degree j in n-1 slots, graded-lex order.
std::vector<MultiIndex> enumerate_multi_indices(int n, int j);

// z_k = x_k - x_1 e_1^{-1} e_k = x_k + x_1 e_1 e_k for k = 2..n.
PolynomialQ fueter_variable(int n, int k);

// P_idx = (1/j!) * sum over the distinct orderings of the factors z_k
// (each z_k appearing idx[k-2] times). Built from the recursion
// W(a) = sum_k z_k W(a - e_k), which enumerates every distinct word once.
PolynomialQ fueter_polynomial(int n, const MultiIndex& idx);

// Extension f = sum_k x1^k / k! (e1 D')^k f', D' = sum_{j>=2} e_j d_j.
// f' must not depend on x1.
PolynomialQ ck_extension(const PolynomialQ& fprime);

// h = x f1 + f2 for harmonic h (D^2 h = 0).
struct AlmansiSplit {
  PolynomialQ f1;
  PolynomialQ f2;
};
AlmansiSplit almansi_split(const PolynomialQ& h);

// p = f_0 + x f_1 + ... + x^{k-1} f_{k-1} with D f_j = 0, for D^k p = 0.
std::vector<PolynomialQ> kmonogenic_split(const PolynomialQ& p, int k);

// Reassembles sum_j x^j f_j.
PolynomialQ kmonogenic_join(const std::vector<PolynomialQ>& parts);

// x^{k-1} f for monogenic f; D^k of the result vanishes.
PolynomialQ x_power_monogenic(const PolynomialQ& f, int k);

// D(x^j f) = -c(j, d) x^{j-1} f for monogenic f homogeneous of degree d:
// c = j for even j and c = j - 1 + n + 2d for odd j.
Rational x_power_dirac_factor(int n, int j, int d);

// Taylor expansion about w from boundary data on dB(w, R):
// a_idx = (-1)^{|idx|+1} (1/omega_n) int (d^idx G)(x - w) n(x) f(x) dsigma,
// so that f(y) = sum P_idx(y - w) a_idx. The right-sided expansion uses
// b_idx = (-1)^{|idx|+1} (1/omega_n) int f(x) n(x) (d^idx G)(x - w) dsigma
// with f(y) = sum b_idx ~P_idx(y - w).
enum class Side { Left, Right };
struct TaylorExpansion {
  int n = 0;
  Point center;
  int order = 0;
  Side side = Side::Left;
  std::map<MultiIndex, MultivectorD> coefficients;
  MultivectorD evaluate(const Point& y) const;
};
TaylorExpansion taylor_coefficients(const std::function<MultivectorD(const Point&)>& f, const QuadratureRule& rule,
                                    int order, Side side = Side::Left);

// d^idx G as an exact radial expression (derivatives in x_2..x_n).
RadialQ cauchy_kernel_derivative(int n, const MultiIndex& idx);

// Fueter-Sce construction for f = u + i v holomorphic with real
// coefficients f(z) = sum_k c_k z^k (so f(conj z) = conj f(z)).
struct BivariatePoly {
  // coefficient of s^a t^b keyed by (a, b)
  std::map<std::pair<int, int>, Rational> terms;
  double evaluate(double s, double t) const;
  BivariatePoly ds() const;
  BivariatePoly dt() const;
  bool operator==(const BivariatePoly& o) const;
};
struct FueterSce {
  int n = 0;
  BivariatePoly u;
  BivariatePoly v;
};
// Throws InvalidArgument when (u, v) violate the Cauchy-Riemann equations or n is odd.
FueterSce fueter_sce(int n, const BivariatePoly& u, const BivariatePoly& v);
FueterSce fueter_sce_from_coefficients(int n, const std::vector<Rational>& c);
bool cauchy_riemann_holds(const BivariatePoly& u, const BivariatePoly& v);
// F(x) = u(x1, |x'|) + e1^{-1} x'/|x'| v(x1, |x'|)
MultivectorD fueter_sce_eval(const FueterSce& fs, const Point& x);
// Symbolic families: (e1^{-1} x)^k, which equals F for f(z) = z^k, and the
// literal x^k e1.
PolynomialQ fueter_sce_power(int n, int k);
PolynomialQ x_power_times_e1(int n, int k);

}  // namespace cliffa
