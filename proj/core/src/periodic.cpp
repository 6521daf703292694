#include <cmath>
#include <cstdlib>

#include "cliffa/kernels.hpp"

namespace cliffa {

LatticeSum periodic_kernel_cot(int n, int k, int l, const Point& x, const Point& y, int R) {
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw InvalidArgument("cot kernel: points must have n coordinates");
  if (k < 0 || l < 0 || l > k || k > n) throw InvalidArgument("cot kernel needs 0 <= l <= k <= n");
  if (R < 2) throw InvalidArgument("cot kernel needs truncation radius R >= 2");
  Point d = sub(x, y);
  LatticeSum out;
  out.value = MultivectorD(n);
  if (k == 0) {
    out.value = eval_cauchy(d);
    out.terms = 1;
    return out;
  }
  // Bucket the box by shell ||v||_inf; within a shell the order is
  // lexicographic, so the summation order is fixed.
  std::vector<MultivectorD> shells(R + 1, MultivectorD(n));
  std::vector<int> v(k, -R);
  Point p = d;
  while (true) {
    int shell = 0, parity = 0;
    for (int i = 0; i < k; ++i) {
      shell = std::max(shell, std::abs(v[i]));
      if (i < l) parity += std::abs(v[i]);
      p[i] = d[i] + v[i];
    }
    if (norm(p) < 1e-12) throw SingularPoint("cot kernel: x - y lies on the lattice orbit");
    MultivectorD g = eval_cauchy(p);
    shells[shell] += (parity % 2) ? -g : g;
    if (shell == R) out.boundary_bound += g.norm();
    ++out.terms;
    int i = k - 1;
    while (i >= 0 && v[i] == R) v[i--] = -R;
    if (i < 0) break;
    ++v[i];
  }
  MultivectorD partial(n);
  for (int s = 0; s <= R - 2; ++s) partial += shells[s];
  MultivectorD full = partial + shells[R - 1] + shells[R];
  out.value = full;
  out.tail_estimate = (full - partial).norm();
  return out;
}

DilationSum dilation_kernel(int n, const Point& x, const Point& y, int K) {
  if (K < 1) throw InvalidArgument("dilation kernel needs K >= 1");
  double nx = norm(x), ny = norm(y);
  if (nx == 0 || ny == 0) throw SingularPoint("dilation kernel: x and y must be nonzero");
  for (int m = -K; m <= K; ++m)
    if (norm(sub(x, scale(y, std::ldexp(1.0, m)))) < 1e-12 * nx) throw SingularPoint("dilation kernel: x on the orbit of y");
  Point d = sub(x, y);
  Point xi = scale(x, -1.0 / (nx * nx)), yi = scale(y, -1.0 / (ny * ny));
  Point di = sub(xi, yi);
  DilationSum out;
  out.first = MultivectorD(n);
  out.second = MultivectorD(n);
  MultivectorD last1(n), last2(n);
  for (int j = 0; j < K; ++j) {
    last1 = eval_cauchy(scale(d, std::ldexp(1.0, j)));
    out.first += last1;
  }
  for (int j = 1; j <= K; ++j) {
    last2 = eval_cauchy(scale(di, std::ldexp(1.0, j)));
    out.second += last2;
  }
  double w = std::ldexp(1.0, 2 - 2 * n);
  MultivectorD gx = eval_cauchy(x), gy = eval_cauchy(y);
  out.value = out.first + gx * out.second * gy * w;
  // Each further term shrinks by 2^{-(n-1)}: geometric tail. Left or right
  // multiplication by a vector scales the coefficient norm by its length.
  double q = std::ldexp(1.0, -(n - 1));
  double tail1 = last1.norm() * q / (1 - q);
  double tail2 = last2.norm() * q / (1 - q) * w * gx.norm() * gy.norm();
  out.tail_estimate = tail1 + tail2;
  return out;
}

}  // namespace cliffa
