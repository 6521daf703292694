#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "cliffa/kernels.hpp"

namespace cliffa {

PlaneWave plane_wave(int n, const Point& zeta, int sign) {
  if (n < 2) throw InvalidArgument("plane wave needs n >= 2");
  if (static_cast<int>(zeta.size()) != n - 1) throw InvalidArgument("zeta must have n-1 components");
  if (sign != 1 && sign != -1) throw InvalidArgument("plane wave sign must be +1 or -1");
  if (norm(zeta) == 0) throw InvalidArgument("plane wave needs zeta != 0");
  return PlaneWave{n, zeta, sign};
}

MultivectorC plane_wave_projector(int n, const Point& zeta, int sign) {
  double nz = norm(zeta);
  if (nz == 0) throw InvalidArgument("plane wave needs zeta != 0");
  std::vector<Complex> zc(n, Complex(0));
  for (int j = 0; j < n - 1; ++j) zc[j] = Complex(zeta[j] / nz, 0);
  MultivectorC zp = MultivectorC::vector(n, zc);
  MultivectorC en = MultivectorC::basis(n, n);
  MultivectorC one = MultivectorC::one(n);
  return (one + zp * en * Complex(0, sign)) * Complex(0.5, 0);
}

MultivectorC plane_wave_eval(const PlaneWave& w, const Point& x) {
  if (static_cast<int>(x.size()) != w.n) throw InvalidArgument("plane wave: point must have n coordinates");
  double phase = 0;
  for (int j = 0; j < w.n - 1; ++j) phase += x[j] * w.zeta[j];
  double decay = -w.sign * x[w.n - 1] * norm(w.zeta);
  Complex e = std::exp(Complex(decay, phase));
  return plane_wave_projector(w.n, w.zeta, w.sign) * e;
}

LaplaceCheck laplace_planewave_identity(int n, double a, double b) {
  if (n < 2) throw InvalidArgument("Laplace identity needs n >= 2");
  if (!(b > 0)) throw InvalidArgument("Laplace identity diverges for b <= 0");
  boost::math::quadrature::exp_sinh<double> integrator;
  const int p = n - 2;
  // exp(-b r) underflows before r^p overflows; returning 0 there avoids 0 * inf.
  auto radial = [&](double r) {
    double e = std::exp(-b * r);
    return e == 0 ? 0.0 : e * std::pow(r, p);
  };
  auto re = [&](double r) { return radial(r) * std::cos(a * r); };
  auto im = [&](double r) { return radial(r) * std::sin(a * r); };
  double tol = 1e-14;
  LaplaceCheck out;
  out.numeric = Complex(integrator.integrate(re, tol), integrator.integrate(im, tol));
  out.closed_form = boost::math::factorial<double>(p) / std::pow(Complex(b, -a), n - 1);
  out.relative_error = std::abs(out.numeric - out.closed_form) / std::abs(out.closed_form);
  return out;
}

MultivectorC complex_kernel_eval(const Point& x, const std::vector<Complex>& z) {
  const int n = static_cast<int>(x.size());
  if (n % 2 != 0) throw InvalidArgument("complex kernel is implemented for even n only");
  if (static_cast<int>(z.size()) != n) throw InvalidArgument("complex kernel: z must have n components");
  std::vector<Complex> w(n);
  Complex sq(0);
  double scale2 = 0;
  for (int j = 0; j < n; ++j) {
    w[j] = Complex(x[j]) - z[j];
    sq += w[j] * w[j];
    scale2 += std::norm(w[j]);
  }
  Complex w2 = -sq;  // (sum w_j e_j)^2
  if (std::abs(w2) <= 1e-12 * std::max(1.0, scale2)) throw SingularPoint("complex kernel: x - z lies on the null cone");
  Complex den = std::pow(w2, n / 2);
  Complex factor = ((n / 2) % 2 ? -1.0 : 1.0) / den;
  return MultivectorC::vector(n, w) * factor;
}

}  // namespace cliffa
