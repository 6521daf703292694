#include "cliffa/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/legendre.hpp>

namespace cliffa {

double QuadratureRule::total_weight() const {
  double s = 0;
  for (const auto& q : nodes) s += q.w;
  return s;
}

double sphere_area(int n) {
  if (n < 1) throw InvalidArgument("sphere_area needs n >= 1");
  return 2 * std::pow(std::numbers::pi, 0.5 * n) / boost::math::tgamma(0.5 * n);
}

const GaussLegendre& gauss_legendre(int m) {
  if (m < 1) throw InvalidArgument("Gauss-Legendre needs at least one node");
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // boost returns the non-negative zeros in increasing order.
  std::vector<double> z = boost::math::legendre_p_zeros<double>(m);
  GaussLegendre g;
  auto push = [&](double x) {
    double dp = boost::math::legendre_p_prime(m, x);
    g.x.push_back(x);
    g.w.push_back(2.0 / ((1 - x * x) * dp * dp));
  };
  for (auto i = z.rbegin(); i != z.rend(); ++i)
    if (*i != 0.0) push(-*i);
  for (double x : z) push(x);
  return cache.emplace(m, std::move(g)).first->second;
}

namespace {

// Nodes (u, w) of the product rule on the unit sphere S^{n-1}.
void unit_sphere_nodes(int n, int res, std::vector<Point>& pts, std::vector<double>& wts) {
  const int naz = 2 * res;
  const double daz = 2 * std::numbers::pi / naz;
  if (n == 2) {
    for (int a = 0; a < naz; ++a) {
      pts.push_back({std::cos(a * daz), std::sin(a * daz)});
      wts.push_back(daz);
    }
    return;
  }
  const GaussLegendre& gl = gauss_legendre(res);
  const int npolar = n - 2;
  std::vector<int> idx(npolar, 0);
  std::vector<double> phi(npolar);
  while (true) {
    double w = daz;
    for (int i = 0; i < npolar; ++i) {
      phi[i] = 0.5 * std::numbers::pi * (gl.x[idx[i]] + 1);
      w *= 0.5 * std::numbers::pi * gl.w[idx[i]] * std::pow(std::sin(phi[i]), n - 2 - i);
    }
    for (int a = 0; a < naz; ++a) {
      double az = (a + 0.5) * daz;
      Point u(n);
      double s = 1;
      for (int i = 0; i < npolar; ++i) {
        u[i] = s * std::cos(phi[i]);
        s *= std::sin(phi[i]);
      }
      u[n - 2] = s * std::cos(az);
      u[n - 1] = s * std::sin(az);
      pts.push_back(std::move(u));
      wts.push_back(w);
    }
    int i = npolar - 1;
    while (i >= 0 && idx[i] == res - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
}

QuadratureRule sphere_in_basis(int n, const Point& center, double r, const std::vector<Point>& basis, int res) {
  if (n < 2) throw InvalidArgument("sphere rule needs n >= 2");
  if (!(r > 0)) throw InvalidArgument("sphere rule needs r > 0");
  if (static_cast<int>(center.size()) != n) throw InvalidArgument("sphere rule: centre has wrong dimension");
  if (res < 1) throw InvalidArgument("sphere rule needs resolution >= 1");
  std::vector<Point> pts;
  std::vector<double> wts;
  unit_sphere_nodes(n, res, pts, wts);
  QuadratureRule rule;
  rule.kind = SurfaceKind::Sphere;
  rule.n = n;
  rule.center = center;
  rule.radius = r;
  rule.resolution = res;
  rule.nodes.reserve(pts.size());
  double scale_w = std::pow(r, n - 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point u(n, 0.0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) u[b] += pts[i][a] * basis[a][b];
    QuadNode q;
    q.x = add(center, scale(u, r));
    q.w = wts[i] * scale_w;
    q.normal = std::move(u);
    rule.nodes.push_back(std::move(q));
  }
  return rule;
}

std::vector<Point> standard_basis(int n) {
  std::vector<Point> b(n, Point(n, 0.0));
  for (int i = 0; i < n; ++i) b[i][i] = 1;
  return b;
}

}  // namespace

std::vector<Point> orthonormal_complement(const Point& p) {
  const int n = static_cast<int>(p.size());
  std::vector<Point> out;
  std::vector<Point> acc{scale(p, 1 / norm(p))};
  for (int i = 0; i < n && static_cast<int>(out.size()) < n - 1; ++i) {
    Point v(n, 0.0);
    v[i] = 1;
    for (const auto& a : acc) v = sub(v, scale(a, dot(v, a)));
    double nv = norm(v);
    if (nv < 1e-8) continue;
    v = scale(v, 1 / nv);
    acc.push_back(v);
    out.push_back(v);
  }
  return out;
}

QuadratureRule sphere_rule(int n, const Point& center, double r, int resolution) {
  return sphere_in_basis(n, center, r, standard_basis(n), resolution);
}

QuadratureRule sphere_rule_with_pole(int n, const Point& center, double r, const Point& pole, int resolution) {
  std::vector<Point> basis{scale(pole, 1 / norm(pole))};
  for (auto& v : orthonormal_complement(pole)) basis.push_back(v);
  return sphere_in_basis(n, center, r, basis, resolution);
}

QuadratureRule monte_carlo_sphere_rule(int n, const Point& center, double r, int samples, std::uint64_t seed) {
  if (!(r > 0)) throw InvalidArgument("sphere rule needs r > 0");
  if (samples < 2) throw InvalidArgument("Monte Carlo rule needs at least two samples");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd;
  QuadratureRule rule;
  rule.kind = SurfaceKind::Sphere;
  rule.n = n;
  rule.center = center;
  rule.radius = r;
  rule.resolution = samples;
  rule.monte_carlo = true;
  double w = sphere_area(n) * std::pow(r, n - 1) / samples;
  for (int s = 0; s < samples; ++s) {
    Point u(n);
    double nu = 0;
    while (nu < 1e-12) {
      for (auto& c : u) c = nd(gen);
      nu = norm(u);
    }
    u = scale(u, 1 / nu);
    rule.nodes.push_back(QuadNode{add(center, scale(u, r)), w, u});
  }
  return rule;
}

double monte_carlo_standard_error(const QuadratureRule& rule, const std::vector<double>& values) {
  const double N = static_cast<double>(values.size());
  if (N < 2) return 0;
  double mean = 0;
  for (double v : values) mean += v;
  mean /= N;
  double var = 0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= (N - 1);
  return sphere_area(rule.n) * std::pow(rule.radius, rule.n - 1) * std::sqrt(var / N);
}

QuadratureRule ball_rule(int n, const Point& center, double R, int resolution) {
  if (!(R > 0)) throw InvalidArgument("ball rule needs R > 0");
  QuadratureRule unit = sphere_rule(n, Point(n, 0.0), 1.0, resolution);
  const GaussLegendre& gl = gauss_legendre(resolution);
  QuadratureRule rule;
  rule.kind = SurfaceKind::Ball;
  rule.n = n;
  rule.center = center;
  rule.radius = R;
  rule.resolution = resolution;
  for (std::size_t i = 0; i < gl.x.size(); ++i) {
    double r = 0.5 * R * (gl.x[i] + 1);
    double wr = 0.5 * R * gl.w[i] * std::pow(r, n - 1);
    for (const auto& q : unit.nodes) rule.nodes.push_back(QuadNode{add(center, scale(q.x, r)), wr * q.w, {}});
  }
  return rule;
}

QuadratureRule cap_boundary_rule(int n, const Point& pole, double alpha, int resolution) {
  if (static_cast<int>(pole.size()) != n + 1) throw InvalidArgument("cap rule: pole must lie in R^{n+1}");
  if (!(alpha > 0 && alpha < std::numbers::pi)) throw InvalidArgument("cap rule needs 0 < alpha < pi");
  if (n < 2) throw InvalidArgument("cap rule needs n >= 2");
  Point p = scale(pole, 1 / norm(pole));
  std::vector<Point> perp = orthonormal_complement(p);
  std::vector<Point> pts;
  std::vector<double> wts;
  unit_sphere_nodes(n, resolution, pts, wts);
  QuadratureRule rule;
  rule.kind = SurfaceKind::CapBoundary;
  rule.n = n + 1;
  rule.center = p;
  rule.radius = alpha;
  rule.resolution = resolution;
  double sa = std::sin(alpha), ca = std::cos(alpha);
  double ws = std::pow(sa, n - 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point u(n + 1, 0.0);
    for (int a = 0; a < n; ++a) u = add(u, scale(perp[a], pts[i][a]));
    QuadNode q;
    q.x = add(scale(p, ca), scale(u, sa));
    q.w = wts[i] * ws;
    q.normal = add(scale(p, -sa), scale(u, ca));
    rule.nodes.push_back(std::move(q));
  }
  return rule;
}

}  // namespace cliffa
