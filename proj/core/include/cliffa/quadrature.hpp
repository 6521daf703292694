#pragma once

#include <cstdint>
#include <vector>

#include "cliffa/kernels.hpp"

namespace cliffa {

enum class SurfaceKind { Sphere, Ball, CapBoundary };

struct QuadNode {
  Point x;
  double w = 0;
  Point normal;  // empty for ball rules
};

struct QuadratureRule {
  SurfaceKind kind = SurfaceKind::Sphere;
  int n = 0;         // ambient dimension
  Point center;      // sphere/ball centre (cap: the cap pole on S^{n-1})
  double radius = 0; // sphere/ball radius (cap: angular radius alpha)
  int resolution = 0;
  bool monte_carlo = false;
  std::vector<QuadNode> nodes;

  bool has_normals() const { return kind != SurfaceKind::Ball; }
  double total_weight() const;
};

// omega_n = 2 pi^{n/2} / Gamma(n/2), the area of the unit sphere in R^n.
double sphere_area(int n);

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;
};
const GaussLegendre& gauss_legendre(int m);

// Product rule on S^{n-1}(center, r): Gauss-Legendre in each polar angle
// (with its sin^k Jacobian) and a uniform grid in the azimuth. `resolution`
// is the number of polar nodes; the azimuth uses 2*resolution nodes.
QuadratureRule sphere_rule(int n, const Point& center, double r, int resolution);

// Same rule with its first polar axis turned to `pole` (a unit vector):
// the polar angle is measured from the pole, so integrands singular at the
// pole are resolved radially.
QuadratureRule sphere_rule_with_pole(int n, const Point& center, double r, const Point& pole, int resolution);

// Monte Carlo rule on S^{n-1}(center, r) (used for n >= 6).
QuadratureRule monte_carlo_sphere_rule(int n, const Point& center, double r, int samples, std::uint64_t seed);

// Standard error of the Monte Carlo mean of values f_i: omega r^{n-1} s / sqrt(N).
double monte_carlo_standard_error(const QuadratureRule& rule, const std::vector<double>& values);

// Solid ball: radial Gauss-Legendre times the sphere rule.
QuadratureRule ball_rule(int n, const Point& center, double R, int resolution);

// Boundary of the cap {x in S^n : <x, pole> > cos alpha} in R^{n+1}, an
// (n-1)-sphere of radius sin alpha; normals are tangent to S^n and point
// out of the cap: n = -sin(alpha) pole + cos(alpha) u.
QuadratureRule cap_boundary_rule(int n, const Point& pole, double alpha, int resolution);

// Orthonormal basis of the complement of a unit vector.
std::vector<Point> orthonormal_complement(const Point& p);

}  // namespace cliffa
