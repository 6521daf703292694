#include "cliffa/integration.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cliffa/algebra.hpp"

namespace cliffa {

BoundaryDensity BoundaryDensity::from_polynomial(const PolynomialQ& p) {
  PolynomialD pd = p.convert<double>();
  BoundaryDensity d([pd](const Point& x) { return pd.evaluate_as<double>(x); });
  d.exact = p;
  return d;
}

MultivectorD pairwise_sum(const std::vector<MultivectorD>& v, int dim) {
  std::function<MultivectorD(std::size_t, std::size_t)> rec = [&](std::size_t lo, std::size_t hi) -> MultivectorD {
    if (hi - lo <= 8) {
      MultivectorD acc(dim);
      for (std::size_t i = lo; i < hi; ++i) acc += v[i];
      return acc;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return rec(lo, mid) + rec(mid, hi);
  };
  return rec(0, v.size());
}

namespace {
// Set inside worker threads so that nested integrals (projector
// compositions) run serially instead of multiplying the thread count.
thread_local bool in_worker = false;
}  // namespace

std::vector<MultivectorD> map_nodes(std::size_t count, const std::function<MultivectorD(std::size_t)>& g) {
  std::vector<MultivectorD> out(count);
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t workers = in_worker ? 1 : std::min<std::size_t>(hw, count / 256 + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = g(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      in_worker = true;
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = g(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

void require_normals(const QuadratureRule& rule) {
  if (!rule.has_normals()) throw InvalidArgument("surface integral needs a rule with normals");
}

void require_point(const QuadratureRule& rule, const Point& y) {
  if (static_cast<int>(y.size()) != rule.n) throw InvalidArgument("point has the wrong dimension for this rule");
}

MultivectorD integrate(const QuadratureRule& rule, int dim, const std::function<MultivectorD(const QuadNode&)>& g) {
  auto vals = map_nodes(rule.nodes.size(), [&](std::size_t i) { return g(rule.nodes[i]) * rule.nodes[i].w; });
  return pairwise_sum(vals, dim);
}

}  // namespace

MultivectorD surface_integral(const Density& g, const Density& f, const QuadratureRule& rule) {
  require_normals(rule);
  const int n = rule.n;
  return integrate(rule, n, [&](const QuadNode& q) {
    MultivectorD v = vec_d(q.normal);
    if (g) v = g(q.x) * v;
    if (f) v = v * f(q.x);
    return v;
  });
}

MultivectorD cauchy_integral(const Density& f, const Point& y, const QuadratureRule& rule, bool left) {
  require_normals(rule);
  require_point(rule, y);
  if (rule.kind == SurfaceKind::Sphere && std::abs(norm(sub(y, rule.center)) - rule.radius) < 1e-12 * rule.radius)
    throw InvalidArgument("cauchy_integral: evaluation point lies on the surface");
  const int n = rule.n;
  MultivectorD s = integrate(rule, n, [&](const QuadNode& q) {
    MultivectorD k = eval_cauchy_diff(y, q.x);
    MultivectorD nv = vec_d(q.normal);
    return left ? k * nv * f(q.x) : f(q.x) * nv * k;
  });
  return s * (1 / sphere_area(n));
}

MultivectorD mean_value_ball(const Density& f, const QuadratureRule& ball) {
  if (ball.kind != SurfaceKind::Ball) throw InvalidArgument("mean_value_ball needs a ball rule");
  const int n = ball.n;
  MultivectorD s = integrate(ball, n, [&](const QuadNode& q) {
    double d = norm(sub(q.x, ball.center));
    return f(q.x) * (1 / std::pow(d, n - 1));
  });
  return s * (1 / (ball.radius * sphere_area(n)));
}

MultivectorD surface_mean(const Density& h, const QuadratureRule& rule) {
  if (rule.kind != SurfaceKind::Sphere) throw InvalidArgument("surface_mean needs a sphere rule");
  MultivectorD s = integrate(rule, rule.n, [&](const QuadNode& q) { return h(q.x); });
  return s * (1 / (sphere_area(rule.n) * std::pow(rule.radius, rule.n - 1)));
}

MultivectorD greens_formula(const Density& h, const Density& dh, const Point& y, const QuadratureRule& rule) {
  if (!dh) throw InvalidArgument("greens_formula needs Dh");
  require_normals(rule);
  require_point(rule, y);
  const int n = rule.n;
  if (n < 3) throw InvalidArgument("greens_formula needs n >= 3");
  MultivectorD s = integrate(rule, n, [&](const QuadNode& q) {
    MultivectorD nv = vec_d(q.normal);
    Point d = sub(y, q.x);
    return eval_cauchy(d) * nv * h(q.x) - nv * dh(q.x) * eval_newton(d);
  });
  return s * (1 / sphere_area(n));
}

MultivectorD cauchy_green_k(const std::vector<Density>& derivs, const Point& y, const QuadratureRule& rule) {
  const int k = static_cast<int>(derivs.size());
  if (k < 1) throw InvalidArgument("cauchy_green_k needs k >= 1");
  require_normals(rule);
  require_point(rule, y);
  const int n = rule.n;
  std::vector<RadialD> kern;
  for (int j = 1; j <= k; ++j) kern.push_back(iterated_kernel(n, j).symbolic.convert<double>());
  MultivectorD s = integrate(rule, n, [&](const QuadNode& q) {
    MultivectorD nv = vec_d(q.normal);
    Point d = sub(q.x, y);
    MultivectorD acc(n);
    for (int j = 1; j <= k; ++j) {
      MultivectorD t = kern[j - 1].evaluate(d) * nv * derivs[j - 1](q.x);
      if (j % 2 == 1) acc += t;
      else acc -= t;
    }
    return acc;
  });
  return s * (-1 / sphere_area(n));
}

MultivectorD cauchy_transform(const std::vector<PointMass>& masses, const Point& y) {
  if (masses.empty()) throw InvalidArgument("cauchy_transform: empty measure");
  const int n = static_cast<int>(y.size());
  MultivectorD out(n);
  for (const auto& m : masses) {
    if (norm(sub(y, m.p)) < 1e-12) throw SingularPoint("cauchy_transform: evaluation point lies in the support");
    out += eval_cauchy_diff(y, m.p) * m.w;
  }
  return out;
}

MultivectorC holomorphic_extension(const Density& f, const std::vector<Complex>& z, const QuadratureRule& rule) {
  require_normals(rule);
  const int n = rule.n;
  if (static_cast<int>(z.size()) != n) throw InvalidArgument("holomorphic_extension: z has the wrong dimension");
  std::vector<MultivectorC> vals(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const auto& q = rule.nodes[i];
    // G^dagger(z - x) = -G^dagger(x - z); complex_kernel_eval gives G^dagger(x - z).
    MultivectorC k = -complex_kernel_eval(q.x, z);
    vals[i] = k * complexify(vec_d(q.normal)) * complexify(f(q.x)) * Complex(q.w);
  }
  MultivectorC acc(n);
  for (const auto& v : vals) acc += v;
  return acc * Complex(1 / sphere_area(n));
}

// ---------------------------------------------------------------------------

double pv_constant(int n, const Point& z, int resolution) {
  QuadratureRule rule = sphere_rule_with_pole(n, Point(n, 0.0), 1.0, z, resolution);
  MultivectorD s = integrate(rule, n, [&](const QuadNode& q) { return eval_cauchy_diff(z, q.x) * vec_d(q.normal); });
  return s.scalar_part() / sphere_area(n);
}

MultivectorD singular_cauchy(const Density& theta, const Point& z, const QuadratureRule& sphere) {
  if (sphere.kind != SurfaceKind::Sphere) throw InvalidArgument("singular_cauchy needs a sphere");
  require_point(sphere, z);
  Point rel = sub(z, sphere.center);
  if (std::abs(norm(rel) - sphere.radius) > 1e-9 * sphere.radius)
    throw InvalidArgument("singular_cauchy: z is not on the sphere");
  const int n = sphere.n;
  QuadratureRule rule = sphere_rule_with_pole(n, sphere.center, sphere.radius, rel, sphere.resolution);
  MultivectorD tz = theta(z);
  MultivectorD s = integrate(rule, n, [&](const QuadNode& q) {
    return eval_cauchy_diff(z, q.x) * vec_d(q.normal) * (theta(q.x) - tz);
  });
  return s * (1 / sphere_area(n)) + tz * 0.5;
}

Density plemelj_project(const Density& theta, int sign, const QuadratureRule& sphere) {
  if (sign != 1 && sign != -1) throw InvalidArgument("plemelj_project: sign must be +1 or -1");
  QuadratureRule shell = sphere;
  shell.nodes.clear();
  return [theta, sign, shell](const Point& z) { return theta(z) * (0.5 * sign) + singular_cauchy(theta, z, shell); };
}

HardySplit hardy_split(const Density& theta, const QuadratureRule& sphere) {
  Density inner = plemelj_project(theta, 1, sphere);
  Density outer = [theta, inner](const Point& z) { return theta(z) - inner(z); };
  return HardySplit{inner, outer};
}

// ---------------------------------------------------------------------------

namespace {

// (e y + 1)(y + e)^{-1} etc. in Cl_{n+1} with e = e_{n+1}.
MultivectorD embed_point(const Point& y, int dim) {
  Point p(dim, 0.0);
  std::copy(y.begin(), y.end(), p.begin());
  return vec_d(p);
}

Point to_point(const MultivectorD& v, int dim) {
  auto c = v.vector_part();
  return Point(c.begin(), c.begin() + dim);
}

}  // namespace

Point sphere_cayley(const Point& y) {
  const int n = static_cast<int>(y.size());
  const int m = n + 1;
  MultivectorD Y = embed_point(y, m);
  MultivectorD e = MultivectorD::basis(m, m);
  MultivectorD v = (e * Y + MultivectorD::one(m)) * vector_inverse(Y + e);
  return to_point(v, m);
}

// psi^{-1}(x) = (e x - 1)(e - x)^{-1}, from the Vahlen inverse [[e, -1], [-1, e]].
Point sphere_cayley_inverse(const Point& x) {
  const int m = static_cast<int>(x.size());
  MultivectorD X = vec_d(x);
  MultivectorD e = MultivectorD::basis(m, m);
  MultivectorD den = e - X;
  if (den.norm() < 1e-8) throw PoleError("inverse Cayley transform at its pole");
  MultivectorD v = (e * X - MultivectorD::one(m)) * vector_inverse(den);
  Point out = to_point(v, m);
  out.pop_back();
  return out;
}

MultivectorD sphere_cayley_inverse_weight(const Point& x) {
  const int m = static_cast<int>(x.size());
  const int n = m - 1;
  MultivectorD w = MultivectorD::basis(m, m) - vec_d(x);  // c x + d with c = -1, d = e
  double nw = w.norm();
  if (nw < 1e-8) throw PoleError("Cayley weight at its pole");
  return w.reversion() * (1 / std::pow(nw, n));
}

Density sphere_pullback(const Density& f) {
  return [f](const Point& x) {
    const int m = static_cast<int>(x.size());
    MultivectorD v = f(sphere_cayley_inverse(x)).embed(m);
    return sphere_cayley_inverse_weight(x) * v;
  };
}

MultivectorD spherical_cauchy(const Density& fprime, const Point& y, const QuadratureRule& cap) {
  if (cap.kind != SurfaceKind::CapBoundary) throw InvalidArgument("spherical_cauchy needs a cap-boundary rule");
  const int m = cap.n;
  const int n = m - 1;
  MultivectorD s = integrate(cap, m, [&](const QuadNode& q) {
    return spherical_G(n, y, q.x) * vec_d(q.normal) * fprime(q.x);
  });
  return s * (1 / sphere_area(n));
}

MultivectorD spherical_green(const Density& h, const Density& dsh, const Point& y, const QuadratureRule& cap) {
  if (cap.kind != SurfaceKind::CapBoundary) throw InvalidArgument("spherical_green needs a cap-boundary rule");
  const int m = cap.n;
  const int n = m - 1;
  MultivectorD s = integrate(cap, m, [&](const QuadNode& q) {
    MultivectorD nv = vec_d(q.normal);
    return spherical_G(n, y, q.x) * nv * h(q.x) + spherical_H(n, y, q.x) * (nv * dsh(q.x));
  });
  return s * (1 / sphere_area(n));
}

}  // namespace cliffa
