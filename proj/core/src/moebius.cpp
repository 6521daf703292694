#include "cliffa/moebius.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "cliffa/algebra.hpp"
#include "cliffa/calculus.hpp"
#include "cliffa/textio.hpp"

namespace cliffa {

namespace {

MultivectorD mv_scalar(int n, double s) { return MultivectorD::scalar(n, s); }

void require_n(int n, const Point& v, const char* what) {
  if (static_cast<int>(v.size()) != n) throw InvalidArgument(std::string(what) + " has the wrong dimension");
}

VahlenMatrix make(int n, MultivectorD a, MultivectorD b, MultivectorD c, MultivectorD d, Generator g) {
  VahlenMatrix m;
  m.n = n;
  m.a = std::move(a);
  m.b = std::move(b);
  m.c = std::move(c);
  m.d = std::move(d);
  m.provenance.push_back(std::move(g));
  return m;
}

}  // namespace

VahlenMatrix VahlenMatrix::identity(int n) {
  VahlenMatrix m;
  m.n = n;
  m.a = MultivectorD::one(n);
  m.b = MultivectorD(n);
  m.c = MultivectorD(n);
  m.d = MultivectorD::one(n);
  return m;
}

VahlenMatrix operator*(const VahlenMatrix& l, const VahlenMatrix& r) {
  if (l.n != r.n) throw ContextMismatch("Vahlen matrices over different dimensions");
  VahlenMatrix m;
  m.n = l.n;
  m.a = l.a * r.a + l.b * r.c;
  m.b = l.a * r.b + l.b * r.d;
  m.c = l.c * r.a + l.d * r.c;
  m.d = l.c * r.b + l.d * r.d;
  m.provenance = l.provenance;
  m.provenance.insert(m.provenance.end(), r.provenance.begin(), r.provenance.end());
  return m;
}

VahlenMatrix translation(int n, const Point& v) {
  require_n(n, v, "translation vector");
  Generator g;
  g.kind = GeneratorKind::Translation;
  g.v = v;
  return make(n, MultivectorD::one(n), vec_d(v), MultivectorD(n), MultivectorD::one(n), g);
}

VahlenMatrix dilation(int n, double lambda) {
  if (!(lambda > 0)) throw InvalidArgument("dilation needs lambda > 0");
  Generator g;
  g.kind = GeneratorKind::Dilation;
  g.lambda = lambda;
  double s = std::sqrt(lambda);
  return make(n, mv_scalar(n, s), MultivectorD(n), MultivectorD(n), mv_scalar(n, 1 / s), g);
}

VahlenMatrix rotation(int n, const Point& u1, const Point& u2) {
  require_n(n, u1, "rotation vector");
  require_n(n, u2, "rotation vector");
  double a = norm(u1), b = norm(u2);
  if (a < 1e-12 || b < 1e-12) throw InvalidArgument("rotation needs non-zero vectors");
  Generator g;
  g.kind = GeneratorKind::Rotation;
  g.u1 = scale(u1, 1 / a);
  g.u2 = scale(u2, 1 / b);
  MultivectorD s = vec_d(g.u1) * vec_d(g.u2);
  return make(n, s, MultivectorD(n), MultivectorD(n), s, g);
}

VahlenMatrix inversion(int n) {
  Generator g;
  g.kind = GeneratorKind::Inversion;
  return make(n, MultivectorD(n), MultivectorD::one(n), MultivectorD::one(n), MultivectorD(n), g);
}

VahlenMatrix cayley(int n, int axis, int sign) {
  if (axis < 1 || axis > n) throw InvalidArgument("Cayley axis out of range");
  if (sign != 1 && sign != -1) throw InvalidArgument("Cayley sign must be +1 or -1");
  Generator g;
  g.kind = GeneratorKind::Cayley;
  g.axis = axis;
  g.sign = sign;
  const double r = 1 / std::sqrt(2.0);
  MultivectorD e = MultivectorD::basis(n, axis) * double(sign);
  return make(n, e * r, mv_scalar(n, r), mv_scalar(n, r), e * r, g);
}

// [[e, 1], [1, e]] [[-e, 1], [1, -e]] = 2 I
VahlenMatrix cayley_inverse(int n, int axis, int sign) {
  VahlenMatrix m = cayley(n, axis, sign);
  m.a = -m.a;
  m.d = -m.d;
  m.provenance[0].inverse = true;
  return m;
}

VahlenMatrix from_generator(int n, const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::Translation: return translation(n, g.v);
    case GeneratorKind::Dilation: return dilation(n, g.lambda);
    case GeneratorKind::Rotation: return rotation(n, g.u1, g.u2);
    case GeneratorKind::Inversion: return inversion(n);
    case GeneratorKind::Cayley: return g.inverse ? cayley_inverse(n, g.axis, g.sign) : cayley(n, g.axis, g.sign);
  }
  throw InvalidArgument("unknown generator");
}

VahlenMatrix inverse(const VahlenMatrix& m) {
  VahlenMatrix out = VahlenMatrix::identity(m.n);
  for (auto it = m.provenance.rbegin(); it != m.provenance.rend(); ++it) {
    Generator g = *it;
    switch (g.kind) {
      case GeneratorKind::Translation: g.v = scale(g.v, -1); break;
      case GeneratorKind::Dilation: g.lambda = 1 / g.lambda; break;
      case GeneratorKind::Rotation: std::swap(g.u1, g.u2); break;
      case GeneratorKind::Inversion: break;
      case GeneratorKind::Cayley: g.inverse = !g.inverse; break;
    }
    out = out * from_generator(m.n, g);
  }
  return out;
}

MultivectorD denominator(const VahlenMatrix& m, const Point& x) {
  require_n(m.n, x, "point");
  MultivectorD w = m.c * vec_d(x) + m.d;
  if (w.norm() < 1e-8) throw PoleError("Moebius transformation evaluated at a pole");
  return w;
}

Point moebius_apply(const VahlenMatrix& m, const Point& x) {
  MultivectorD w = denominator(m, x);
  MultivectorD u = (m.a * vec_d(x) + m.b) * versor_inverse(w, 1e-8);
  double scale_ref = std::max(1.0, u.norm());
  for (const auto& [b, c] : u.terms())
    if (blade_grade(b) != 1 && std::abs(c) > 1e-10 * scale_ref)
      throw Error("Moebius image is not a vector (component " + blade_name(b) + ")");
  auto v = u.vector_part();
  return Point(v.begin(), v.end());
}

MultivectorD weight(const VahlenMatrix& m, const Point& x) {
  MultivectorD w = denominator(m, x);
  return w.reversion() * (1 / std::pow(w.norm(), m.n));
}

MultivectorD weight_k(const VahlenMatrix& m, const Point& x, int k) {
  if (k < 1) throw InvalidArgument("weight_k needs k >= 1");
  MultivectorD w = denominator(m, x);
  double r = w.norm();
  if (k % 2 == 1) return w.reversion() * (1 / std::pow(r, m.n - k + 1));
  return mv_scalar(m.n, std::pow(r, k - m.n));
}

double kernel_covariance_residual(const VahlenMatrix& m, const Point& x, const Point& y) {
  Point u = moebius_apply(m, x), v = moebius_apply(m, y);
  MultivectorD lhs = eval_cauchy_diff(u, v);
  MultivectorD jx = weight(m, x), jy = weight(m, y);
  MultivectorD rhs = versor_inverse(jx, 1e-8) * eval_cauchy_diff(x, y) * versor_inverse(jy.conjugation(), 1e-8);
  double scale_ref = lhs.norm();
  if (scale_ref == 0) throw SingularPoint("kernel covariance at coincident images");
  return (lhs - rhs).norm() / scale_ref;
}

Density pullback(const VahlenMatrix& m, const Density& f, int k) {
  return [m, f, k](const Point& x) { return weight_k(m, x, k) * f(moebius_apply(m, x)); };
}

namespace {

// Sphere through mapped points: solve 2 p.c + t = |p|^2 (t = rho^2 - |c|^2)
// in the least-squares sense.
std::pair<Point, double> fit_sphere(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts[0].size());
  const int m = n + 1;
  std::vector<std::vector<double>> A(m, std::vector<double>(m + 1, 0.0));
  for (const auto& p : pts) {
    std::vector<double> row(m);
    for (int i = 0; i < n; ++i) row[i] = 2 * p[i];
    row[n] = 1;
    double rhs = dot(p, p);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) A[i][j] += row[i] * row[j];
      A[i][m] += row[i] * rhs;
    }
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    if (std::abs(A[col][col]) < 1e-14) throw SingularPoint("image of the sphere is (nearly) a hyperplane");
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      double f = A[r][col] / A[col][col];
      for (int j = col; j <= m; ++j) A[r][j] -= f * A[col][j];
    }
  }
  Point c(n);
  for (int i = 0; i < n; ++i) c[i] = A[i][m] / A[i][i];
  double t = A[n][m] / A[n][n];
  double rho2 = t + dot(c, c);
  if (!(rho2 > 0)) throw SingularPoint("degenerate image sphere");
  return {c, std::sqrt(rho2)};
}

}  // namespace

ChangeOfVariables change_of_variables(const VahlenMatrix& m, const Density& f, const Density& g,
                                      const QuadratureRule& rule) {
  if (rule.kind != SurfaceKind::Sphere) throw InvalidArgument("change_of_variables needs a sphere rule");
  const int n = rule.n;
  {
    // The pole M^{-1}(infinity) must lie outside the closed ball.
    Point far(n, 0.0);
    far[0] = 1e12;
    Point pole = moebius_apply(inverse(m), far);
    if (norm(sub(pole, rule.center)) <= rule.radius * (1 + 1e-9))
      throw PoleError("change_of_variables: the map has a pole inside the sphere");
  }
  std::vector<Point> mapped;
  for (int j = 0; j < n; ++j)
    for (double s : {1.0, -1.0}) {
      Point p = rule.center;
      p[j] += s * rule.radius;
      mapped.push_back(moebius_apply(m, p));
    }
  auto [c, rho] = fit_sphere(mapped);
  // Orientation: does a point just outside S land outside M(S)?
  Point probe = rule.center;
  probe[0] += 1.01 * rule.radius;
  bool reversed = norm(sub(moebius_apply(m, probe), c)) < rho;

  ChangeOfVariables out;
  out.orientation_reversed = reversed;
  QuadratureRule image = sphere_rule(n, c, rho, rule.resolution);
  auto iv = map_nodes(image.nodes.size(), [&](std::size_t i) {
    const auto& q = image.nodes[i];
    return f(q.x) * vec_d(q.normal) * g(q.x) * q.w;
  });
  out.image_side = pairwise_sum(iv, n);
  // rev(J) n J is the pushed-forward normal for orientation-preserving maps
  // and its negative for reversing ones (an odd number of inversions); the
  // pushed-forward normal is outward unless the map swaps inside and outside.
  int parity = 0;
  for (const auto& g : m.provenance)
    if (g.kind == GeneratorKind::Inversion || g.kind == GeneratorKind::Cayley) parity ^= 1;
  if (reversed != (parity == 1)) out.image_side = -out.image_side;
  auto wv = map_nodes(rule.nodes.size(), [&](std::size_t i) {
    const auto& q = rule.nodes[i];
    Point u = moebius_apply(m, q.x);
    MultivectorD J = weight(m, q.x);
    return f(u) * J.reversion() * vec_d(q.normal) * J * g(u) * q.w;
  });
  out.weighted_side = pairwise_sum(wv, n);
  out.residual = (out.image_side - out.weighted_side).norm();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    out.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

bool is_number(const std::string& t) {
  if (t.empty()) return false;
  char* end = nullptr;
  std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

}  // namespace

VahlenMatrix parse_generators(int n, std::string_view text) {
  struct Pending {
    std::string name;
    std::vector<std::string> args;
  };
  std::vector<Pending> gens;
  for (auto tok : split(text, ',')) {
    std::string t;
    for (char ch : tok)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ParseError("empty generator token");
    auto colon = t.find(':');
    if (colon == std::string::npos && (is_number(t) || t.find('/') != std::string::npos)) {
      if (gens.empty()) throw ParseError("generator arguments before any generator: '" + t + "'");
      gens.back().args.push_back(t);
      continue;
    }
    Pending p;
    p.name = t.substr(0, colon);
    if (colon != std::string::npos) p.args.push_back(t.substr(colon + 1));
    gens.push_back(std::move(p));
  }
  if (gens.empty()) throw ParseError("no generators given");
  VahlenMatrix m = VahlenMatrix::identity(n);
  auto numbers = [](const std::vector<std::string>& args) {
    std::vector<double> v;
    for (const auto& a : args) v.push_back(parse_double(a));
    return v;
  };
  for (const auto& g : gens) {
    if (g.name == "inv") {
      if (!g.args.empty()) throw ParseError("inv takes no arguments");
      m = m * inversion(n);
    } else if (g.name == "trans") {
      auto v = numbers(g.args);
      if (static_cast<int>(v.size()) != n) throw ParseError("trans needs " + std::to_string(n) + " components");
      m = m * translation(n, v);
    } else if (g.name == "dil") {
      auto v = numbers(g.args);
      if (v.size() != 1) throw ParseError("dil takes one factor");
      m = m * dilation(n, v[0]);
    } else if (g.name == "rot") {
      // rot:a1,a2,../b1,b2,..: the slash sits inside one token.
      std::string joined;
      for (const auto& a : g.args) joined += (joined.empty() ? "" : ",") + a;
      auto halves = split(joined, '/');
      if (halves.size() != 2) throw ParseError("rot needs two vectors separated by '/'");
      std::vector<double> u1, u2;
      for (const auto& s : split(halves[0], ',')) u1.push_back(parse_double(s));
      for (const auto& s : split(halves[1], ',')) u2.push_back(parse_double(s));
      if (static_cast<int>(u1.size()) != n || static_cast<int>(u2.size()) != n)
        throw ParseError("rot vectors need " + std::to_string(n) + " components");
      m = m * rotation(n, u1, u2);
    } else if (g.name == "cayley") {
      int axis = 1;
      if (!g.args.empty()) axis = static_cast<int>(parse_double(g.args[0]));
      if (axis < 1 || axis > n) throw ParseError("cayley axis out of range");
      m = m * cayley(n, axis);
    } else {
      throw ParseError("unknown generator '" + g.name + "'");
    }
  }
  return m;
}

std::string describe(const VahlenMatrix& m) {
  std::ostringstream os;
  bool first = true;
  auto vecstr = [](const Point& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_scalar(v[i]);
    return s;
  };
  for (const auto& g : m.provenance) {
    if (!first) os << ',';
    first = false;
    switch (g.kind) {
      case GeneratorKind::Translation: os << "trans:" << vecstr(g.v); break;
      case GeneratorKind::Dilation: os << "dil:" << format_scalar(g.lambda); break;
      case GeneratorKind::Rotation: os << "rot:" << vecstr(g.u1) << '/' << vecstr(g.u2); break;
      case GeneratorKind::Inversion: os << "inv"; break;
      case GeneratorKind::Cayley: os << (g.inverse ? "cayley^-1:" : "cayley:") << g.axis; break;
    }
  }
  return first ? "id" : os.str();
}

VahlenMatrix random_generator_product(int n, int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_real_distribution<double> logl(std::log(0.5), std::log(2.0));
  auto rvec = [&] {
    Point v(n);
    for (auto& c : v) c = unif(rng);
    return v;
  };
  VahlenMatrix m = VahlenMatrix::identity(n);
  for (int i = 0; i < count; ++i) {
    switch (kind(rng)) {
      case 0: m = m * translation(n, rvec()); break;
      case 1: m = m * dilation(n, std::exp(logl(rng))); break;
      case 2: {
        Point a = rvec(), b = rvec();
        while (norm(a) < 0.1) a = rvec();
        while (norm(b) < 0.1) b = rvec();
        m = m * rotation(n, a, b);
        break;
      }
      default: m = m * inversion(n); break;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------

namespace {

// Dense truncated power series in `vars` real variables, total degree <=
// order. Monomials are numbered once; products use a precomputed table of
// index pairs whose degrees add up to at most `order`.
class JetSpace {
 public:
  JetSpace(int vars, int order) : vars_(vars) {
    // graded order, constant first
    Exponent e(vars, 0);
    for (int d = 0; d <= order; ++d) by_degree(e, 0, d, d);
    for (std::size_t i = 0; i < mons_.size(); ++i) index_.emplace(mons_[i], static_cast<int>(i));
    for (std::size_t i = 0; i < mons_.size(); ++i)
      for (std::size_t j = 0; j < mons_.size(); ++j) {
        if (deg_[i] + deg_[j] > order) continue;
        Exponent m = mons_[i];
        for (int v = 0; v < vars; ++v) m[v] += mons_[j][v];
        mul_.push_back({static_cast<int>(i), static_cast<int>(j), index_.at(m)});
      }
    diff_.resize(vars);
    for (int v = 0; v < vars; ++v)
      for (std::size_t i = 0; i < mons_.size(); ++i)
        if (mons_[i][v] > 0) {
          Exponent m = mons_[i];
          --m[v];
          diff_[v].push_back({static_cast<int>(i), index_.at(m), mons_[i][v]});
        }
  }

  using Jet = std::vector<double>;

  std::size_t size() const { return mons_.size(); }
  Jet constant(double c) const {
    Jet j(size(), 0.0);
    j[0] = c;
    return j;
  }
  Jet variable(int v, double at) const {
    Jet j = constant(at);
    Exponent m(vars_, 0);
    m[v] = 1;
    j[index_.at(m)] = 1;
    return j;
  }
  Jet mul(const Jet& a, const Jet& b) const {
    Jet out(size(), 0.0);
    for (const auto& [i, j, k] : mul_) out[k] += a[i] * b[j];
    return out;
  }
  Jet partial(const Jet& a, int v) const {
    Jet out(size(), 0.0);
    for (const auto& [from, to, f] : diff_[v]) out[to] += f * a[from];
    return out;
  }
  // Q^p = a^p (1 + q/a)^p with a = Q(0).
  Jet power(const Jet& Q, double p) const {
    const double a = Q[0];
    Jet qa = Q;
    qa[0] = 0;
    for (double& v : qa) v /= a;
    Jet out = constant(1), term = constant(1);
    double binom = 1;
    for (int m = 1; m <= max_degree(); ++m) {
      binom *= (p - (m - 1)) / m;
      term = mul(term, qa);
      axpy(out, binom, term);
    }
    for (double& v : out) v *= std::pow(a, p);
    return out;
  }
  static void axpy(Jet& y, double a, const Jet& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  }
  int max_degree() const { return deg_.empty() ? 0 : deg_.back(); }

 private:
  void by_degree(Exponent& e, int slot, int left, int d) {
    if (slot == vars_ - 1) {
      e[slot] = left;
      mons_.push_back(e);
      deg_.push_back(d);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[slot] = k;
      by_degree(e, slot + 1, left - k, d);
    }
    e[slot] = 0;
  }

  int vars_;
  std::vector<Exponent> mons_;
  std::vector<int> deg_;
  std::map<Exponent, int> index_;
  struct Triple {
    int a, b, c;
  };
  std::vector<Triple> mul_;
  std::vector<std::vector<Triple>> diff_;
};

const JetSpace& jet_space(int vars, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<JetSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{vars, order}];
  if (!slot) slot = std::make_unique<JetSpace>(vars, order);
  return *slot;
}

}  // namespace

SphereCK::SphereCK(const PolynomialQ& f, int jet_order) : n_(f.dim()), order_(jet_order), f_(f.convert<double>()) {
  if (f.kind() != VariableKind::Vector) throw InvalidArgument("sphere CK needs vector variables");
  if (n_ < 2) throw InvalidArgument("sphere CK needs n >= 2");
  if (jet_order < 1) throw InvalidArgument("sphere CK needs a positive jet order");
}

MultivectorD SphereCK::operator()(const Point& x) const {
  const int n = n_;
  require_n(n, x, "point");
  const int s = x[0] > 0 ? -1 : 1;
  VahlenMatrix phi_inv = cayley_inverse(n, 1, s);
  Point y = moebius_apply(phi_inv, x);
  const double y1 = y[0];

  // Jet variables: variable j - 1 carries delta_{j+1} about y'. Everything
  // up to f(phi(y)) is scalar; multivector coefficients are kept per blade.
  using Jet = JetSpace::Jet;
  const JetSpace& js = jet_space(n - 1, order_);
  std::vector<Jet> Y(n);
  Jet Q = js.constant(1.0);
  for (int j = 1; j < n; ++j) {
    Y[j] = js.variable(j - 1, y[j]);
    JetSpace::axpy(Q, 1.0, js.mul(Y[j], Y[j]));
  }
  Jet invQ = js.power(Q, -1.0);
  Jet Qp = js.power(Q, -0.5 * n);

  // phi(y) = e - 2 (y + e) / |y + e|^2 with e = s e1
  std::vector<Jet> phi(n);
  phi[0] = js.constant(s);
  JetSpace::axpy(phi[0], -2.0 * s, invQ);
  for (int j = 1; j < n; ++j) {
    phi[j] = js.mul(Y[j], invQ);
    for (double& v : phi[j]) v *= -2;
  }

  // f(phi(y)), one scalar jet per blade.
  int maxdeg = 0;
  for (const auto& [e, c] : f_.terms())
    for (int v : e) maxdeg = std::max(maxdeg, v);
  std::vector<std::vector<Jet>> pw(n);
  for (int i = 0; i < n; ++i) {
    pw[i].push_back(js.constant(1.0));
    for (int k = 1; k <= maxdeg; ++k) pw[i].push_back(js.mul(pw[i].back(), phi[i]));
  }
  std::map<Blade, Jet> fphi;
  for (const auto& [e, c] : f_.terms()) {
    Jet t = js.constant(1.0);
    for (int i = 0; i < n; ++i)
      if (e[i]) t = js.mul(t, pw[i][e[i]]);
    for (const auto& [b, v] : c.terms()) {
      auto it = fphi.try_emplace(b, js.size(), 0.0).first;
      JetSpace::axpy(it->second, v, t);
    }
  }

  // l = J(phi, y) f(phi(y)), J(phi, y) = 2^{(n-1)/2} (y + e) / |y + e|^n
  const double jscale = std::pow(2.0, 0.5 * (n - 1));
  std::map<Blade, Jet> l;
  for (int j = 0; j < n; ++j) {
    Jet Jj = j == 0 ? Qp : js.mul(Y[j], Qp);
    const double cj = jscale * (j == 0 ? s : 1);
    const Blade g = generator_blade(j + 1);
    for (const auto& [b, fb] : fphi) {
      Jet prod = js.mul(Jj, fb);
      auto it = l.try_emplace(g ^ b, js.size(), 0.0).first;
      JetSpace::axpy(it->second, cj * blade_product_sign(g, b), prod);
    }
  }

  // L(y1, y') = sum_k y1^k / k! [(e1 D')^k l](0)
  auto at_zero = [n](const std::map<Blade, Jet>& m) {
    MultivectorD out(n);
    for (const auto& [b, jet] : m)
      if (jet[0] != 0) out += MultivectorD::blade(n, b, jet[0]);
    return out;
  };
  const Blade e1 = generator_blade(1);
  MultivectorD L = at_zero(l);
  std::map<Blade, Jet> cur = std::move(l);
  double coef = 1;
  for (int k = 1; k <= order_ && !cur.empty(); ++k) {
    std::map<Blade, Jet> next;
    for (int j = 1; j < n; ++j) {
      const Blade g = generator_blade(j + 1);
      for (const auto& [b, jet] : cur) {
        // e1 e_{j+1} e_B
        const Blade gb = g ^ b;
        const int sign = blade_product_sign(g, b) * blade_product_sign(e1, gb);
        auto it = next.try_emplace(e1 ^ gb, js.size(), 0.0).first;
        JetSpace::axpy(it->second, sign, js.partial(jet, j - 1));
      }
    }
    std::erase_if(next, [](const auto& kv) {
      for (double v : kv.second)
        if (v != 0) return false;
      return true;
    });
    cur = std::move(next);
    coef *= y1 / k;
    L += at_zero(cur) * coef;
  }
  return weight(phi_inv, x) * L;
}

}  // namespace cliffa
