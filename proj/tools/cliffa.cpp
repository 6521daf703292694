#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffa/calculus.hpp"
#include "cliffa/error.hpp"
#include "cliffa/integration.hpp"
#include "cliffa/kernels.hpp"
#include "cliffa/moebius.hpp"
#include "cliffa/polyjson.hpp"
#include "cliffa/quadrature.hpp"
#include "cliffa/series.hpp"
#include "cliffa/textio.hpp"
#include "cliffa/verify.hpp"

namespace {

using cliffa::MultivectorD;
using cliffa::Point;
using cliffa::PolynomialQ;
using cliffa::Rational;
using nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::optional<int> n;
  std::uint64_t seed = 7;
  std::optional<double> tol;
  std::string format = "text";
  std::optional<int> resolution;
  bool timing = false;
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered key/value output for the evaluation subcommands. Text is one
// "key: value" line per row, JSON an object, CSV a header plus one row.
class Table {
 public:
  void add(const std::string& key, ordered_json value) { rows_.emplace_back(key, std::move(value)); }

  std::string render(const std::string& format) const {
    std::ostringstream os;
    if (format == "json") {
      ordered_json j = ordered_json::object();
      for (const auto& [k, v] : rows_) j[k] = v;
      os << j.dump(2) << "\n";
    } else if (format == "csv") {
      for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i].first;
      os << "\n";
      for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << quote(plain(rows_[i].second));
      os << "\n";
    } else {
      for (const auto& [k, v] : rows_) os << k << ": " << plain(v) << "\n";
    }
    return os.str();
  }

 private:
  static std::string plain(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }
  static std::string quote(const std::string& s) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  std::vector<std::pair<std::string, ordered_json>> rows_;
};

Point parse_point(const std::string& text, const char* what) {
  Point p;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      p.push_back(cliffa::parse_double(tok));
    } catch (const cliffa::Error&) {
      throw Usage(std::string(what) + ": bad number '" + tok + "'");
    }
  }
  if (p.empty()) throw Usage(std::string(what) + ": empty point");
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// "@file.json" (polynomial JSON), "@file.txt" (polynomial text) or inline text.
PolynomialQ read_polynomial(const std::string& spec, std::optional<int> n) {
  std::string text = spec;
  if (!spec.empty() && spec[0] == '@') text = read_file(spec.substr(1));
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    PolynomialQ p = cliffa::polynomial_from_json(text);
    if (n && *n != p.dim()) throw Usage("--n does not match the polynomial's dimension");
    return p;
  }
  if (!n) throw Usage("--n is required for polynomial text input");
  return cliffa::parse_polynomial<Rational>(*n, text);
}

int dimension_of(const Globals& g, const Point& p, int offset = 0) {
  int n = static_cast<int>(p.size()) - offset;
  if (g.n && *g.n != n) throw Usage("--n = " + std::to_string(*g.n) + " does not match the point's dimension");
  return n;
}

ordered_json point_json(const Point& p) { return ordered_json(p); }

// Nearest rational with denominator <= 10^6 if it is within 1e-12 (relative)
// of v, otherwise the exact binary value of v.
Rational snap(double v) {
  if (!std::isfinite(v)) throw cliffa::InvalidArgument("non-finite coefficient");
  double x = v;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(x);
    if (std::abs(a) > 1e15) break;
    long long ai = static_cast<long long>(a);
    long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > 1000000) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - v) <= 1e-12 * std::max(1.0, std::abs(v))) {
      Rational r(static_cast<long>(p1), static_cast<long>(q1));
      r.canonicalize();
      return r;
    }
    double frac = x - a;
    if (frac == 0) break;
    x = 1 / frac;
  }
  return Rational(v);
}

cliffa::MultivectorQ snap(const MultivectorD& a) {
  cliffa::MultivectorQ out(a.dim());
  for (const auto& [b, s] : a.terms()) out += cliffa::MultivectorQ::blade(a.dim(), b, snap(s));
  return out;
}

// p(x - c)
PolynomialQ shift(const PolynomialQ& p, const Point& c) {
  const int n = p.dim();
  PolynomialQ out(n);
  std::vector<PolynomialQ> lin;
  for (int j = 0; j < n; ++j)
    lin.push_back(PolynomialQ::variable(n, j) - PolynomialQ::constant(n, snap(c[j])));
  for (const auto& [e, coef] : p.terms()) {
    PolynomialQ term = PolynomialQ::constant(coef);
    for (int j = 0; j < n; ++j) term = term * lin[j].pow(e[j]);
    out += term;
  }
  return out;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& suite, std::optional<int> degree, bool quick) {
  cliffa::SuiteParams params;
  params.n = g.n;
  params.degree = degree;
  params.resolution = g.resolution;
  params.seed = g.seed;
  params.quick = quick;
  params.timing = g.timing;
  if (g.tol) params.tol.override_all(*g.tol);
  cliffa::Report r = cliffa::run_suite(suite, params);
  if (g.format == "json")
    std::cout << cliffa::report_to_json(r);
  else if (g.format == "csv")
    std::cout << cliffa::report_to_csv(r);
  else
    std::cout << cliffa::report_to_text(r);
  return r.pass() ? kPass : kFail;
}

// --- kernels --------------------------------------------------------------

struct KernelArgs {
  std::string kernel;
  std::string point, y, zeta, zi;
  int k = 1, l = 1, R = 12, K = 40, sign = 1;
};

int cmd_kernels_eval(const Globals& g, const KernelArgs& a) {
  Table t;
  t.add("kernel", a.kernel);
  Point x = parse_point(a.point, "--point");
  auto need_y = [&](int size) {
    if (a.y.empty()) throw Usage("--kernel " + a.kernel + " needs --y");
    Point y = parse_point(a.y, "--y");
    if (static_cast<int>(y.size()) != size) throw Usage("--y has the wrong dimension");
    return y;
  };
  auto opt_y = [&](int size) { return a.y.empty() ? Point(size, 0.0) : need_y(size); };

  if (a.kernel == "G") {
    int n = dimension_of(g, x);
    t.add("n", n);
    t.add("value", cliffa::to_string(cliffa::eval_cauchy_diff(x, opt_y(n))));
  } else if (a.kernel == "H") {
    int n = dimension_of(g, x);
    t.add("n", n);
    t.add("value", cliffa::eval_newton(cliffa::sub(x, opt_y(n))));
  } else if (a.kernel == "Gk") {
    int n = dimension_of(g, x);
    auto fam = cliffa::iterated_kernel(n, a.k);
    t.add("n", n);
    t.add("k", a.k);
    t.add("C", fam.C.get_str());
    if (fam.A) t.add("A", fam.A->get_str());
    t.add("value", cliffa::to_string(fam.symbolic.convert<double>().evaluate(cliffa::sub(x, opt_y(n)))));
  } else if (a.kernel == "Gs") {
    int n = dimension_of(g, x, 1);
    t.add("n", n);
    t.add("value", cliffa::to_string(cliffa::spherical_G(n, x, need_y(n + 1))));
  } else if (a.kernel == "cot") {
    int n = dimension_of(g, x);
    auto s = cliffa::periodic_kernel_cot(n, a.k, a.l, x, need_y(n), a.R);
    t.add("n", n);
    t.add("value", cliffa::to_string(s.value));
    t.add("tail_estimate", s.tail_estimate);
    t.add("boundary_bound", s.boundary_bound);
    t.add("terms", s.terms);
  } else if (a.kernel == "dilation") {
    int n = dimension_of(g, x);
    auto s = cliffa::dilation_kernel(n, x, need_y(n), a.K);
    t.add("n", n);
    t.add("value", cliffa::to_string(s.value));
    t.add("tail_estimate", s.tail_estimate);
  } else if (a.kernel == "planewave") {
    int n = dimension_of(g, x);
    if (a.zeta.empty()) throw Usage("--kernel planewave needs --zeta");
    auto w = cliffa::plane_wave(n, parse_point(a.zeta, "--zeta"), a.sign);
    t.add("n", n);
    t.add("value", cliffa::to_string(cliffa::plane_wave_eval(w, x)));
  } else if (a.kernel == "Gdagger") {
    int n = dimension_of(g, x);
    Point re = opt_y(n);
    Point im = a.zi.empty() ? Point(n, 0.0) : parse_point(a.zi, "--zi");
    if (static_cast<int>(im.size()) != n) throw Usage("--zi has the wrong dimension");
    std::vector<cliffa::Complex> z(n);
    for (int j = 0; j < n; ++j) z[j] = {re[j], im[j]};
    t.add("n", n);
    t.add("value", cliffa::to_string(cliffa::complex_kernel_eval(x, z)));
  } else {
    throw Usage("unknown kernel '" + a.kernel + "'");
  }
  std::cout << t.render(g.format);
  return kPass;
}

int cmd_kernels_constants(const Globals& g, int k) {
  if (!g.n) throw Usage("kernels constants needs --n");
  auto fam = cliffa::iterated_kernel(*g.n, k);
  Table t;
  t.add("n", *g.n);
  t.add("k", k);
  t.add("C", fam.C.get_str());
  t.add("A", fam.A ? ordered_json(fam.A->get_str()) : ordered_json(nullptr));
  t.add("log_case", fam.log_case);
  t.add("kernel", cliffa::to_string(fam.symbolic));
  std::cout << t.render(g.format);
  return kPass;
}

// --- series ---------------------------------------------------------------

int cmd_series_taylor(const Globals& g, const std::string& poly, const std::string& center_text, int order,
                      double radius, const std::string& side_name) {
  PolynomialQ p = read_polynomial(poly, g.n);
  const int n = p.dim();
  Point c = center_text.empty() ? Point(n, 0.0) : parse_point(center_text, "--center");
  if (static_cast<int>(c.size()) != n) throw Usage("--center has the wrong dimension");
  if (side_name != "left" && side_name != "right") throw Usage("--side must be left or right");
  auto side = side_name == "left" ? cliffa::Side::Left : cliffa::Side::Right;

  auto rule = cliffa::sphere_rule(n, c, radius, g.resolution.value_or(16));
  auto f = cliffa::BoundaryDensity::from_polynomial(p);
  auto te = cliffa::taylor_coefficients(f.eval, rule, order, side);

  // The truncated series as a polynomial in x.
  PolynomialQ local(n);
  for (const auto& [idx, a] : te.coefficients) {
    PolynomialQ v = cliffa::fueter_polynomial(n, idx);
    auto aq = snap(a);
    local += side == cliffa::Side::Left ? v * aq : aq * v.map_coefficients([](const auto& m) { return m.reversion(); });
  }
  PolynomialQ series = shift(local, c);

  if (g.format == "json") {
    std::cout << cliffa::polynomial_to_json(series);
  } else if (g.format == "csv") {
    std::cout << "index,coefficient\n";
    for (const auto& [idx, a] : te.coefficients) {
      std::string s;
      for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + std::to_string(idx[i]);
      std::cout << "\"" << s << "\",\"" << cliffa::to_string(a) << "\"\n";
    }
  } else {
    for (const auto& [idx, a] : te.coefficients) {
      std::cout << "V(";
      for (std::size_t i = 0; i < idx.size(); ++i) std::cout << (i ? "," : "") << idx[i];
      std::cout << "): " << cliffa::to_string(a) << "\n";
    }
    std::cout << "series: " << cliffa::to_string(series) << "\n";
  }
  return kPass;
}

int cmd_series_decompose(const Globals& g, const std::string& kind, const std::string& poly, int k,
                         const std::string& out_prefix) {
  PolynomialQ p = read_polynomial(poly, g.n);
  std::vector<PolynomialQ> parts;
  if (kind == "almansi") {
    auto s = cliffa::almansi_split(p);
    parts = {s.f2, s.f1};  // h = f2 + x f1, listed by power of x
  } else if (kind == "kmono") {
    parts = cliffa::kmonogenic_split(p, k);
  } else {
    throw Usage("--kind must be almansi or kmono");
  }
  bool exact = cliffa::kmonogenic_join(parts) == p;

  if (!out_prefix.empty()) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::string path = out_prefix + "_" + std::to_string(j) + ".json";
      std::ofstream(path) << cliffa::polynomial_to_json(parts[j]);
      std::cout << path << "\n";
    }
  } else if (g.format == "json") {
    ordered_json j;
    j["kind"] = kind;
    j["parts"] = ordered_json::array();
    for (const auto& q : parts) j["parts"].push_back(ordered_json::parse(cliffa::polynomial_to_json(q)));
    j["reconstructs"] = exact;
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "power,polynomial\n";
    for (std::size_t j = 0; j < parts.size(); ++j) std::cout << j << ",\"" << cliffa::to_string(parts[j]) << "\"\n";
  } else {
    for (std::size_t j = 0; j < parts.size(); ++j) std::cout << "f" << j << ": " << cliffa::to_string(parts[j]) << "\n";
    std::cout << "reconstructs: " << (exact ? "true" : "false") << "\n";
  }
  return exact ? kPass : kFail;
}

// --- moebius --------------------------------------------------------------

int cmd_moebius(const Globals& g, const std::string& action, const std::string& gens, const std::string& point_text,
                int k, int samples) {
  std::optional<Point> x;
  if (!point_text.empty()) x = parse_point(point_text, "--point");
  int n = x ? dimension_of(g, *x) : g.n.value_or(3);
  auto m = cliffa::parse_generators(n, gens);
  Table t;
  t.add("map", cliffa::describe(m));
  if (action == "apply" || action == "weight") {
    if (!x) throw Usage("moebius " + action + " needs --point");
    if (action == "apply")
      t.add("image", point_json(cliffa::moebius_apply(m, *x)));
    else
      t.add("weight", cliffa::to_string(k == 1 ? cliffa::weight(m, *x) : cliffa::weight_k(m, *x, k)));
    std::cout << t.render(g.format);
    return kPass;
  }
  if (action != "covariance") throw Usage("unknown moebius action '" + action + "'");
  std::mt19937_64 rng(g.seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0;
  int used = 0;
  for (int i = 0; i < samples; ++i) {
    Point a(n), b(n);
    for (int j = 0; j < n; ++j) a[j] = u(rng), b[j] = u(rng);
    try {
      worst = std::max(worst, cliffa::kernel_covariance_residual(m, a, b));
      ++used;
    } catch (const cliffa::SingularPoint&) {
    }
  }
  double tol = g.tol.value_or(cliffa::Tolerances{}.covariance);
  bool pass = used > 0 && worst <= tol;
  t.add("seed", g.seed);
  t.add("pairs", used);
  t.add("residual", worst);
  t.add("tolerance", tol);
  t.add("pass", pass);
  std::cout << t.render(g.format);
  return pass ? kPass : kFail;
}

// --- integrate ------------------------------------------------------------

int cmd_integrate(const Globals& g, const std::string& what, const std::string& poly, const std::string& point_text,
                  const std::string& center_text, double radius, const std::string& side_name) {
  Table t;
  if (what == "pv") {
    Point z = parse_point(point_text, "--point");
    int n = dimension_of(g, z);
    double v = cliffa::pv_constant(n, z, g.resolution.value_or(16));
    double tol = g.tol.value_or(cliffa::Tolerances{}.pv_constant);
    t.add("value", v);
    t.add("residual", std::abs(v - 0.5));
    t.add("tolerance", tol);
    t.add("pass", std::abs(v - 0.5) <= tol);
    std::cout << t.render(g.format);
    return std::abs(v - 0.5) <= tol ? kPass : kFail;
  }
  if (what != "cauchy" && what != "mean") throw Usage("integrate: unknown quantity '" + what + "'");
  if (poly.empty()) throw Usage("integrate " + what + " needs --poly");
  if (side_name != "left" && side_name != "right") throw Usage("--side must be left or right");
  PolynomialQ p = read_polynomial(poly, g.n);
  const int n = p.dim();
  Point y = parse_point(point_text, "--point");
  if (static_cast<int>(y.size()) != n) throw Usage("--point has the wrong dimension");
  Point c = center_text.empty() ? Point(n, 0.0) : parse_point(center_text, "--center");
  if (static_cast<int>(c.size()) != n) throw Usage("--center has the wrong dimension");
  const bool left = side_name == "left";
  const bool monogenic = (left ? cliffa::dirac_left(p) : cliffa::dirac_right(p)).is_zero();
  const int res = g.resolution.value_or(24);
  auto f = cliffa::BoundaryDensity::from_polynomial(p);

  MultivectorD value(n), expected(n);
  double tol = 0;
  if (what == "cauchy") {
    value = cliffa::cauchy_integral(f.eval, y, cliffa::sphere_rule(n, c, radius, res), left);
    bool inside = cliffa::norm(cliffa::sub(y, c)) < radius;
    if (inside) expected = f(y);
    tol = g.tol.value_or(cliffa::Tolerances{}.cauchy_formula);
    t.add("region", inside ? "interior" : "exterior");
  } else {
    // Mean over the sphere of the given radius about --point.
    value = cliffa::surface_mean(f.eval, cliffa::sphere_rule(n, y, radius, res));
    expected = f(y);
    tol = g.tol.value_or(cliffa::Tolerances{}.mean_value);
  }
  t.add("value", cliffa::to_string(value));
  t.add("monogenic", monogenic);
  if (!monogenic) {
    std::cout << t.render(g.format);
    return kPass;
  }
  double residual = (value - expected).norm();
  t.add("expected", cliffa::to_string(expected));
  t.add("residual", residual);
  t.add("tolerance", tol);
  t.add("pass", residual <= tol);
  std::cout << t.render(g.format);
  return residual <= tol ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliffa: Clifford analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_option("--n", g.n, "Dimension of the underlying space")->check(CLI::Range(1, 16));
  app.add_option("--seed", g.seed, "Seed for random test points")->capture_default_str();
  app.add_option("--tol", g.tol, "Override every floating-point tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--resolution", g.resolution, "Quadrature resolution")->check(CLI::Range(2, 512));
  app.add_flag("--timing", g.timing, "Record wall-clock time in reports");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::optional<int> degree;
  bool quick = false;
  std::string suite_help = "Suite name: all";
  for (const auto& s : cliffa::suite_names()) suite_help += ", " + s;
  verify->add_option("suite", suite, suite_help)->required();
  verify->add_option("--degree,--maxdeg", degree, "Polynomial degree bound")->check(CLI::Range(0, 12));
  verify->add_flag("--quick", quick, "Smaller dimension sets and resolutions");

  auto* kernels = app.add_subcommand("kernels", "Evaluate kernels and their constants");
  kernels->require_subcommand(1);
  auto* keval = kernels->add_subcommand("eval", "Evaluate a kernel at a point");
  KernelArgs ka;
  keval->add_option("--kernel", ka.kernel, "Kernel")
      ->required()
      ->check(CLI::IsMember({"G", "H", "Gk", "Gs", "cot", "dilation", "planewave", "Gdagger"}));
  keval->add_option("--point", ka.point, "Evaluation point x, comma separated")->required();
  keval->add_option("--y", ka.y, "Second point y (real part of z for Gdagger)");
  keval->add_option("--zi", ka.zi, "Imaginary part of z for Gdagger");
  keval->add_option("--zeta", ka.zeta, "Plane-wave frequency (n-1 components)");
  keval->add_option("--sign", ka.sign, "Plane-wave sign")->check(CLI::IsMember({-1, 1}));
  keval->add_option("--k", ka.k, "Iteration order k (Gk) or lattice rank k (cot)")->capture_default_str();
  keval->add_option("--l", ka.l, "Number of antiperiodic directions (cot)")->capture_default_str();
  keval->add_option("--R", ka.R, "Lattice truncation radius (cot)")->capture_default_str();
  keval->add_option("--terms", ka.K, "Terms per sum (dilation)")->capture_default_str();
  auto* kconst = kernels->add_subcommand("constants", "Print C(n,k) and A(n,k) as exact rationals");
  int kc = 1;
  kconst->add_option("--k", kc, "Kernel order")->required()->check(CLI::Range(1, 64));

  auto* series = app.add_subcommand("series", "Taylor series and polynomial decompositions");
  series->require_subcommand(1);
  auto* taylor = series->add_subcommand("taylor", "Taylor coefficients of polynomial data");
  std::string poly, center, side = "left";
  int order = 3;
  double radius = 0.5;
  taylor->add_option("--poly", poly, "Polynomial: @file.json, @file.txt or inline text")->required();
  taylor->add_option("--center", center, "Expansion centre (default: origin)");
  taylor->add_option("--order", order, "Highest degree")->check(CLI::Range(0, 12))->capture_default_str();
  taylor->add_option("--radius", radius, "Radius of the integration sphere")->capture_default_str();
  taylor->add_option("--side", side, "left or right")->capture_default_str();
  auto* decompose = series->add_subcommand("decompose", "Almansi or k-monogenic split");
  std::string kind, out_prefix;
  int kparts = 2;
  decompose->add_option("--kind", kind, "almansi or kmono")->required()->check(CLI::IsMember({"almansi", "kmono"}));
  decompose->add_option("--poly", poly, "Polynomial: @file.json, @file.txt or inline text")->required();
  decompose->add_option("--k", kparts, "Number of parts for kmono")->check(CLI::Range(1, 16))->capture_default_str();
  decompose->add_option("--out", out_prefix, "Write PREFIX_j.json for each part");

  auto* moebius = app.add_subcommand("moebius", "Moebius maps given as generator products");
  std::string action, gens, point;
  int wk = 1, samples = 200;
  moebius->add_option("action", action, "apply, weight or covariance")
      ->required()
      ->check(CLI::IsMember({"apply", "weight", "covariance"}));
  moebius->add_option("--gens", gens, "Generators, e.g. \"inv,trans:1,0,0,dil:2,cayley:1\"")->required();
  moebius->add_option("--point", point, "Point, comma separated");
  moebius->add_option("--k", wk, "Weight order")->capture_default_str();
  moebius->add_option("--samples", samples, "Random pairs for covariance")->capture_default_str();

  auto* integrate = app.add_subcommand("integrate", "Boundary integrals of polynomial data");
  std::string what;
  double iradius = 1.0;
  integrate->add_option("quantity", what, "cauchy, mean or pv")->required()->check(CLI::IsMember({"cauchy", "mean", "pv"}));
  integrate->add_option("--poly", poly, "Polynomial: @file.json, @file.txt or inline text");
  integrate->add_option("--point", point, "Evaluation point")->required();
  integrate->add_option("--center", center, "Sphere centre (cauchy; default origin)");
  integrate->add_option("--radius", iradius, "Sphere radius")->capture_default_str();
  integrate->add_option("--side", side, "left or right")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(g, suite, degree, quick);
    if (keval->parsed()) return cmd_kernels_eval(g, ka);
    if (kconst->parsed()) return cmd_kernels_constants(g, kc);
    if (taylor->parsed()) return cmd_series_taylor(g, poly, center, order, radius, side);
    if (decompose->parsed()) return cmd_series_decompose(g, kind, poly, kparts, out_prefix);
    if (moebius->parsed()) return cmd_moebius(g, action, gens, point, wk, samples);
    if (integrate->parsed()) return cmd_integrate(g, what, poly, point, center, iradius, side);
  } catch (const Usage& e) {
    std::cerr << "cliffa: " << e.what() << "\n";
    return kUsage;
  } catch (const cliffa::InvalidArgument& e) {
    std::cerr << "cliffa: " << e.what() << "\n";
    return kUsage;
  } catch (const cliffa::ParseError& e) {
    std::cerr << "cliffa: " << e.what() << "\n";
    return kUsage;
  } catch (const cliffa::SingularPoint& e) {
    std::cerr << "cliffa: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "cliffa: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
