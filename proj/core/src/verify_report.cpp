#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "cliffa/error.hpp"
#include "cliffa/verify.hpp"

namespace cliffa {

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Check& Report::add(std::string name, double residual, double tolerance, std::string note) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  // A NaN residual never passes.
  c.pass = residual <= tolerance;
  c.note = std::move(note);
  checks.push_back(std::move(c));
  return checks.back();
}

void Report::merge(const Report& sub) {
  for (Check c : sub.checks) {
    c.name = sub.suite + "/" + c.name;
    checks.push_back(std::move(c));
  }
}

void Tolerances::override_all(double t) {
  for (double* p : {&cauchy_theorem, &spectral_ratio, &cauchy_formula, &mean_value, &green, &taylor, &orthogonality,
                    &pv_constant, &plemelj, &covariance, &change_of_variables, &pullback, &sphere_ck, &spherical_fd,
                    &spherical_cauchy, &planewave_fd, &laplace, &dilation_fd, &holomorphic})
    *p = t;
}

namespace {

using nlohmann::ordered_json;

// Doubles are written in shortest round-trip form, so parsing restores them;
// non-finite values become strings since JSON has no literal for them.
ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

double read_number(const ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  std::string s = j.get<std::string>();
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  throw ParseError("report: bad number '" + s + "'");
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

std::string report_to_json(const Report& r) {
  ordered_json j;
  j["schema"] = "report-v1";
  j["suite"] = r.suite;
  j["params"] = {{"n", r.params.n}, {"degree", r.params.degree}, {"resolution", r.params.resolution}, {"seed", r.params.seed}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json o;
    o["name"] = c.name;
    o["residual"] = number(c.residual);
    o["tolerance"] = number(c.tolerance);
    o["pass"] = c.pass;
    if (!c.note.empty()) o["note"] = c.note;
    checks.push_back(std::move(o));
  }
  j["checks"] = std::move(checks);
  j["pass"] = r.pass();
  if (r.wall_clock) j["wall_clock"] = *r.wall_clock;
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "report-v1") throw ParseError("report: unsupported schema");
    Report r;
    r.suite = j.at("suite").get<std::string>();
    const auto& p = j.at("params");
    r.params.n = p.at("n").get<int>();
    r.params.degree = p.at("degree").get<int>();
    r.params.resolution = p.at("resolution").get<int>();
    r.params.seed = p.at("seed").get<std::uint64_t>();
    for (const auto& o : j.at("checks")) {
      Check c;
      c.name = o.at("name").get<std::string>();
      c.residual = read_number(o.at("residual"));
      c.tolerance = read_number(o.at("tolerance"));
      c.pass = o.at("pass").get<bool>();
      if (o.contains("note")) c.note = o.at("note").get<std::string>();
      r.checks.push_back(std::move(c));
    }
    if (j.contains("wall_clock")) r.wall_clock = j.at("wall_clock").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << "  n=" << r.params.n << " degree=" << r.params.degree
     << " resolution=" << r.params.resolution << " seed=" << r.params.seed << "\n";
  std::size_t width = 5;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ')
       << "residual " << short_number(c.residual) << "  tol " << short_number(c.tolerance);
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  os << (r.pass() ? "PASS" : "FAIL") << " " << r.suite;
  if (r.wall_clock) os << "  " << short_number(*r.wall_clock) << " s";
  os << "\n";
  return os.str();
}

std::string report_to_csv(const Report& r) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream os;
  os << "suite,n,degree,resolution,seed,check,residual,tolerance,pass,note\n";
  for (const auto& c : r.checks) {
    char res[32], tol[32];
    std::snprintf(res, sizeof res, "%.17g", c.residual);
    std::snprintf(tol, sizeof tol, "%.17g", c.tolerance);
    os << quote(r.suite) << ',' << r.params.n << ',' << r.params.degree << ',' << r.params.resolution << ','
       << r.params.seed << ',' << quote(c.name) << ',' << res << ',' << tol << ',' << (c.pass ? "true" : "false") << ','
       << quote(c.note) << "\n";
  }
  return os.str();
}

}  // namespace cliffa
