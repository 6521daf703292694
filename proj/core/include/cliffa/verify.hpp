#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliffa {

// One measured identity. pass is residual <= tolerance; exact checks use
// tolerance 0 and a residual that is 0 exactly when the identity holds.
struct Check {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  std::string note;
};

struct ReportParams {
  int n = 0;
  int degree = 0;
  int resolution = 0;
  std::uint64_t seed = 0;
};

// Result of one verification suite, serialised as JSON schema "report-v1".
struct Report {
  std::string suite;
  ReportParams params;
  std::vector<Check> checks;
  std::optional<double> wall_clock;  // seconds; only filled on request

  bool pass() const;
  Check& add(std::string name, double residual, double tolerance, std::string note = {});
  // Appends the checks of `sub`, prefixing their names with "suite/".
  void merge(const Report& sub);
};

// Default tolerances, one per kind of identity. `--tol` replaces every
// floating-point tolerance; exact (symbolic) checks always use 0.
struct Tolerances {
  double cauchy_theorem = 1e-8;
  double spectral_ratio = 1e-2;  // error(2r) / error(r)
  double cauchy_formula = 1e-7;
  double mean_value = 1e-7;
  double green = 1e-6;
  double taylor = 1e-8;
  double orthogonality = 1e-8;
  double pv_constant = 1e-10;
  double plemelj = 1e-4;
  double covariance = 1e-8;
  double change_of_variables = 1e-5;
  double pullback = 1e-5;
  double sphere_ck = 1e-8;
  double spherical_fd = 1e-6;
  double spherical_cauchy = 1e-5;
  double planewave_fd = 1e-5;
  double laplace = 1e-8;
  double dilation_fd = 1e-5;
  double holomorphic = 1e-6;

  void override_all(double t);
};

struct SuiteParams {
  std::optional<int> n;           // unset: the suite's own dimension set
  std::optional<int> degree;      // polynomial degree bound
  std::optional<int> resolution;  // quadrature resolution
  std::uint64_t seed = 7;
  bool quick = false;             // smaller dimension sets and resolutions
  bool timing = false;            // record wall-clock time
  Tolerances tol;
};

// Known suite names, in the order "all" runs them.
const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown suite or parameters outside the
// suite's range.
Report run_suite(const std::string& name, const SuiteParams& params);

std::string report_to_json(const Report& r);  // stable key order, no wall-clock unless set
Report report_from_json(std::string_view text);
std::string report_to_text(const Report& r);
std::string report_to_csv(const Report& r);

}  // namespace cliffa
