#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "cliffa/error.hpp"
#include "verify_internal.hpp"

namespace cliffa {

namespace {

using SuiteFn = std::function<Report(const SuiteParams&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"fueter", suites::fueter},       {"kernels", suites::kernels},       {"iterated", suites::iterated},
      {"extension", suites::extension}, {"decompose", suites::decompose},   {"fueter-sce", suites::fueter_sce},
      {"constants", suites::constants}, {"cauchy", suites::cauchy},         {"mean", suites::mean},
      {"green", suites::green},         {"kgreen", suites::kgreen},         {"taylor", suites::taylor},
      {"holomorphic", suites::holomorphic}, {"plemelj", suites::plemelj}, {"moebius", suites::moebius},
      {"spherical", suites::spherical}, {"planewave", suites::planewave},   {"periodic", suites::periodic},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

Report run_suite(const std::string& name, const SuiteParams& params) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  if (name == "all") {
    r.suite = "all";
    r.params = {params.n.value_or(0), params.degree.value_or(0), params.resolution.value_or(0), params.seed};
    for (const auto& [sub, fn] : registry()) {
      // Suites with a fixed dimension range are skipped when --n is outside it.
      try {
        r.merge(fn(params));
      } catch (const InvalidArgument&) {
        if (!params.n) throw;
      }
    }
  } else {
    auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
    if (it == registry().end()) throw InvalidArgument("unknown suite '" + name + "'");
    r = it->second(params);
  }
  if (params.timing)
    r.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace cliffa
