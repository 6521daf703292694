#include <algorithm>
#include <cmath>
#include <functional>

#include "cliffa/series.hpp"
#include "cliffa/textio.hpp"
#include "verify_internal.hpp"

namespace cliffa::suites {

Point random_unit(int n, std::mt19937_64& rng) {
  while (true) {
    Point p(n);
    for (double& v : p) v = uniform(rng, -1, 1);
    double r = norm(p);
    if (r > 0.1 && r <= 1) return scale(p, 1 / r);
  }
}

Point random_in_ball(const Point& center, double radius, std::mt19937_64& rng) {
  const int n = static_cast<int>(center.size());
  while (true) {
    Point p(n);
    for (double& v : p) v = uniform(rng, -1, 1);
    if (norm(p) <= 1) return add(center, scale(p, radius));
  }
}

Point random_in_shell(const Point& center, double r0, double r1, std::mt19937_64& rng) {
  Point u = random_unit(static_cast<int>(center.size()), rng);
  return add(center, scale(u, uniform(rng, r0, r1)));
}

MultivectorQ random_coefficient(int n, std::mt19937_64& rng) {
  const Blade count = Blade(1) << n;
  MultivectorQ a(n);
  while (a.is_zero())
    for (int t = 0; t < 3; ++t) {
      Blade b = static_cast<Blade>(rng() % count);
      long num = static_cast<long>(rng() % 9) - 4;
      Rational c(num, 4);
      c.canonicalize();  // gmp arithmetic assumes canonical operands
      a += MultivectorQ::blade(n, b, c);
    }
  return a;
}

double exact_residual(const PolynomialQ& p) { return p.max_abs(); }

double exact_residual(const RadialQ& r) {
  double m = 0;
  for (const auto& [key, v] : radial_coordinates(r)) m = std::max(m, std::abs(v.get_d()));
  return m;
}

std::vector<int> dims_or(const SuiteParams& p, std::vector<int> defaults, std::vector<int> quick) {
  if (p.n) return {*p.n};
  return p.quick ? quick : defaults;
}

std::string tag(int n) { return "n=" + std::to_string(n); }
std::string tag(int n, int k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

namespace {

void require_dim(int n, int lo, int hi, const char* suite) {
  if (n < lo || n > hi)
    throw InvalidArgument(std::string(suite) + ": n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::vector<PolynomialQ> fueter_basis(int n, int degree) {
  std::vector<PolynomialQ> out;
  for (const auto& idx : enumerate_multi_indices(n, degree)) out.push_back(fueter_polynomial(n, idx));
  return out;
}

// A generic monogenic polynomial of exact degree d: sum over the degree-d
// Fueter basis with random constant coefficients on the right.
PolynomialQ random_monogenic(int n, int d, std::mt19937_64& rng) {
  PolynomialQ f(n);
  for (const auto& P : fueter_basis(n, d)) f += P * random_coefficient(n, rng);
  return f;
}

}  // namespace

Report fueter(const SuiteParams& p) {
  Report r;
  r.suite = "fueter";
  int maxdeg = p.degree.value_or(p.quick ? 3 : 4);
  if (maxdeg < 0 || maxdeg > 8) throw InvalidArgument("fueter: degree must lie in [0, 8]");
  r.params = {p.n.value_or(0), maxdeg, 0, p.seed};
  for (int n : dims_or(p, {3, 4, 5}, {3, 4})) {
    require_dim(n, 2, 8, "fueter");
    double mono = 0, eig = 0;
    int count = 0;
    for (int d = 0; d <= maxdeg; ++d)
      for (const auto& P : fueter_basis(n, d)) {
        mono = std::max(mono, exact_residual(dirac_left(P)));
        // D(x P) = -(n + 2d) P
        if (d <= 3) eig = std::max(eig, exact_residual(dirac_left(times_x(P)) + P * Rational(n + 2 * d)));
        ++count;
      }
    r.add("D P = 0 (" + tag(n) + ", " + std::to_string(count) + " polynomials)", mono, 0);
    r.add("D x P_k = -(n+2k) P_k (" + tag(n) + ", k<=3)", eig, 0);
  }
  return r;
}

Report kernels(const SuiteParams& p) {
  Report r;
  r.suite = "kernels";
  int kmax = p.degree.value_or(6);
  if (kmax < 1 || kmax > 10) throw InvalidArgument("kernels: k must lie in [1, 10]");
  r.params = {p.n.value_or(0), kmax, 0, p.seed};
  for (int n : dims_or(p, {3, 4, 5}, {3, 4})) {
    require_dim(n, 3, 8, "kernels");
    double chain = 0, annihilate = 0;
    bool saw_log = false;
    for (int k = 1; k <= kmax; ++k) {
      KernelFamily g = iterated_kernel(n, k);
      saw_log = saw_log || g.log_case;
      if (k > 1) chain = std::max(chain, exact_residual(dirac_left(g.symbolic) - iterated_kernel(n, k - 1).symbolic));
      RadialQ d = g.symbolic;
      for (int j = 0; j < k; ++j) d = dirac_left(d);
      annihilate = std::max(annihilate, exact_residual(d));
    }
    std::string note = saw_log ? "includes the logarithmic case" : "";
    r.add("D G_k = G_{k-1} (" + tag(n) + ", k<=" + std::to_string(kmax) + ")", chain, 0, note);
    r.add("D^k G_k = 0 (" + tag(n) + ", k<=" + std::to_string(kmax) + ")", annihilate, 0, note);
  }
  return r;
}

Report iterated(const SuiteParams& p) {
  Report r;
  r.suite = "iterated";
  int maxdeg = p.degree.value_or(3);
  r.params = {p.n.value_or(0), maxdeg, 0, p.seed};
  std::mt19937_64 rng(p.seed);
  for (int n : dims_or(p, {3, 4, 5}, {3, 4})) {
    require_dim(n, 2, 8, "iterated");
    double two = 0, xk = 0;
    for (int d = 0; d <= maxdeg; ++d)
      for (const auto& P : fueter_basis(n, d)) two = std::max(two, exact_residual(dirac_power(times_x(P), 2)));
    for (int d = 0; d <= std::min(maxdeg, 2); ++d) {
      PolynomialQ f = random_monogenic(n, d, rng);
      for (int k = 1; k <= 4; ++k) xk = std::max(xk, exact_residual(dirac_power(x_power_monogenic(f, k), k)));
    }
    r.add("D^2 (x f) = 0 for monogenic f (" + tag(n) + ", deg<=" + std::to_string(maxdeg) + ")", two, 0);
    r.add("D^k (x^{k-1} f) = 0 (" + tag(n) + ", k<=4)", xk, 0);
  }
  return r;
}

Report extension(const SuiteParams& p) {
  Report r;
  r.suite = "extension";
  int maxdeg = p.degree.value_or(p.quick ? 3 : 4);
  r.params = {p.n.value_or(0), maxdeg, 0, p.seed};
  std::mt19937_64 rng(p.seed);
  for (int n : dims_or(p, {3, 4, 5}, {3, 4})) {
    require_dim(n, 2, 8, "extension");
    double mono = 0, restr = 0;
    int count = 0;
    // Every monomial in x2..xn up to the degree bound, with a random
    // Clifford coefficient.
    Exponent e(n, 0);
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == n) {
        PolynomialQ data = PolynomialQ::monomial(e, random_coefficient(n, rng));
        PolynomialQ f = ck_extension(data);
        mono = std::max(mono, exact_residual(dirac_left(f)));
        restr = std::max(restr, exact_residual(f.restrict_zero(0) - data));
        ++count;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[slot] = v;
        rec(slot + 1, left - v);
      }
      e[slot] = 0;
    };
    rec(1, maxdeg);
    r.add("CK extension is monogenic (" + tag(n) + ", " + std::to_string(count) + " data)", mono, 0);
    r.add("CK extension restricts to the data (" + tag(n) + ")", restr, 0);
  }
  return r;
}

Report decompose(const SuiteParams& p) {
  Report r;
  r.suite = "decompose";
  int maxdeg = p.degree.value_or(2);
  r.params = {p.n.value_or(0), maxdeg, 0, p.seed};
  std::mt19937_64 rng(p.seed);
  for (int n : dims_or(p, {3, 4, 5}, {3, 4})) {
    require_dim(n, 2, 8, "decompose");
    // Almansi: h = x f1 + f2 from known monogenic parts; the split is
    // unique, so it must return exactly those parts.
    double rec_a = 0, mono_a = 0, parts_a = 0;
    for (int d = 0; d <= maxdeg; ++d) {
      PolynomialQ f1 = random_monogenic(n, d, rng), f2 = random_monogenic(n, d + 1, rng);
      PolynomialQ h = times_x(f1) + f2;
      AlmansiSplit s = almansi_split(h);
      rec_a = std::max(rec_a, exact_residual(times_x(s.f1) + s.f2 - h));
      mono_a = std::max({mono_a, exact_residual(dirac_left(s.f1)), exact_residual(dirac_left(s.f2))});
      parts_a = std::max({parts_a, exact_residual(s.f1 - f1), exact_residual(s.f2 - f2)});
    }
    r.add("Almansi split reconstructs h (" + tag(n) + ")", rec_a, 0);
    r.add("Almansi parts are monogenic (" + tag(n) + ")", mono_a, 0);
    r.add("Almansi parts equal the generating parts (" + tag(n) + ")", parts_a, 0);

    double rec_k = 0, mono_k = 0, parts_k = 0;
    for (int k = 2; k <= 4; ++k) {
      std::vector<PolynomialQ> parts;
      for (int j = 0; j < k; ++j) parts.push_back(random_monogenic(n, (j + k) % (maxdeg + 1), rng));
      PolynomialQ pk = kmonogenic_join(parts);
      auto split = kmonogenic_split(pk, k);
      rec_k = std::max(rec_k, exact_residual(kmonogenic_join(split) - pk));
      for (std::size_t j = 0; j < split.size(); ++j) {
        mono_k = std::max(mono_k, exact_residual(dirac_left(split[j])));
        parts_k = std::max(parts_k, exact_residual(split[j] - (j < parts.size() ? parts[j] : PolynomialQ(n))));
      }
    }
    r.add("k-monogenic split reconstructs p (" + tag(n) + ", k<=4)", rec_k, 0);
    r.add("k-monogenic parts are monogenic (" + tag(n) + ")", mono_k, 0);
    r.add("k-monogenic parts equal the generating parts (" + tag(n) + ")", parts_k, 0);
  }
  return r;
}

Report fueter_sce(const SuiteParams& p) {
  Report r;
  r.suite = "fueter-sce";
  int n = p.n.value_or(4);
  if (n % 2 != 0 || n < 2 || n > 8) throw InvalidArgument("fueter-sce: n must be even and in [2, 8]");
  int kmax = p.degree.value_or(4);
  r.params = {n, kmax, 0, p.seed};
  double corrected = 0;
  for (int k = 0; k <= kmax; ++k) corrected = std::max(corrected, exact_residual(dirac_power(fueter_sce_power(n, k), n - 1)));
  r.add("D^{n-1} (e1^{-1} x)^k = 0 (" + tag(n) + ", k<=" + std::to_string(kmax) + ")", corrected, 0);
  // The literal family x^k e1, kept as stated so that its failure stays
  // visible; it vanishes only for k <= 2.
  for (int k = 0; k <= kmax; ++k) {
    double lit = exact_residual(dirac_power(x_power_times_e1(n, k), n - 1));
    r.add("D^{n-1} (x^k e1) = 0, literal (" + tag(n, k) + ")", lit, 0,
          lit == 0 ? "" : "does not vanish; the family annihilated is (e1^{-1} x)^k");
  }
  return r;
}

Report constants(const SuiteParams& p) {
  Report r;
  r.suite = "constants";
  int kmax = p.degree.value_or(6);
  r.params = {p.n.value_or(0), kmax, 0, p.seed};
  for (int n : dims_or(p, {3, 4, 5, 6}, {3, 4})) {
    require_dim(n, 3, 8, "constants");
    double drift = 0, recurrence = 0;
    for (int k = 1; k <= kmax; ++k) {
      KernelFamily a = iterated_kernel(n, k);
      KernelFamily b = iterated_kernel_uncached(n, k);
      bool same = a.C == b.C && a.A.has_value() == b.A.has_value() && (!a.A || *a.A == *b.A) &&
                  to_string(a.symbolic) == to_string(b.symbolic);
      if (!same) drift = std::max(drift, 1.0);
      if (k > 1) recurrence = std::max(recurrence, exact_residual(dirac_left(b.symbolic) - iterated_kernel(n, k - 1).symbolic));
      // Substitute the emitted constants back into the ansatz.
      RadialQ rebuilt(n);
      if (a.log_case) {
        PolynomialQ xp = x_power_poly(n, k - n);
        rebuilt = RadialQ::term(xp, 0, 1) * a.C + RadialQ::polynomial(xp) * (a.C * a.A.value_or(0));
      } else if (k % 2 == 1) {
        rebuilt = RadialQ::polynomial(PolynomialQ::identity_vector(n)) * RadialQ::radius_power(n, -(n - k + 1)) * a.C;
      } else {
        rebuilt = RadialQ::radius_power(n, -(n - k)) * a.C;
      }
      if (k > 1) recurrence = std::max(recurrence, exact_residual(dirac_left(rebuilt) - iterated_kernel(n, k - 1).symbolic));
    }
    r.add("C(n,k), A(n,k) identical on re-derivation (" + tag(n) + ", k<=" + std::to_string(kmax) + ")", drift, 0);
    r.add("constants satisfy D G_k = G_{k-1} when substituted (" + tag(n) + ")", recurrence, 0);
  }
  return r;
}

}  // namespace cliffa::suites
