#pragma once

// Shared helpers for the verification suites; not installed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cliffa/kernels.hpp"
#include "cliffa/polynomial.hpp"
#include "cliffa/verify.hpp"

namespace cliffa::suites {

// Uniform double in [0, 1) from the top 53 bits, so streams are identical
// across standard libraries.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline double uniform(std::mt19937_64& rng, double a, double b) { return a + (b - a) * uniform01(rng); }

Point random_unit(int n, std::mt19937_64& rng);
Point random_in_ball(const Point& center, double radius, std::mt19937_64& rng);
// Point with radius in [r0, r1] about the centre.
Point random_in_shell(const Point& center, double r0, double r1, std::mt19937_64& rng);

// Multivector with a few nonzero small rational coefficients (never zero).
MultivectorQ random_coefficient(int n, std::mt19937_64& rng);

// Largest coefficient magnitude; exactly 0 iff the expression is zero.
double exact_residual(const PolynomialQ& p);
double exact_residual(const RadialQ& r);

std::vector<int> dims_or(const SuiteParams& p, std::vector<int> defaults, std::vector<int> quick);
std::string tag(int n);                 // "n=3"
std::string tag(int n, int k);          // "n=3,k=2"

Report fueter(const SuiteParams& p);
Report kernels(const SuiteParams& p);
Report iterated(const SuiteParams& p);
Report extension(const SuiteParams& p);
Report decompose(const SuiteParams& p);
Report fueter_sce(const SuiteParams& p);
Report constants(const SuiteParams& p);

Report cauchy(const SuiteParams& p);
Report mean(const SuiteParams& p);
Report green(const SuiteParams& p);
Report kgreen(const SuiteParams& p);
Report taylor(const SuiteParams& p);
Report holomorphic(const SuiteParams& p);
Report plemelj(const SuiteParams& p);

Report moebius(const SuiteParams& p);
Report spherical(const SuiteParams& p);
Report planewave(const SuiteParams& p);
Report periodic(const SuiteParams& p);

}  // namespace cliffa::suites
