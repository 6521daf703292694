#include "cliffa/algebra.hpp"

#include <charconv>
#include <sstream>

namespace cliffa {

std::pair<MultivectorQ, MultivectorQ> quaternion_projectors(int n) {
  if (n != 3) throw InvalidArgument("quaternion projectors need n = 3");
  MultivectorQ half = MultivectorQ::scalar(3, Rational(1, 2));
  MultivectorQ e123 = MultivectorQ::blade(3, 0b111, Rational(1, 2));
  return {half + e123, half - e123};
}

MultivectorC complex_conjugate(const MultivectorC& a) {
  std::vector<MultivectorC::Term> t;
  for (const auto& [b, c] : a.terms()) t.emplace_back(b, std::conj(c));
  return MultivectorC::from_terms(a.dim(), std::move(t));
}

std::string format_scalar(const Rational& s) { return s.get_str(); }

std::string format_scalar(double s) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, s);
  return std::string(buf, res.ptr);
}

std::string format_scalar(const Complex& s) {
  return "(" + format_scalar(s.real()) + "," + format_scalar(s.imag()) + ")";
}

}  // namespace cliffa
