#include "cliffa/textio.hpp"

#include "cliffa/radial.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <regex>

namespace cliffa {

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  bool wide = std::bit_width(b) >= 10;
  std::string s = "e";
  bool first = true;
  for (int j = 1; j <= kMaxDim; ++j) {
    if (!(b & generator_blade(j))) continue;
    if (wide && !first) s += '_';
    s += std::to_string(j);
    first = false;
  }
  return s;
}

Blade parse_blade(std::string_view s) {
  if (s == "1") return 0;
  if (s.size() < 2 || s[0] != 'e') throw ParseError("bad blade '" + std::string(s) + "'");
  std::vector<int> idx;
  std::string_view body = s.substr(1);
  if (body.find('_') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t next = body.find('_', pos);
      std::string_view part = body.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      int v = 0;
      auto r = std::from_chars(part.data(), part.data() + part.size(), v);
      if (part.empty() || r.ec != std::errc() || r.ptr != part.data() + part.size())
        throw ParseError("bad blade '" + std::string(s) + "'");
      idx.push_back(v);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad blade '" + std::string(s) + "'");
      idx.push_back(c - '0');
    }
  }
  Blade b = 0;
  int prev = 0;
  for (int j : idx) {
    if (j <= prev || j > kMaxDim) throw ParseError("blade indices must be increasing and within 1..16: '" + std::string(s) + "'");
    b |= generator_blade(j);
    prev = j;
  }
  return b;
}

namespace {

// Decimal literal such as "-2.5" or "1.25e-3", converted exactly.
bool parse_decimal(const std::string& str, Rational& out) {
  static const std::regex pattern(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch m;
  if (!std::regex_match(str, m, pattern) || (m[2].length() == 0 && m[3].length() == 0)) return false;
  mpz_class num(m[2].str() + m[3].str() == "" ? "0" : m[2].str() + m[3].str(), 10);
  long exp10 = m[4].matched ? std::stol(m[4].str()) : 0;
  exp10 -= static_cast<long>(m[3].length());
  if (std::labs(exp10) > 4000) return false;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  out = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
  out.canonicalize();
  if (m[1] == "-") out = -out;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  std::string str(s);
  if (!str.empty() && str[0] == '+') str.erase(0, 1);
  Rational q;
  if (str.find('/') == std::string::npos && str.find_first_of(".eE") != std::string::npos) {
    if (!parse_decimal(str, q)) throw ParseError("bad rational '" + std::string(s) + "'");
    return q;
  }
  if (str.empty() || q.set_str(str, 10) != 0) throw ParseError("bad rational '" + std::string(s) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

double parse_double(std::string_view s) {
  std::string str(s);
  char* end = nullptr;
  double v = std::strtod(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size()) throw ParseError("bad number '" + str + "'");
  return v;
}

namespace {

bool negative(const Rational& s) { return sgn(s) < 0; }
bool negative(double s) { return std::signbit(s); }
bool negative(const Complex&) { return false; }

template <class S>
S parse_coef(std::string_view s) {
  if constexpr (std::is_same_v<S, Rational>) {
    return parse_rational(s);
  } else if constexpr (std::is_same_v<S, double>) {
    return parse_double(s);
  } else {
    if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw ParseError("bad complex '" + std::string(s) + "'");
    auto comma = s.find(',');
    if (comma == std::string_view::npos) throw ParseError("bad complex '" + std::string(s) + "'");
    return Complex(parse_double(s.substr(1, comma - 1)), parse_double(s.substr(comma + 1, s.size() - comma - 2)));
  }
}

}  // namespace

template <class S>
std::string to_string(const Multivector<S>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : a.terms()) {
    S v = c;
    if (!first) {
      if (negative(v)) {
        out += " - ";
        v = -v;
      } else {
        out += " + ";
      }
    }
    out += format_scalar(v);
    out += '*';
    out += blade_name(b);
    first = false;
  }
  return out;
}

template <class S>
Multivector<S> parse_multivector(int dim, std::string_view text) {
  std::vector<typename Multivector<S>::Term> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool expect_term = true;
  int sign = 1;
  skip();
  if (i == text.size()) throw ParseError("empty multivector");
  if (text.substr(i) == "0") return Multivector<S>(dim);
  while (i < text.size()) {
    skip();
    if (i == text.size()) break;
    if (!expect_term) {
      if (text[i] == '+') sign = 1;
      else if (text[i] == '-') sign = -1;
      else throw ParseError("expected '+' or '-' at offset " + std::to_string(i));
      ++i;
      expect_term = true;
      continue;
    }
    // One term: [sign] (coef ['*' blade] | blade)
    std::size_t start = i;
    int depth = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) break;
      // A +/- after the first character that is not part of an exponent
      // ends the term (allows "1-2*e1" written without spaces).
      if (depth == 0 && (c == '+' || c == '-') && i > start) {
        char p = text[i - 1];
        if (p != 'e' && p != 'E' && p != '/' && p != '*') break;
        if ((p == 'e' || p == 'E') && (i < 2 || !std::isdigit(static_cast<unsigned char>(text[i - 2])))) break;
      }
      ++i;
    }
    std::string_view tok = text.substr(start, i - start);
    if (tok.empty()) throw ParseError("empty term");
    int tsign = sign;
    if (tok[0] == '-' || tok[0] == '+') {
      if (tok[0] == '-') tsign = -tsign;
      tok.remove_prefix(1);
    }
    S coef(1);
    Blade blade = 0;
    auto star = tok.rfind('*');
    if (star != std::string_view::npos) {
      coef = parse_coef<S>(tok.substr(0, star));
      blade = parse_blade(tok.substr(star + 1));
    } else if (!tok.empty() && tok[0] == 'e' && tok.size() > 1 && std::isdigit(static_cast<unsigned char>(tok[1]))) {
      blade = parse_blade(tok);
    } else {
      coef = parse_coef<S>(tok);
    }
    if (blade >> dim) throw ParseError("blade " + std::string(tok) + " exceeds Cl_" + std::to_string(dim));
    if (tsign < 0) coef = -coef;
    terms.emplace_back(blade, coef);
    expect_term = false;
    sign = 1;
  }
  if (expect_term) throw ParseError("dangling operator");
  return Multivector<S>::from_terms(dim, std::move(terms));
}

template std::string to_string(const Multivector<Rational>&);
template std::string to_string(const Multivector<double>&);
template std::string to_string(const Multivector<Complex>&);
template Multivector<Rational> parse_multivector<Rational>(int, std::string_view);
template Multivector<double> parse_multivector<double>(int, std::string_view);
template Multivector<Complex> parse_multivector<Complex>(int, std::string_view);


// ---------------------------------------------------------------------------
// Polynomials and radial expressions.

namespace {

std::string monomial_name(const Exponent& e, VariableKind kind) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    int var = kind == VariableKind::Vector ? static_cast<int>(i) + 1 : static_cast<int>(i);
    s += "*x" + std::to_string(var);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

template <class S>
std::string to_string(const Polynomial<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")" + monomial_name(e, p.kind());
  }
  return out;
}

template <class S>
Polynomial<S> parse_polynomial(int dim, std::string_view text, VariableKind kind) {
  Polynomial<S> out(dim, kind);
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.empty()) throw ParseError("empty polynomial");
  if (text == "0") return out;
  // Split into signed terms on top-level '+' and binary '-'. A '-' right
  // after '^', '*', '(' or a decimal exponent marker belongs to the term.
  std::vector<std::pair<int, std::string_view>> terms;
  int depth = 0, sign = 1;
  std::size_t start = 0;
  auto flush = [&](std::size_t end, int next_sign) {
    std::string_view t = trim(text.substr(start, end - start));
    if (t.empty()) {
      if (!terms.empty() || end != 0) throw ParseError("empty polynomial term");
    } else {
      terms.emplace_back(sign, t);
    }
    sign = next_sign;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in polynomial");
    if (depth != 0 || (c != '+' && c != '-')) continue;
    std::size_t j = i;
    while (j > 0 && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
    char prev = j > 0 ? text[j - 1] : '\0';
    if (prev == '^' || prev == '*' || prev == '(') continue;
    if ((prev == 'e' || prev == 'E') && j >= 2 && j == i && std::isdigit(static_cast<unsigned char>(text[j - 2])))
      continue;  // 1.5e-3
    if (j == 0) {  // leading sign
      if (c == '-') sign = -sign;
      start = i + 1;
      continue;
    }
    flush(i, c == '-' ? -1 : 1);
    start = i + 1;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in polynomial");
  flush(text.size(), 1);
  if (terms.empty()) throw ParseError("empty polynomial");

  const int nvars = Polynomial<S>(dim, kind).nvars();
  for (auto [tsign, t] : terms) {
    // Factors separated by top-level '*': variables x<i>[^p], everything
    // else is a coefficient (number, blade or parenthesised multivector).
    Multivector<S> coef = Multivector<S>::one(dim);
    Exponent e(nvars, 0);
    std::size_t fs = 0;
    int d = 0;
    for (std::size_t i = 0; i <= t.size(); ++i) {
      if (i < t.size()) {
        if (t[i] == '(') ++d;
        else if (t[i] == ')') --d;
        if (!(t[i] == '*' && d == 0)) continue;
      }
      std::string_view f = trim(t.substr(fs, i - fs));
      fs = i + 1;
      if (f.empty()) throw ParseError("bad monomial '" + std::string(t) + "'");
      if (f[0] == 'x') {
        f.remove_prefix(1);
        int var = 0, pw = 1;
        auto r = std::from_chars(f.data(), f.data() + f.size(), var);
        if (r.ec != std::errc()) throw ParseError("bad variable in '" + std::string(t) + "'");
        f.remove_prefix(r.ptr - f.data());
        if (!f.empty() && f[0] == '^') {
          f.remove_prefix(1);
          auto r2 = std::from_chars(f.data(), f.data() + f.size(), pw);
          if (r2.ec != std::errc() || pw < 0) throw ParseError("bad exponent in '" + std::string(t) + "'");
          f.remove_prefix(r2.ptr - f.data());
        }
        if (!f.empty()) throw ParseError("bad monomial '" + std::string(t) + "'");
        int slot = kind == VariableKind::Vector ? var - 1 : var;
        if (slot < 0 || slot >= nvars) throw ParseError("variable x" + std::to_string(var) + " out of range");
        e[slot] += pw;
      } else {
        if (f.front() == '(') {
          if (f.back() != ')') throw ParseError("bad coefficient '" + std::string(f) + "'");
          f = f.substr(1, f.size() - 2);
        }
        coef = coef * parse_multivector<S>(dim, f);
      }
    }
    if (tsign < 0) coef = -coef;
    out += Polynomial<S>::monomial(e, coef, kind);
  }
  return out;
}

template <class S>
std::string to_string(const RadialExpr<S>& f) {
  if (f.terms().empty()) return "0";
  std::string out;
  for (const auto& [k, p] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "[" + to_string(p) + "]";
    if (k.m) out += "*r^-" + std::to_string(k.m);
    if (k.s) out += "*log(r)";
  }
  return out;
}

template std::string to_string(const Polynomial<Rational>&);
template std::string to_string(const Polynomial<double>&);
template Polynomial<Rational> parse_polynomial<Rational>(int, std::string_view, VariableKind);
template Polynomial<double> parse_polynomial<double>(int, std::string_view, VariableKind);
template std::string to_string(const RadialExpr<Rational>&);
template std::string to_string(const RadialExpr<double>&);

}  // namespace cliffa
