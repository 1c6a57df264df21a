#pragma once

// Exact polynomial expressions such as "X*(Y^3+Z^3) + 9*X^2*Y*Z - z3*Y".
// Constants z24, z12, z8, z6, z4, z3 name roots of unity; '/' only divides by constants.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/cyclotomic.hpp"
#include "shadowkit/exactalg/mpoly.hpp"

namespace shadowkit {

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, const std::vector<std::string>& vars) : s_(src), vars_(vars) {}

  MPoly<CycNum> parse() {
    MPoly<CycNum> r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_factor(char c) const { return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  MPoly<CycNum> expr() {
    MPoly<CycNum> acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly<CycNum> term() {
    MPoly<CycNum> acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        MPoly<CycNum> d = unary();
        if (d.total_degree() > 0) fail("division by a non-constant");
        if (d.is_zero()) fail("division by zero");
        acc = d.terms().begin()->second.inv() * acc;
      } else if (starts_factor(c)) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  MPoly<CycNum> unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly<CycNum> power() {
    MPoly<CycNum> base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      return base.pow(e);
    }
    return base;
  }

  MPoly<CycNum> atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly<CycNum> r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class n(std::string(s_.substr(start, pos_ - start)), 10);
      return MPoly<CycNum>(vars_, CycNum(BigRational(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return MPoly<CycNum>::variable(vars_, i);
      static const std::pair<const char*, int> roots[] = {{"z24", 24}, {"z12", 12}, {"z8", 8},
                                                           {"z6", 6},   {"z4", 4},   {"z3", 3}};
      for (const auto& [nm, m] : roots)
        if (name == nm) return MPoly<CycNum>(vars_, CycNum::zeta_m(m));
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : std::string("unexpected end of input"));
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MPoly<CycNum> parse_mpoly(std::string_view src, const std::vector<std::string>& vars) {
  return detail::ExprParser(src, vars).parse();
}

/// A constant expression: no variables allowed.
inline CycNum parse_cyc(std::string_view src) {
  MPoly<CycNum> p = parse_mpoly(src, {});
  if (p.is_zero()) return CycNum(0);
  return p.terms().begin()->second;
}

inline Poly<CycNum> parse_poly(std::string_view src, const std::string& var) {
  return parse_mpoly(src, {var}).to_univariate(0);
}

}  // namespace shadowkit
