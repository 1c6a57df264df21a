#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/scalar.hpp"

namespace shadowkit {

/// Arbitrary-precision rational in lowest terms with positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(const mpz_class& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" (no whitespace, no floating point).
  static BigRational parse(std::string_view s) {
    auto bad = [&] { return ParseError("not an exact rational: '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto check_int = [&](std::string_view part) {
      std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
      if (i >= part.size()) throw bad();
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') throw bad();
    };
    if (slash == std::string_view::npos) {
      check_int(s);
      std::string str(s[0] == '+' ? s.substr(1) : s);
      return BigRational(mpz_class(str, 10));
    }
    std::string_view n = s.substr(0, slash), d = s.substr(slash + 1);
    check_int(n);
    check_int(d);
    std::string ns(n[0] == '+' ? n.substr(1) : n), ds(d[0] == '+' ? d.substr(1) : d);
    return BigRational(mpz_class(ns, 10), mpz_class(ds, 10));
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) {
    v_ += o.v_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    v_ -= o.v_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    v_ *= o.v_;
    return *this;
  }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }
  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }

  BigRational inv() const {
    if (is_zero()) throw DivisionByZero();
    return BigRational(mpq_class(1 / v_));
  }

  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const BigRational& x) { return x.is_zero(); }
inline std::string to_string(const BigRational& x) { return x.to_string(); }
inline BigRational inv(const BigRational& x) { return x.inv(); }

/// Number of bits in numerator plus denominator; a crude height proxy.
inline std::size_t bitsize(const BigRational& x) {
  return mpz_sizeinbase(x.raw().get_num_mpz_t(), 2) + mpz_sizeinbase(x.raw().get_den_mpz_t(), 2);
}

}  // namespace shadowkit
