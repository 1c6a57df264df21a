#pragma once

#include <string>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/scalar.hpp"
#include "shadowkit/exactalg/poly.hpp"

namespace shadowkit {

/// num/den in lowest terms with den monic, so equality is syntactic.
template <class K>
class RatFn {
 public:
  RatFn() : num_(), den_(K(1), "x") {}
  RatFn(long n) : num_(K(n), "x"), den_(K(1), "x") {}  // NOLINT(google-explicit-constructor)
  RatFn(const K& c, std::string var) : num_(c, var), den_(K(1), var) {}
  RatFn(const Poly<K>& p) : num_(p), den_(K(1), p.var()) {}  // NOLINT(google-explicit-constructor)
  RatFn(const Poly<K>& n, const Poly<K>& d) : num_(n), den_(d) { normalize(); }

  static RatFn variable(const std::string& var) { return RatFn(Poly<K>::variable(var)); }
  static RatFn constant(const K& c, const std::string& var = "x") { return RatFn(c, var); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  std::string var() const { return num_.degree() > 0 ? num_.var() : den_.var(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
  /// The value of a constant function.
  K constant_value() const {
    if (!is_constant()) throw Error("rational function is not constant");
    return num_.coeff(0);
  }

  RatFn operator-() const { return RatFn(-num_, den_, true); }
  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
  friend RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num_ * b.num_, a.den_ * b.den_); }
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inv(); }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  RatFn inv() const {
    if (is_zero()) throw DivisionByZero();
    return RatFn(den_, num_);
  }

  RatFn pow(int e) const {
    if (e < 0) return inv().pow(-e);
    RatFn r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  /// Evaluation at a point of any field T that K converts into; throws PoleError at a pole.
  template <class T>
  T eval(const T& x) const {
    T d = den_.template eval<T>(x);
    if (shadowkit::is_zero(d)) throw PoleError("rational function has a pole at " + shadowkit::to_string(x));
    return num_.template eval<T>(x) / d;
  }

  /// Substitute another rational function for the variable.
  RatFn compose(const RatFn& g) const { return horner(num_, g) / horner(den_, g); }

  template <class F>
  auto map(F f) const -> RatFn<decltype(f(std::declval<K>()))> {
    using L = decltype(f(std::declval<K>()));
    return RatFn<L>(num_.map(f), den_.map(f));
  }

  std::string to_string() const {
    if (den_.degree() <= 0) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  RatFn(Poly<K> n, Poly<K> d, bool) : num_(std::move(n)), den_(std::move(d)) {}

  static RatFn horner(const Poly<K>& p, const RatFn& g) {
    if (p.is_zero()) return RatFn(0);
    RatFn acc(p.lc(), g.var());
    for (int i = p.degree() - 1; i >= 0; --i) acc = acc * g + RatFn(p.coeff(i), g.var());
    return acc;
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<K>(K(1), den_.var());
      return;
    }
    if (den_.degree() > 0) {
      Poly<K> g = poly_gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Poly<K>::exact_div(num_, g);
        den_ = Poly<K>::exact_div(den_, g);
      }
    }
    K l = den_.lc();
    if (!(l == K(1))) {
      K li = shadowkit::inv(l);
      num_ = li * num_;
      den_ = li * den_;
    }
  }

  Poly<K> num_;
  Poly<K> den_;
};

template <class K>
bool is_zero(const RatFn<K>& f) {
  return f.is_zero();
}
template <class K>
std::string to_string(const RatFn<K>& f) {
  return f.to_string();
}
template <class K>
RatFn<K> inv(const RatFn<K>& f) {
  return f.inv();
}

/// Exact specialization; throws PoleError where the denominator vanishes.
template <class K, class T>
T ratfn_specialize(const RatFn<K>& f, const T& value) {
  return f.template eval<T>(value);
}

}  // namespace shadowkit
