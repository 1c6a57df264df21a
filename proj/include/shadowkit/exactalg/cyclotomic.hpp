#pragma once

// Q(zeta_24) in the power basis 1, z, ..., z^7 modulo Phi_24(x) = x^8 - x^4 + 1.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/scalar.hpp"
#include "shadowkit/exactalg/numtheory.hpp"
#include "shadowkit/exactalg/rational.hpp"

namespace shadowkit {

class CycNum {
 public:
  static constexpr int kOrder = 24;
  static constexpr int kDegree = 8;
  /// (Z/24Z)^*; the Galois group of the field.
  static constexpr std::array<int, 8> kUnits = {1, 5, 7, 11, 13, 17, 19, 23};

  CycNum() = default;
  CycNum(long n) { num_[0] = n; }  // NOLINT(google-explicit-constructor)
  CycNum(const BigRational& q) {  // NOLINT(google-explicit-constructor)
    num_[0] = q.num();
    den_ = q.den();
  }

  /// zeta_24^k for any integer k.
  static CycNum zeta(int k) {
    const auto& row = power_table()[((k % kOrder) + kOrder) % kOrder];
    CycNum r;
    for (int i = 0; i < kDegree; ++i) r.num_[i] = row[i];
    return r;
  }

  /// zeta_m := zeta_24^(24/m) for m | 24.
  static CycNum zeta_m(int m) {
    if (m <= 0 || kOrder % m) throw Error("zeta_m requires m | 24");
    return zeta(kOrder / m);
  }

  static CycNum from_coeffs(const std::array<BigRational, 8>& c) {
    CycNum r;
    mpz_class den = 1;
    for (const auto& q : c) den = lcm(den, q.den());
    for (int i = 0; i < kDegree; ++i) r.num_[i] = c[i].num() * (den / c[i].den());
    r.den_ = den;
    r.normalize();
    return r;
  }

  BigRational coeff(int i) const { return BigRational(num_.at(i), den_); }
  const std::array<mpz_class, 8>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const {
    for (const auto& c : num_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (int i = 1; i < kDegree; ++i)
      if (num_[i] != 0) return false;
    return true;
  }
  BigRational rational_part() const { return coeff(0); }

  CycNum operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }
  CycNum& operator+=(const CycNum& o) {
    if (den_ == o.den_) {
      for (int i = 0; i < kDegree; ++i) num_[i] += o.num_[i];
    } else {
      for (int i = 0; i < kDegree; ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }
  CycNum& operator-=(const CycNum& o) { return *this += -o; }
  CycNum& operator*=(const CycNum& o) {
    std::array<mpz_class, 15> prod;
    for (int i = 0; i < kDegree; ++i) {
      if (num_[i] == 0) continue;
      for (int j = 0; j < kDegree; ++j) {
        if (o.num_[j] == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
      }
    }
    for (int k = 14; k >= kDegree; --k) {
      if (prod[k] == 0) continue;
      prod[k - 4] += prod[k];
      prod[k - 8] -= prod[k];
    }
    for (int i = 0; i < kDegree; ++i) num_[i].swap(prod[i]);
    den_ *= o.den_;
    normalize();
    return *this;
  }
  CycNum& operator/=(const CycNum& o) { return *this *= o.inv(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b) { return a.den_ == b.den_ && a.num_ == b.num_; }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
  friend bool operator<(const CycNum& a, const CycNum& b) {
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

  /// Ring automorphism zeta -> zeta^j, gcd(j, 24) = 1.
  CycNum conj(int j) const {
    j = ((j % kOrder) + kOrder) % kOrder;
    if (std::gcd(j, kOrder) != 1) throw Error("conjugation exponent must be a unit mod 24");
    CycNum r;
    r.den_ = den_;
    for (int i = 0; i < kDegree; ++i) {
      if (num_[i] == 0) continue;
      const auto& row = power_table()[(i * j) % kOrder];
      for (int k = 0; k < kDegree; ++k)
        if (row[k]) r.num_[k] += num_[i] * row[k];
    }
    r.normalize();
    return r;
  }

  /// Field norm to Q: the product of all eight conjugates.
  BigRational norm() const {
    CycNum p = *this;
    for (int k = 1; k < kDegree; ++k) p *= conj(kUnits[k]);
    return p.rational_part();
  }

  CycNum inv() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return CycNum(coeff(0).inv());
    CycNum p(1);
    for (int k = 1; k < kDegree; ++k) p *= conj(kUnits[k]);
    BigRational n = (p * *this).rational_part();
    return p * CycNum(n.inv());
  }

  /// Polynomial string in the symbol z24, e.g. "1/2 - 3*z24^2".
  std::string to_string() const {
    std::string out;
    for (int i = 0; i < kDegree; ++i) {
      if (num_[i] == 0) continue;
      BigRational c(num_[i], den_);
      bool neg = c.sign() < 0;
      BigRational a = neg ? -c : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      bool unit = a == BigRational(1);
      if (i == 0) {
        out += a.to_string();
      } else {
        if (!unit) out += a.to_string() + "*";
        out += "z24";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

  /// Bits of the largest numerator plus the denominator.
  std::size_t bitsize() const {
    std::size_t m = 0;
    for (const auto& c : num_) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
    return m + mpz_sizeinbase(den_.get_mpz_t(), 2);
  }

  /// Square root of a rational number inside Q(zeta_24), if it exists there.
  /// Q(zeta_24) contains exactly the square roots of +-1, +-2, +-3, +-6 times squares.
  static std::optional<CycNum> sqrt_rational(const BigRational& r) {
    if (r.is_zero()) return CycNum(0);
    auto sf = nt::squarefree_part(r.num() * r.den());
    if (!sf) return std::nullopt;
    // r = sf * (m / den)^2 with m^2 = num * den / sf
    mpz_class m2 = r.num() * r.den() / *sf;
    mpz_class m = sqrt(m2);
    if (m * m != m2) return std::nullopt;
    CycNum root;
    long s = sf->get_si();
    if (abs(*sf) > 6) return std::nullopt;
    const CycNum i4 = zeta(6), sqrt2 = zeta(3) + zeta(21), sqrt3 = zeta(2) + zeta(22);
    switch (s) {
      case 1: root = CycNum(1); break;
      case -1: root = i4; break;
      case 2: root = sqrt2; break;
      case -2: root = i4 * sqrt2; break;
      case 3: root = sqrt3; break;
      case -3: root = i4 * sqrt3; break;
      case 6: root = sqrt2 * sqrt3; break;
      case -6: root = i4 * sqrt2 * sqrt3; break;
      default: return std::nullopt;
    }
    return root * CycNum(BigRational(m, r.den()));
  }

 private:
  using Row = std::array<int, 8>;

  static const std::array<Row, 24>& power_table() {
    static const std::array<Row, 24> table = [] {
      std::array<Row, 24> t{};
      Row cur{};
      cur[0] = 1;
      for (int k = 0; k < kOrder; ++k) {
        t[k] = cur;
        // multiply by x, then x^8 = x^4 - 1
        Row next{};
        for (int i = 0; i < 7; ++i) next[i + 1] = cur[i];
        next[4] += cur[7];
        next[0] -= cur[7];
        cur = next;
      }
      return t;
    }();
    return table;
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
      if (g == 1) break;
      if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
      den_ /= g;
      for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }

  std::array<mpz_class, 8> num_;
  mpz_class den_ = 1;
};

inline bool is_zero(const CycNum& x) { return x.is_zero(); }
inline std::string to_string(const CycNum& x) { return x.to_string(); }
inline CycNum inv(const CycNum& x) { return x.inv(); }
inline std::size_t bitsize(const CycNum& x) { return x.bitsize(); }

}  // namespace shadowkit
