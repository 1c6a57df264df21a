#pragma once

// F_q with q = p or p^2, the residue field of Q(zeta_24) at an odd unramified prime.
// Every such p has p^2 = 1 (mod 24), so degree two always suffices.

#include <climits>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/scalar.hpp"
#include "shadowkit/exactalg/cyclotomic.hpp"
#include "shadowkit/exactalg/numtheory.hpp"
#include "shadowkit/exactalg/rational.hpp"

namespace shadowkit {

struct FqContext;

/// a + b*theta with theta^2 = ctx->nonresidue (b = 0 when k = 1).
/// A null context marks a small rational constant not yet bound to a field;
/// this lets generic code write K(0), K(1), K(n) and divide by them.
class FqElem {
 public:
  FqElem() = default;
  FqElem(long n) : small_(n) {}  // NOLINT(google-explicit-constructor)
  static FqElem small_fraction(long num, long den);
  FqElem(const FqContext* ctx, std::uint64_t a, std::uint64_t b = 0);

  const FqContext* context() const { return ctx_; }
  bool bound() const { return ctx_ != nullptr; }
  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }

  bool is_zero() const { return ctx_ ? (a_ == 0 && b_ == 0) : small_ == 0; }
  bool is_one() const { return ctx_ ? (a_ == 1 && b_ == 0) : (small_ == 1 && small_den_ == 1); }

  FqElem operator-() const;
  friend FqElem operator+(const FqElem& x, const FqElem& y);
  friend FqElem operator-(const FqElem& x, const FqElem& y) { return x + (-y); }
  friend FqElem operator*(const FqElem& x, const FqElem& y);
  friend FqElem operator/(const FqElem& x, const FqElem& y) {
    auto [c, xy] = unify(x, y);
    return xy.first * xy.second.inv();
  }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
  FqElem& operator/=(const FqElem& o) { return *this = *this / o; }
  friend bool operator==(const FqElem& x, const FqElem& y);
  friend bool operator!=(const FqElem& x, const FqElem& y) { return !(x == y); }
  friend bool operator<(const FqElem& x, const FqElem& y) {
    if (!x.ctx_ && !y.ctx_) return static_cast<__int128>(x.small_) * y.small_den_ < static_cast<__int128>(y.small_) * x.small_den_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

  FqElem inv() const;
  FqElem pow(mpz_class e) const;
  FqElem pow(std::uint64_t e) const { return pow(mpz_class(static_cast<unsigned long>(e))); }
  bool is_square() const;
  std::optional<FqElem> sqrt() const;
  std::string to_string() const;

  /// Bind to ctx (no-op when already bound there).
  FqElem in(const FqContext* ctx) const;

 private:
  static std::pair<const FqContext*, std::pair<FqElem, FqElem>> unify(const FqElem& x, const FqElem& y);

  const FqContext* ctx_ = nullptr;
  std::uint64_t a_ = 0, b_ = 0;
  long small_ = 0, small_den_ = 1;
};

struct FqContext {
  std::uint64_t p = 0;
  int k = 1;
  std::uint64_t nonresidue = 0;  // theta^2 when k = 2
  mpz_class q;                   // p^k
  std::vector<FqElem> zeta_powers;  // image of zeta_24^i, i < 24

  const FqElem& zeta24_image() const { return zeta_powers[1]; }
  std::uint64_t size() const { return q.get_ui(); }
  /// Enumerates the field: index in [0, q) -> element.
  FqElem element(std::uint64_t idx) const { return FqElem(this, idx % p, idx / p); }
  FqElem from_int(const mpz_class& n) const {
    mpz_class r = n % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return FqElem(this, r.get_ui(), 0);
  }
  FqElem reduce(const BigRational& x) const {
    mpz_class pp(static_cast<unsigned long>(p));
    mpz_class d = x.den() % pp;
    if (d == 0) throw NotIntegral("denominator divisible by " + std::to_string(p));
    return from_int(x.num()) / from_int(x.den());
  }
};

inline FqElem::FqElem(const FqContext* ctx, std::uint64_t a, std::uint64_t b) : ctx_(ctx), a_(a), b_(b) {
  if (ctx_) {
    a_ %= ctx_->p;
    b_ %= ctx_->p;
    if (ctx_->k == 1) b_ = 0;
  }
}

inline FqElem FqElem::in(const FqContext* ctx) const {
  if (ctx_) {
    if (ctx_ != ctx) throw Error("finite-field elements from different contexts");
    return *this;
  }
  FqElem n = ctx->from_int(mpz_class(small_));
  if (small_den_ == 1) return n;
  FqElem d = ctx->from_int(mpz_class(small_den_));
  if (d.is_zero()) throw NotIntegral("constant has denominator divisible by " + std::to_string(ctx->p));
  return n * d.inv();
}

inline FqElem FqElem::small_fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  if (den < 0) {
    if (num == LONG_MIN || den == LONG_MIN) throw Error("unbound field constant overflow");
    num = -num;
    den = -den;
  }
  long g = std::gcd(num, den);
  FqElem r(num / g);
  r.small_den_ = den / g;
  return r;
}

inline std::pair<const FqContext*, std::pair<FqElem, FqElem>> FqElem::unify(const FqElem& x, const FqElem& y) {
  const FqContext* c = x.ctx_ ? x.ctx_ : y.ctx_;
  if (!c) return {nullptr, {x, y}};
  return {c, {x.in(c), y.in(c)}};
}

inline FqElem FqElem::operator-() const {
  if (!ctx_) return small_fraction(-small_, small_den_);
  std::uint64_t p = ctx_->p;
  return FqElem(ctx_, a_ ? p - a_ : 0, b_ ? p - b_ : 0);
}

inline FqElem operator+(const FqElem& x, const FqElem& y) {
  auto [c, xy] = FqElem::unify(x, y);
  if (!c) {
    long n1, n2, n, d;
    if (__builtin_mul_overflow(x.small_, y.small_den_, &n1) || __builtin_mul_overflow(y.small_, x.small_den_, &n2) ||
        __builtin_add_overflow(n1, n2, &n) || __builtin_mul_overflow(x.small_den_, y.small_den_, &d))
      throw Error("unbound field constant overflow");
    return FqElem::small_fraction(n, d);
  }
  std::uint64_t p = c->p;
  return FqElem(c, (xy.first.a_ + xy.second.a_) % p, (xy.first.b_ + xy.second.b_) % p);
}

inline FqElem operator*(const FqElem& x, const FqElem& y) {
  auto [c, xy] = FqElem::unify(x, y);
  if (!c) {
    long n, d;
    if (__builtin_mul_overflow(x.small_, y.small_, &n) || __builtin_mul_overflow(x.small_den_, y.small_den_, &d))
      throw Error("unbound field constant overflow");
    return FqElem::small_fraction(n, d);
  }
  const auto& u = xy.first;
  const auto& v = xy.second;
  std::uint64_t p = c->p;
  if (c->k == 1) return FqElem(c, nt::mulmod(u.a_, v.a_, p));
  std::uint64_t re = (nt::mulmod(u.a_, v.a_, p) + nt::mulmod(nt::mulmod(u.b_, v.b_, p), c->nonresidue, p)) % p;
  std::uint64_t im = (nt::mulmod(u.a_, v.b_, p) + nt::mulmod(u.b_, v.a_, p)) % p;
  return FqElem(c, re, im);
}

inline bool operator==(const FqElem& x, const FqElem& y) {
  auto [c, xy] = FqElem::unify(x, y);
  if (!c) return x.small_ == y.small_ && x.small_den_ == y.small_den_;
  return xy.first.a_ == xy.second.a_ && xy.first.b_ == xy.second.b_;
}

inline FqElem FqElem::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (!ctx_) {
    return small_fraction(small_den_, small_);
  }
  std::uint64_t p = ctx_->p;
  // (a + b theta)^-1 = (a - b theta) / (a^2 - D b^2)
  std::uint64_t n = (nt::mulmod(a_, a_, p) + p - nt::mulmod(nt::mulmod(b_, b_, p), ctx_->nonresidue, p)) % p;
  std::uint64_t ni = nt::powmod(n, p - 2, p);
  return FqElem(ctx_, nt::mulmod(a_, ni, p), nt::mulmod(b_ ? p - b_ : 0, ni, p));
}

inline FqElem FqElem::pow(mpz_class e) const {
  if (e < 0) return inv().pow(-e);
  FqElem r = ctx_ ? FqElem(ctx_, 1) : FqElem(1);
  FqElem b = *this;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline bool FqElem::is_square() const {
  if (is_zero()) return true;
  if (!ctx_) throw Error("square test needs a bound element");
  return pow(mpz_class((ctx_->q - 1) / 2)).is_one();
}

/// Tonelli-Shanks in the cyclic group F_q^*.
inline std::optional<FqElem> FqElem::sqrt() const {
  if (is_zero()) return *this;
  if (!ctx_) throw Error("square root needs a bound element");
  if (!is_square()) return std::nullopt;
  mpz_class qm1 = ctx_->q - 1, odd = qm1;
  int s = 0;
  while (mpz_even_p(odd.get_mpz_t())) {
    odd >>= 1;
    ++s;
  }
  FqElem z;
  for (std::uint64_t i = 2;; ++i) {
    z = ctx_->element(i);
    if (!z.is_zero() && !z.is_square()) break;
  }
  FqElem c = z.pow(odd);
  FqElem x = pow(mpz_class((odd + 1) / 2));
  FqElem t = pow(odd);
  int m = s;
  while (!t.is_one()) {
    int i = 0;
    FqElem tt = t;
    while (!tt.is_one()) {
      tt *= tt;
      ++i;
    }
    FqElem bb = c;
    for (int j = 0; j < m - i - 1; ++j) bb *= bb;
    x *= bb;
    c = bb * bb;
    t *= c;
    m = i;
  }
  return x;
}

inline std::string FqElem::to_string() const {
  if (!ctx_) return std::to_string(small_) + (small_den_ == 1 ? "" : "/" + std::to_string(small_den_));
  if (ctx_->k == 1 || b_ == 0) return std::to_string(a_);
  return std::to_string(a_) + "+" + std::to_string(b_) + "*th";
}

inline bool is_zero(const FqElem& x) { return x.is_zero(); }
inline std::string to_string(const FqElem& x) { return x.to_string(); }
inline FqElem inv(const FqElem& x) { return x.inv(); }

namespace detail {

inline std::unique_ptr<FqContext> make_fq_context(std::uint64_t p) {
  auto ctx = std::make_unique<FqContext>();
  ctx->p = p;
  ctx->k = nt::mult_order(p, 24);
  ctx->q = mpz_class(static_cast<unsigned long>(p));
  if (ctx->k == 2) {
    ctx->q *= static_cast<unsigned long>(p);
    std::uint64_t d = 2;
    while (nt::powmod(d, (p - 1) / 2, p) != p - 1) ++d;
    ctx->nonresidue = d;
  }
  const FqContext* c = ctx.get();
  mpz_class e = (ctx->q - 1) / 24;
  FqElem zeta;
  for (std::uint64_t i = 2;; ++i) {
    FqElem g = c->element(i);
    if (g.is_zero()) continue;
    FqElem h = g.pow(e);
    if (!h.pow(std::uint64_t{12}).is_one() && !h.pow(std::uint64_t{8}).is_one()) {
      zeta = h;
      break;
    }
  }
  FqElem cur(c, 1);
  for (int i = 0; i < 24; ++i) {
    ctx->zeta_powers.push_back(cur);
    cur *= zeta;
  }
  return ctx;
}

}  // namespace detail

/// Shared, immutable context for F_{p^k}; contexts live for the whole program.
inline const FqContext* fq_context(std::uint64_t p) {
  if (p == 2 || p == 3) throw RamifiedPrime("prime " + std::to_string(p) + " ramifies in Q(zeta_24)");
  if (!nt::is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<FqContext>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(p);
  if (it == registry.end()) it = registry.emplace(p, detail::make_fq_context(p)).first;
  return it->second.get();
}

inline FqElem reduce_cyc(const CycNum& x, const FqContext* ctx) {
  mpz_class pp(static_cast<unsigned long>(ctx->p));
  if (x.denominator() % pp == 0) throw NotIntegral("denominator divisible by " + std::to_string(ctx->p));
  FqElem acc(ctx, 0);
  for (int i = 0; i < CycNum::kDegree; ++i) {
    if (x.numerators()[i] == 0) continue;
    acc += ctx->from_int(x.numerators()[i]) * ctx->zeta_powers[i];
  }
  return acc / ctx->from_int(x.denominator());
}

inline FqElem reduce_rational(const BigRational& x, const FqContext* ctx) { return ctx->reduce(x); }

}  // namespace shadowkit
