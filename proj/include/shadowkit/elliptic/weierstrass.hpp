#pragma once

// Long Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 and their group law.

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/cyclotomic.hpp"
#include "shadowkit/exactalg/finite_field.hpp"
#include "shadowkit/exactalg/numtheory.hpp"

namespace shadowkit {

template <class K>
struct WPoint {
  bool inf = true;
  K x = K(0), y = K(0);

  static WPoint O() { return WPoint(); }
  static WPoint affine(K x, K y) {
    WPoint p;
    p.inf = false;
    p.x = std::move(x);
    p.y = std::move(y);
    return p;
  }
  friend bool operator==(const WPoint& a, const WPoint& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const WPoint& a, const WPoint& b) { return !(a == b); }
  std::string to_string() const {
    if (inf) return "O";
    return "(" + shadowkit::to_string(x) + ", " + shadowkit::to_string(y) + ")";
  }
};

template <class K>
class WeierstrassModel {
 public:
  K a1, a2, a3, a4, a6;
  K b2, b4, b6, b8, c4, c6, disc;

  WeierstrassModel(K a1_, K a2_, K a3_, K a4_, K a6_)
      : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)) {
    b2 = a1 * a1 + K(4) * a2;
    b4 = K(2) * a4 + a1 * a3;
    b6 = a3 * a3 + K(4) * a6;
    b8 = a1 * a1 * a6 + K(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c4 = b2 * b2 - K(24) * b4;
    c6 = -(b2 * b2 * b2) + K(36) * b2 * b4 - K(216) * b6;
    disc = -(b2 * b2 * b8) - K(8) * b4 * b4 * b4 - K(27) * b6 * b6 + K(9) * b2 * b4 * b6;
    if (shadowkit::is_zero(disc)) throw SingularFiber("Weierstrass model with zero discriminant");
  }

  /// y^2 = x^3 + a x + b
  static WeierstrassModel short_form(K a, K b) { return WeierstrassModel(K(0), K(0), K(0), std::move(a), std::move(b)); }

  bool contains(const WPoint<K>& p) const {
    if (p.inf) return true;
    const K& x = p.x;
    const K& y = p.y;
    return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
  }

  /// j-invariant (c4^3 / disc).
  K j_invariant() const { return c4 * c4 * c4 / disc; }

  WPoint<K> neg(const WPoint<K>& p) const {
    if (p.inf) return p;
    return WPoint<K>::affine(p.x, -p.y - a1 * p.x - a3);
  }

  WPoint<K> add(const WPoint<K>& p, const WPoint<K>& q) const {
    if (p.inf) return q;
    if (q.inf) return p;
    K lambda, nu;
    if (p.x == q.x) {
      K s = p.y + q.y + a1 * q.x + a3;
      if (shadowkit::is_zero(s)) return WPoint<K>::O();
      K den = K(2) * p.y + a1 * p.x + a3;
      K di = inv(den);
      lambda = (K(3) * p.x * p.x + K(2) * a2 * p.x + a4 - a1 * p.y) * di;
      nu = (-(p.x * p.x * p.x) + a4 * p.x + K(2) * a6 - a3 * p.y) * di;
    } else {
      K di = inv(q.x - p.x);
      lambda = (q.y - p.y) * di;
      nu = (p.y * q.x - q.y * p.x) * di;
    }
    K x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    K y3 = -(lambda + a1) * x3 - nu - a3;
    return WPoint<K>::affine(std::move(x3), std::move(y3));
  }

  WPoint<K> sub(const WPoint<K>& p, const WPoint<K>& q) const { return add(p, neg(q)); }

  WPoint<K> smul(mpz_class n, const WPoint<K>& p) const {
    if (n < 0) return smul(-n, neg(p));
    WPoint<K> r = WPoint<K>::O();
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = add(r, r);
      if (mpz_tstbit(n.get_mpz_t(), i)) r = add(r, p);
    }
    return r;
  }
  WPoint<K> smul(long n, const WPoint<K>& p) const { return smul(mpz_class(n), p); }

  /// Add with a membership check on both inputs.
  WPoint<K> checked_add(const WPoint<K>& p, const WPoint<K>& q) const {
    if (!contains(p) || !contains(q)) throw MixedModel();
    return add(p, q);
  }

  std::string to_string() const {
    return "[" + shadowkit::to_string(a1) + ", " + shadowkit::to_string(a2) + ", " + shadowkit::to_string(a3) + ", " +
           shadowkit::to_string(a4) + ", " + shadowkit::to_string(a6) + "]";
  }
};

using FqCurve = WeierstrassModel<FqElem>;
using FqPoint = WPoint<FqElem>;

inline FqCurve reduce_model(const WeierstrassModel<CycNum>& w, const FqContext* ctx) {
  try {
    FqElem disc = reduce_cyc(w.disc, ctx);
    if (disc.is_zero()) throw BadReduction("discriminant vanishes modulo " + std::to_string(ctx->p));
    return FqCurve(reduce_cyc(w.a1, ctx), reduce_cyc(w.a2, ctx), reduce_cyc(w.a3, ctx), reduce_cyc(w.a4, ctx),
                   reduce_cyc(w.a6, ctx));
  } catch (const NotIntegral&) {
    throw BadReduction("model not integral at " + std::to_string(ctx->p));
  } catch (const SingularFiber&) {
    throw BadReduction("singular reduction modulo " + std::to_string(ctx->p));
  }
}

/// Reduction of a point; points whose coordinates have the prime in the
/// denominator reduce to O when x/y and 1/y are integral with 1/y = 0.
inline FqPoint reduce_point(const WPoint<CycNum>& p, const FqContext* ctx) {
  if (p.inf) return FqPoint::O();
  try {
    return FqPoint::affine(reduce_cyc(p.x, ctx), reduce_cyc(p.y, ctx));
  } catch (const NotIntegral&) {
  }
  try {
    CycNum yi = p.y.inv();
    FqElem ry = reduce_cyc(yi, ctx);
    reduce_cyc(p.x * yi, ctx);
    if (ry.is_zero()) return FqPoint::O();
  } catch (const NotIntegral&) {
  }
  throw BadReduction("point does not reduce cleanly modulo " + std::to_string(ctx->p));
}

/// True when every coefficient lies in the prime field F_p.
inline bool defined_over_prime_field(const FqCurve& w) {
  for (const FqElem* c : {&w.a1, &w.a2, &w.a3, &w.a4, &w.a6})
    if (c->bound() && c->b() != 0) return false;
  return true;
}

/// Exhaustive count over F_{p^degree}, odd characteristic; degree 0 means the context field.
/// Hasse bound asserted.
inline std::uint64_t count_points(const FqCurve& w, int degree = 0) {
  const FqContext* ctx = w.disc.context();
  if (!ctx) throw Error("point count needs a curve over a bound finite field");
  if (degree == 0) degree = ctx->k;
  if (degree != 1 && degree != ctx->k) throw Error("count degree must be 1 or the context degree");
  if (degree == 1 && !defined_over_prime_field(w)) throw Error("curve is not defined over the prime field");
  std::uint64_t q = degree == 1 ? ctx->p : ctx->size();
  mpz_class qz(static_cast<unsigned long>(q));
  mpz_class half = (qz - 1) / 2;
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < q; ++i) {
    FqElem x = ctx->element(i);
    FqElem h = w.a1 * x + w.a3;
    FqElem d = h * h + FqElem(4) * (x * x * x + w.a2 * x * x + w.a4 * x + w.a6);
    if (d.is_zero()) {
      n += 1;
    } else if (d.pow(half).is_one()) {
      n += 2;
    }
  }
  mpz_class a = qz + 1 - static_cast<unsigned long>(n);
  if (a * a > 4 * qz) throw Error("Hasse bound violated: count is wrong");
  return n;
}

/// a = p^degree + 1 - N.
inline long trace_of_frobenius(const FqCurve& w, int degree = 0) {
  const FqContext* ctx = w.disc.context();
  if (!ctx) throw Error("trace needs a curve over a bound finite field");
  std::uint64_t n = count_points(w, degree);
  std::uint64_t q = (degree == 1) ? ctx->p : ctx->size();
  return static_cast<long>(q + 1) - static_cast<long>(n);
}

struct QuadField {
  bool ordinary;
  long trace;
  mpz_class disc_squarefree;  // squarefree part of a^2 - 4p
};

/// Uses the Frobenius over F_p when the curve is defined there, else over the context field.
inline QuadField ordinary_quadfield(const FqCurve& w) {
  const FqContext* ctx = w.disc.context();
  if (!ctx) throw Error("ordinary_quadfield needs a bound curve");
  int degree = defined_over_prime_field(w) ? 1 : 0;
  long a = trace_of_frobenius(w, degree);
  mpz_class q = degree == 1 ? mpz_class(static_cast<unsigned long>(ctx->p)) : ctx->q;
  QuadField r;
  r.ordinary = (a % static_cast<long>(ctx->p)) != 0;
  r.trace = a;
  mpz_class d = mpz_class(a) * a - 4 * q;
  auto sf = nt::squarefree_part(d);
  if (!sf) throw Error("cannot classify a^2 - 4q");
  r.disc_squarefree = *sf;
  return r;
}

/// Exact order of p given a multiple n of it (typically the group order).
template <class K>
std::uint64_t order_from_multiple(const WeierstrassModel<K>& w, const WPoint<K>& p, std::uint64_t n) {
  if (!w.smul(mpz_class(static_cast<unsigned long>(n)), p).inf) throw Error("order multiple is wrong");
  for (auto [l, e] : nt::factor(n)) {
    for (int i = 0; i < e; ++i) {
      if (w.smul(mpz_class(static_cast<unsigned long>(n / l)), p).inf) {
        n /= l;
      } else {
        break;
      }
    }
  }
  return n;
}

inline std::uint64_t point_order(const FqCurve& w, const FqPoint& p) {
  return order_from_multiple(w, p, count_points(w));
}

/// Uniformly random affine x with a rational y; nullopt after many failures.
inline std::optional<FqPoint> random_point(const FqCurve& w, std::mt19937_64& rng) {
  const FqContext* ctx = w.disc.context();
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx->size() - 1);
  FqElem two_inv = FqElem(ctx, 2).inv();
  for (int tries = 0; tries < 1000; ++tries) {
    FqElem x = ctx->element(dist(rng));
    FqElem h = w.a1 * x + w.a3;
    FqElem d = h * h + FqElem(4) * (x * x * x + w.a2 * x * x + w.a4 * x + w.a6);
    auto s = d.sqrt();
    if (!s) continue;
    FqElem y = (*s - h) * two_inv;
    if (rng() & 1) y = -h - y;
    return FqPoint::affine(x, y);
  }
  return std::nullopt;
}

}  // namespace shadowkit
