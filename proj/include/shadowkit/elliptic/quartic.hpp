#pragma once

// Pointed quartic models z^2 = q(v) with a marked rational root e of q.

#include <optional>
#include <string>

#include "shadowkit/elliptic/weierstrass.hpp"
#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/poly.hpp"

namespace shadowkit {

template <class K>
struct QPoint {
  enum class Kind { Affine, InfPlus, InfMinus };
  Kind kind = Kind::Affine;
  K v = K(0), z = K(0);

  static QPoint at(K v, K z) { return QPoint{Kind::Affine, std::move(v), std::move(z)}; }
  static QPoint inf_plus() { return QPoint{Kind::InfPlus, K(0), K(0)}; }
  static QPoint inf_minus() { return QPoint{Kind::InfMinus, K(0), K(0)}; }
  bool is_infinite() const { return kind != Kind::Affine; }

  friend bool operator==(const QPoint& a, const QPoint& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::Affine || (a.v == b.v && a.z == b.z);
  }
  friend bool operator!=(const QPoint& a, const QPoint& b) { return !(a == b); }
  friend bool operator<(const QPoint& a, const QPoint& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.v != b.v) return a.v < b.v;
    return a.z < b.z;
  }
  std::string to_string() const {
    if (kind == Kind::InfPlus) return "inf+";
    if (kind == Kind::InfMinus) return "inf-";
    return "(" + shadowkit::to_string(v) + ", " + shadowkit::to_string(z) + ")";
  }
};

/// z^2 = q(v) of degree 4, squarefree, with q(e) = 0; (e, 0) is the identity.
/// Transport to y^2 = x^3 + b x^2 + a c x + a^2 d by x = a/(v-e), y = a z/(v-e)^2,
/// where a, b, c, d are the Taylor coefficients of q at e.
template <class K>
class QuarticModel {
 public:
  QuarticModel(Poly<K> q, K e) : q_(std::move(q)), e_(std::move(e)), w_(make_w(q_, e_, ta_, tb_, tc_, td_)) {}

  const Poly<K>& q() const { return q_; }
  const K& root() const { return e_; }
  const WeierstrassModel<K>& weierstrass() const { return w_; }
  K lead() const { return td_; }
  K taylor_a() const { return ta_; }

  /// Supplies sqrt(lead) so the two points at infinity can be named.
  void set_sqrt_lead(const K& s) {
    if (!(s * s == td_)) throw Error("not a square root of the leading coefficient");
    sqrt_lead_ = s;
  }
  const std::optional<K>& sqrt_lead() const { return sqrt_lead_; }

  QPoint<K> identity() const { return QPoint<K>::at(e_, K(0)); }

  bool contains(const QPoint<K>& p) const {
    if (p.is_infinite()) return sqrt_lead_.has_value();
    return p.z * p.z == q_.eval(p.v);
  }

  WPoint<K> to_w(const QPoint<K>& p) const {
    if (p.is_infinite()) {
      if (!sqrt_lead_) throw Error("points at infinity need sqrt of the leading coefficient");
      K y = ta_ * *sqrt_lead_;
      return WPoint<K>::affine(K(0), p.kind == QPoint<K>::Kind::InfPlus ? y : -y);
    }
    if (!contains(p)) throw OffCurve("point " + p.to_string() + " is not on the quartic model");
    if (p.v == e_) return WPoint<K>::O();
    K s = inv(p.v - e_);
    return WPoint<K>::affine(ta_ * s, ta_ * p.z * s * s);
  }

  QPoint<K> from_w(const WPoint<K>& p) const {
    if (p.inf) return identity();
    if (shadowkit::is_zero(p.x)) {
      if (!sqrt_lead_) throw Error("image lies at infinity of the quartic model");
      K y = ta_ * *sqrt_lead_;
      if (p.y == y) return QPoint<K>::inf_plus();
      if (p.y == -y) return QPoint<K>::inf_minus();
      throw OffCurve("not a point of the Weierstrass model");
    }
    K xi = inv(p.x);
    return QPoint<K>::at(e_ + ta_ * xi, p.y * ta_ * xi * xi);
  }

  QPoint<K> neg(const QPoint<K>& p) const { return from_w(w_.neg(to_w(p))); }
  QPoint<K> add(const QPoint<K>& p, const QPoint<K>& r) const {
    if (!contains(p) || !contains(r)) throw MixedModel();
    return from_w(w_.add(to_w(p), to_w(r)));
  }
  QPoint<K> smul(const mpz_class& n, const QPoint<K>& p) const { return from_w(w_.smul(n, to_w(p))); }
  QPoint<K> smul(long n, const QPoint<K>& p) const { return smul(mpz_class(n), p); }

 private:
  static WeierstrassModel<K> make_w(const Poly<K>& q, const K& e, K& a, K& b, K& c, K& d) {
    if (q.degree() != 4) throw DegreeError("quartic model needs deg q = 4");
    if (!shadowkit::is_zero(q.eval(e))) throw Error("marked point is not a root of q");
    if (shadowkit::is_zero(discriminant(q))) throw SingularFiber("q is not squarefree");
    Poly<K> d1 = q.derivative(), d2 = d1.derivative(), d3 = d2.derivative();
    a = d1.eval(e);
    b = d2.eval(e) / K(2);
    c = d3.eval(e) / K(6);
    d = q.lc();
    return WeierstrassModel<K>(K(0), b, K(0), a * c, a * a * d);
  }

  Poly<K> q_;
  K e_;
  K ta_, tb_, tc_, td_;
  WeierstrassModel<K> w_;
  std::optional<K> sqrt_lead_;
};

/// E_t: z^2 = (v - 2) h(v), h = (v^3 - 3v + 2) t^2 - (v^3 - 3v - 2), identity (2, 0).
template <class K>
Poly<K> et_h(const K& t, const std::string& var = "v") {
  Poly<K> a(std::vector<K>{K(2), K(-3), K(0), K(1)}, var);
  Poly<K> b(std::vector<K>{K(-2), K(-3), K(0), K(1)}, var);
  return (t * t) * a - b;
}

template <class K>
QuarticModel<K> build_Et(const K& t) {
  if (shadowkit::is_zero(t) || shadowkit::is_zero(t * t - K(1)))
    throw ExcludedParameter("t must avoid 0, 1 and -1");
  Poly<K> q = Poly<K>(std::vector<K>{K(-2), K(1)}, "v") * et_h(t);
  return QuarticModel<K>(q, K(2));
}

}  // namespace shadowkit
