#pragma once

// Divisors on a pointed quartic z^2 = q(v). Besides single points, a divisor may carry
// places that are only defined over an extension: the sum over the roots of a monic m(v)
// of (theta, r(theta)), both points over the roots of m, or the pair at infinity.
// Classes are computed on the Weierstrass side; clusters go through Mumford
// representations and Cantor reduction.

#include <optional>
#include <string>
#include <vector>

#include "shadowkit/divisors/divisor.hpp"
#include "shadowkit/elliptic/quartic.hpp"
#include "shadowkit/exactalg/cyclotomic.hpp"
#include "shadowkit/exactalg/finite_field.hpp"
#include "shadowkit/exactalg/poly.hpp"

namespace shadowkit {

template <class K>
struct QPlace {
  enum class Kind { Point, Cluster, FiberPair, InfPair };
  Kind kind = Kind::Point;
  QPoint<K> pt;
  Poly<K> m, r;  // Cluster: m monic squarefree, r(theta)^2 = q(theta); FiberPair: m only

  static QPlace point(const QPoint<K>& p) { return QPlace{Kind::Point, p, Poly<K>(std::vector<K>{}, "v"), Poly<K>(std::vector<K>{}, "v")}; }
  static QPlace at(const K& v, const K& z) { return point(QPoint<K>::at(v, z)); }
  static QPlace cluster(const Poly<K>& m, const Poly<K>& r) {
    if (m.degree() < 1) throw DegreeError("cluster needs a nonconstant polynomial");
    Poly<K> mm = m.monic().with_var("v");
    return QPlace{Kind::Cluster, QPoint<K>{}, mm, (r.with_var("v")) % mm};
  }
  static QPlace fiber_pair(const Poly<K>& m) {
    if (m.degree() < 1) throw DegreeError("fibre pair needs a nonconstant polynomial");
    return QPlace{Kind::FiberPair, QPoint<K>{}, m.monic().with_var("v"), Poly<K>(std::vector<K>{}, "v")};
  }
  static QPlace inf_pair() { return QPlace{Kind::InfPair, QPoint<K>{}, Poly<K>(std::vector<K>{}, "v"), Poly<K>(std::vector<K>{}, "v")}; }

  friend bool operator<(const QPlace& a, const QPlace& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.pt != b.pt) return a.pt < b.pt;
    auto lex = [](const Poly<K>& f, const Poly<K>& g) -> int {
      if (f.degree() != g.degree()) return f.degree() < g.degree() ? -1 : 1;
      for (int i = f.degree(); i >= 0; --i) {
        if (f.coeff(i) == g.coeff(i)) continue;
        return f.coeff(i) < g.coeff(i) ? -1 : 1;
      }
      return 0;
    };
    int c = lex(a.m, b.m);
    if (c) return c < 0;
    return lex(a.r, b.r) < 0;
  }
  friend bool operator==(const QPlace& a, const QPlace& b) { return !(a < b) && !(b < a); }

  std::string to_string() const {
    switch (kind) {
      case Kind::Point:
        return pt.to_string();
      case Kind::Cluster:
        return "{(v, " + shadowkit::to_string(r) + ") : " + shadowkit::to_string(m) + " = 0}";
      case Kind::FiberPair:
        return "{(v, +-z) : " + shadowkit::to_string(m) + " = 0}";
      default:
        return "(inf+ + inf-)";
    }
  }
};

template <class K>
long place_degree(const QPlace<K>& p) {
  switch (p.kind) {
    case QPlace<K>::Kind::Point:
      return 1;
    case QPlace<K>::Kind::Cluster:
      return p.m.degree();
    case QPlace<K>::Kind::FiberPair:
      return 2L * p.m.degree();
    default:
      return 2;
  }
}

template <class K>
using QDivisor = FormalDivisor<QPlace<K>>;

inline std::optional<CycNum> try_sqrt(const CycNum& x) {
  if (x.is_rational()) return CycNum::sqrt_rational(x.rational_part());
  for (int k = 0; k < CycNum::kOrder; k += 2)
    if (CycNum::zeta(k) == x) return CycNum::zeta(k / 2);
  return std::nullopt;
}
inline std::optional<FqElem> try_sqrt(const FqElem& x) { return x.sqrt(); }

namespace detail {

/// x^d f(1/x) for deg f <= d.
template <class K>
Poly<K> reversed(const Poly<K>& f, int d, const std::string& var) {
  std::vector<K> c(d + 1, K(0));
  for (int i = 0; i <= f.degree(); ++i) c[d - i] = f.coeff(i);
  return Poly<K>(c, var);
}

/// The group sum of the points (theta, r(theta)), m(theta) = 0, on the Weierstrass model.
template <class K>
WPoint<K> cluster_class(const QuarticModel<K>& E, Poly<K> m, Poly<K> r) {
  const Poly<K>& q = E.q();
  if (!((q.with_var("v") - r * r) % m).is_zero()) throw OffCurve("cluster is not on the quartic model");
  if (!is_squarefree(m)) throw Error("cluster polynomial must be squarefree");
  const K e = E.root();
  const K a = E.taylor_a();
  // (e, 0) is the identity
  if (shadowkit::is_zero(m.eval(e))) {
    m = Poly<K>::exact_div(m, Poly<K>(std::vector<K>{-e, K(1)}, "v"));
    if (m.degree() < 1) return WPoint<K>::O();
    r = r % m;
  }
  const int d = m.degree();
  // x = a/(v - e): v = e + a s with s = 1/x
  Poly<K> lin(std::vector<K>{e, a}, "v");
  Poly<K> M = m.compose(lin), R = r.compose(lin);
  Poly<K> u = reversed(M, d, "x").monic();
  // y = x^2 R(1/x) / a = x^2 * [x^(d-1) R(1/x)] * x^-(d-1) / a
  Poly<K> X = Poly<K>::variable("x");
  auto [g, s, t] = poly_xgcd(X, u);
  if (g.degree() != 0) throw Error("internal: x is not invertible modulo u");
  Poly<K> xinv = s % u;
  Poly<K> Y = reversed(R, d - 1 < 0 ? 0 : d - 1, "x") * X * X;
  for (int i = 0; i < d - 1; ++i) Y = (Y * xinv) % u;
  Y = (inv(a) * Y) % u;
  const auto& W = E.weierstrass();
  Poly<K> f(std::vector<K>{W.a6, W.a4, W.a2, K(1)}, "x");
  if (!((f - Y * Y) % u).is_zero()) throw Error("internal: Mumford representation is inconsistent");
  while (u.degree() >= 2) {
    Poly<K> un = Poly<K>::exact_div(f - Y * Y, u).monic();
    Y = (-Y) % un;
    u = un;
  }
  if (u.degree() <= 0) return WPoint<K>::O();
  K x0 = -u.coeff(0);
  return WPoint<K>::affine(x0, Y.eval(x0));
}

template <class K>
WPoint<K> place_class(const QuarticModel<K>& E, const QPlace<K>& p) {
  using Kind = typename QPlace<K>::Kind;
  switch (p.kind) {
    case Kind::Point:
      return E.to_w(p.pt);
    case Kind::Cluster:
      return cluster_class(E, p.m, p.r);
    default:
      // (theta, z) + (theta, -z) and inf+ + inf- both sum to O
      return WPoint<K>::O();
  }
}

}  // namespace detail

/// Group sum of the divisor read on the Weierstrass side, with no degree condition.
template <class K>
WPoint<K> group_sum_w(const QuarticModel<K>& E, const QDivisor<K>& D) {
  const auto& W = E.weierstrass();
  WPoint<K> acc = WPoint<K>::O();
  for (const auto& [p, n] : D.terms()) acc = W.add(acc, W.smul(n, detail::place_class(E, p)));
  return acc;
}

template <class K>
QPoint<K> class_eval(const QuarticModel<K>& E, const QDivisor<K>& D) {
  if (D.degree() != 0) throw DegreeError("class evaluation needs degree 0, got " + std::to_string(D.degree()));
  return E.from_w(group_sum_w(E, D));
}

/// Weierstrass form of the class; needed when the class is a point at infinity of the quartic.
template <class K>
WPoint<K> class_eval_w(const QuarticModel<K>& E, const QDivisor<K>& D) {
  if (D.degree() != 0) throw DegreeError("class evaluation needs degree 0, got " + std::to_string(D.degree()));
  return group_sum_w(E, D);
}

template <class K>
bool verify_class_equal(const QuarticModel<K>& E, const QDivisor<K>& a, const QDivisor<K>& b) {
  if (a.degree() != b.degree())
    throw DegreeError("degrees differ: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  return group_sum_w(E, a - b).inf;
}

/// c * num(v) / den(v) * z^zpow
template <class K>
struct CurveFunction {
  K c = K(1);
  Poly<K> num, den;
  int zpow = 0;

  static CurveFunction rational(const Poly<K>& n, const Poly<K>& d, int zp = 0) {
    return CurveFunction{K(1), n.with_var("v"), d.with_var("v"), zp};
  }
  static CurveFunction constant(const K& k) {
    return CurveFunction{k, Poly<K>(K(1), "v"), Poly<K>(K(1), "v"), 0};
  }
};

namespace detail {

template <class K>
QDivisor<K> infinity_part(const QuarticModel<K>& E, long n) {
  QDivisor<K> d;
  if (E.sqrt_lead()) {
    d.add(QPlace<K>::point(QPoint<K>::inf_plus()), n);
    d.add(QPlace<K>::point(QPoint<K>::inf_minus()), n);
  } else {
    d.add(QPlace<K>::inf_pair(), n);
  }
  return d;
}

/// Weierstrass points over the roots of w (a factor of q), each with weight n.
template <class K>
QDivisor<K> ramified_part(const QuarticModel<K>& E, Poly<K> w, long n) {
  QDivisor<K> d;
  const K e = E.root();
  if (shadowkit::is_zero(w.eval(e))) {
    d.add(QPlace<K>::at(e, K(0)), n);
    w = Poly<K>::exact_div(w, Poly<K>(std::vector<K>{-e, K(1)}, "v"));
  }
  if (w.degree() == 1) {
    d.add(QPlace<K>::at(-w.coeff(0) / w.coeff(1), K(0)), n);
  } else if (w.degree() > 1) {
    d.add(QPlace<K>::cluster(w, Poly<K>(std::vector<K>{}, "v")), n);
  }
  return d;
}

/// div of g(v): zeros over the roots of g, poles at infinity.
template <class K>
QDivisor<K> divisor_of_v_poly(const QuarticModel<K>& E, const Poly<K>& g) {
  QDivisor<K> d;
  if (g.is_zero()) throw Error("function vanishes identically on the curve");
  if (g.degree() == 0) return d;
  Poly<K> q = E.q().with_var("v");
  for (const auto& [s, i] : squarefree_decomposition(g.with_var("v"))) {
    Poly<K> w = poly_gcd(s, q);
    Poly<K> rest = Poly<K>::exact_div(s, w);
    if (w.degree() >= 1) d += ramified_part(E, w, 2L * i);
    if (rest.degree() == 1) {
      K theta = -rest.coeff(0) / rest.coeff(1);
      if (auto z = try_sqrt(q.eval(theta))) {
        d.add(QPlace<K>::at(theta, *z), i);
        d.add(QPlace<K>::at(theta, -*z), i);
        continue;
      }
    }
    if (rest.degree() >= 1) d.add(QPlace<K>::fiber_pair(rest), i);
  }
  d += infinity_part(E, -static_cast<long>(g.degree()));
  return d;
}

}  // namespace detail

/// Zeros minus poles. Asserts degree 0 and trivial class on every call.
template <class K>
QDivisor<K> divisor_of_function(const QuarticModel<K>& E, const CurveFunction<K>& f) {
  if (shadowkit::is_zero(f.c)) throw Error("function vanishes identically on the curve");
  QDivisor<K> d = detail::divisor_of_v_poly(E, f.num) - detail::divisor_of_v_poly(E, f.den);
  if (f.zpow != 0) {
    QDivisor<K> dz = detail::ramified_part(E, E.q().with_var("v").monic(), 1) + detail::infinity_part(E, -2);
    d += static_cast<long>(f.zpow) * dz;
  }
  if (d.degree() != 0) throw Error("internal: divisor of a function has degree " + std::to_string(d.degree()));
  if (!group_sum_w(E, d).inf) throw Error("internal: divisor of a function is not principal");
  return d;
}

}  // namespace shadowkit
