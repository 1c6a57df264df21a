#pragma once

// Affine plane curves g(x, y; params) = 0 with a second chart xi = 1/x for the points
// over x = infinity, and automorphisms of the monomial shape (x, y) -> (eps x, lambda y^s).

#include <optional>
#include <string>
#include <vector>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/cyclotomic.hpp"
#include "shadowkit/exactalg/mpoly.hpp"

namespace shadowkit {

enum class Chart { Affine, AtInfinity };

inline std::string chart_name(Chart c) { return c == Chart::Affine ? "x" : "1/x"; }

/// A point in one of the two charts; in the AtInfinity chart, u holds 1/x.
template <class K>
struct ChartPoint {
  Chart chart = Chart::Affine;
  K u = K(0), y = K(0);

  friend bool operator==(const ChartPoint& a, const ChartPoint& b) {
    return a.chart == b.chart && a.u == b.u && a.y == b.y;
  }
  friend bool operator<(const ChartPoint& a, const ChartPoint& b) {
    if (a.chart != b.chart) return a.chart < b.chart;
    if (a.u != b.u) return a.u < b.u;
    return a.y < b.y;
  }
  std::string to_string(const std::string& yname = "y") const {
    return "(" + chart_name(chart) + "=" + shadowkit::to_string(u) + ", " + yname + "=" + shadowkit::to_string(y) + ")";
  }
};

/// g in variables (x, y, params...). Both charts share y and the parameters.
class AffinePlaneCurve {
 public:
  using MP = MPoly<CycNum>;

  AffinePlaneCurve(MP g, std::string yname = "y") : g_(std::move(g)), yname_(std::move(yname)) {
    if (g_.nvars() < 2) throw Error("affine curve needs variables (x, y, ...)");
    if (g_.is_zero()) throw Error("defining polynomial is zero");
    int dx = g_.degree_in(0);
    g_inf_ = MP(g_.vars());
    for (const auto& [e, c] : g_.terms()) {
      auto f = e;
      f[0] = dx - e[0];
      g_inf_ += MP::term(g_.vars(), c, f);
    }
  }

  const MP& equation(Chart c = Chart::Affine) const { return c == Chart::Affine ? g_ : g_inf_; }
  const std::vector<std::string>& vars() const { return g_.vars(); }
  const std::string& yname() const { return yname_; }
  std::size_t nparams() const { return g_.nvars() - 2; }

  /// Defining polynomial of the chart restricted to the point, as a polynomial in the parameters.
  MP residual(const ChartPoint<CycNum>& p) const {
    std::vector<MP> subs;
    subs.push_back(MP(vars(), p.u));
    subs.push_back(MP(vars(), p.y));
    for (std::size_t i = 2; i < vars().size(); ++i) subs.push_back(MP::variable(vars(), i));
    return equation(p.chart).substitute(subs);
  }

  /// Exact membership, identically in the parameters.
  bool on_curve(const ChartPoint<CycNum>& p) const { return residual(p).is_zero(); }

  /// Fix every parameter to a value.
  AffinePlaneCurve specialize(const std::vector<CycNum>& values) const {
    if (values.size() != nparams()) throw Error("wrong number of parameter values");
    MP g = g_;
    for (std::size_t i = 0; i < values.size(); ++i) g = g.specialize(2 + i, values[i]);
    return AffinePlaneCurve(g, yname_);
  }

 private:
  MP g_, g_inf_;
  std::string yname_;
};

/// (x, y) -> (eps x, lambda y^s) with eps, s in {1, -1}; acts on 1/x by the same eps.
template <class K>
struct MonomialAut {
  int eps = 1;
  K lambda = K(1);
  int s = 1;

  static MonomialAut identity() { return MonomialAut{}; }
  bool is_identity() const { return eps == 1 && s == 1 && lambda == K(1); }

  /// (this o other)(p) = this(other(p)).
  MonomialAut compose(const MonomialAut& other) const {
    MonomialAut r;
    r.eps = eps * other.eps;
    r.s = s * other.s;
    r.lambda = lambda * (s == 1 ? other.lambda : inv(other.lambda));
    return r;
  }
  MonomialAut pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    MonomialAut r;
    for (int i = 0; i < n; ++i) r = compose(r);
    return r;
  }
  MonomialAut inverse() const {
    MonomialAut r;
    r.eps = eps;
    r.s = s;
    r.lambda = s == 1 ? inv(lambda) : lambda;
    return r;
  }
  friend bool operator==(const MonomialAut& a, const MonomialAut& b) {
    return a.eps == b.eps && a.s == b.s && a.lambda == b.lambda;
  }

  ChartPoint<K> apply(const ChartPoint<K>& p) const {
    ChartPoint<K> r = p;
    r.u = eps == 1 ? p.u : -p.u;
    if (s == 1) {
      r.y = lambda * p.y;
    } else {
      if (shadowkit::is_zero(p.y)) throw UnresolvedIndeterminacy("y = 0 is sent to infinity");
      r.y = lambda * inv(p.y);
    }
    return r;
  }

  /// Smallest n >= 1 with this^n = id, or 0 when none up to the bound.
  int order(int bound = 1000) const {
    MonomialAut r = *this;
    for (int n = 1; n <= bound; ++n) {
      if (r.is_identity()) return n;
      r = compose(r);
    }
    return 0;
  }

  template <class F>
  auto map(F f) const -> MonomialAut<decltype(f(std::declval<K>()))> {
    return {eps, f(lambda), s};
  }
};

/// Pull the chart equation back along the automorphism, clearing the y-denominator.
inline MPoly<CycNum> pullback_equation(const AffinePlaneCurve& c, const MonomialAut<CycNum>& a, Chart chart) {
  using MP = MPoly<CycNum>;
  const MP& g = c.equation(chart);
  int dy = g.degree_in(1);
  MP h(g.vars());
  std::vector<CycNum> lam_pow{CycNum(1)};
  for (const auto& [e, coef] : g.terms()) {
    while (static_cast<int>(lam_pow.size()) <= e[1]) lam_pow.push_back(lam_pow.back() * a.lambda);
    CycNum k = coef * lam_pow[e[1]];
    if (a.eps == -1 && (e[0] & 1)) k = -k;
    auto f = e;
    if (a.s == -1) f[1] = dy - e[1];
    h += MP::term(g.vars(), k, f);
  }
  return h;
}

/// h = k * g for a nonzero constant k.
inline bool proportional(const MPoly<CycNum>& h, const MPoly<CycNum>& g) {
  if (h.is_zero() || g.is_zero()) return h.is_zero() && g.is_zero();
  auto [eh, ch] = h.leading();
  auto [eg, cg] = g.leading();
  if (eh != eg) return false;
  CycNum k = ch / cg;
  return h == k * g;
}

struct AutReport {
  bool preserves_curve = false;
  int order = 0;
  bool order_matches = false;
  std::vector<std::pair<std::string, bool>> relations;

  bool ok() const {
    if (!preserves_curve || !order_matches) return false;
    for (const auto& [name, holds] : relations)
      if (!holds) return false;
    return true;
  }
};

/// Checks that both chart equations are preserved and that the order is as declared.
inline AutReport verify_automorphism(const AffinePlaneCurve& c, const MonomialAut<CycNum>& a, int declared_order) {
  AutReport r;
  r.preserves_curve = proportional(pullback_equation(c, a, Chart::Affine), c.equation(Chart::Affine)) &&
                      proportional(pullback_equation(c, a, Chart::AtInfinity), c.equation(Chart::AtInfinity));
  r.order = a.order();
  r.order_matches = r.order == declared_order;
  return r;
}

/// Square roots of x in Q(zeta_24) when x is a root of unity or a supported rational.
inline std::vector<CycNum> cyc_square_roots(const CycNum& x) {
  if (x.is_zero()) return {CycNum(0)};
  for (int k = 0; k < CycNum::kOrder; ++k) {
    if (!(CycNum::zeta(k) == x)) continue;
    if (k % 2) break;
    CycNum r = CycNum::zeta(k / 2);
    return {r, -r};
  }
  if (x.is_rational()) {
    if (auto r = CycNum::sqrt_rational(x.rational_part())) return {*r, -*r};
  }
  throw Error("square root of " + x.to_string() + " is not available in Q(zeta_24)");
}

/// Fixed points of an automorphism with eps = -1: x = 0 in the affine chart and
/// 1/x = 0 in the chart at infinity, with y solving y = lambda y^s.
/// Each candidate is kept only when it lies on the curve identically in the parameters.
inline std::vector<ChartPoint<CycNum>> fixed_points(const MonomialAut<CycNum>& a, const AffinePlaneCurve& c) {
  if (a.is_identity()) throw Error("the identity fixes every point");
  if (a.eps != -1) throw Error("fixed points are computed only for automorphisms with x -> -x");
  std::vector<CycNum> ys;
  if (a.s == -1) {
    ys = cyc_square_roots(a.lambda);
  } else if (!(a.lambda == CycNum(1))) {
    ys = {CycNum(0)};
  } else {
    throw Error("automorphism fixes whole fibres over x = 0 and x = infinity");
  }
  std::vector<ChartPoint<CycNum>> out;
  for (Chart ch : {Chart::AtInfinity, Chart::Affine}) {
    for (const auto& y : ys) {
      ChartPoint<CycNum> p{ch, CycNum(0), y};
      if (!c.on_curve(p)) continue;
      if (!(a.apply(p) == p)) throw Error("internal: candidate is not fixed");
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace shadowkit
