#pragma once

// Rational maps of P^2 given by three forms, their action on plane curves, indeterminacy
// resolution by branch expansion, invariance sampling over finite fields and smoothness tests.

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/cyclotomic.hpp"
#include "shadowkit/exactalg/finite_field.hpp"
#include "shadowkit/exactalg/mpoly.hpp"
#include "shadowkit/exactalg/poly.hpp"
#include "shadowkit/exactalg/projective.hpp"
#include "shadowkit/models/affine.hpp"
#include "shadowkit/models/branch.hpp"

namespace shadowkit {

/// Drop variables past the first n; they must not occur.
template <class K>
MPoly<K> truncate_vars(const MPoly<K>& f, std::size_t n) {
  std::vector<std::string> vars(f.vars().begin(), f.vars().begin() + static_cast<long>(n));
  MPoly<K> r(vars);
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = n; i < e.size(); ++i)
      if (e[i]) throw Error("variable '" + f.vars()[i] + "' still occurs");
    r += MPoly<K>::term(vars, c, std::vector<int>(e.begin(), e.begin() + static_cast<long>(n)));
  }
  return r;
}

/// Fix the trailing parameters of a form in (X, Y, Z, params...) and drop them.
inline MPoly<CycNum> specialize_params(const MPoly<CycNum>& f, const std::vector<CycNum>& values) {
  if (f.nvars() != 3 + values.size()) throw Error("wrong number of parameter values");
  MPoly<CycNum> g = f;
  for (std::size_t i = 0; i < values.size(); ++i) g = g.specialize(3 + i, values[i]);
  return truncate_vars(g, 3);
}

template <class K>
struct RationalMapP2 {
  std::array<MPoly<K>, 3> comps;

  /// (this o other): substitute the components of other for the first three variables.
  RationalMapP2 compose(const RationalMapP2& other) const {
    const auto& vars = other.comps[0].vars();
    std::vector<MPoly<K>> subs{other.comps[0], other.comps[1], other.comps[2]};
    for (std::size_t i = 3; i < vars.size(); ++i) subs.push_back(MPoly<K>::variable(vars, i));
    RationalMapP2 r;
    for (int i = 0; i < 3; ++i) r.comps[i] = comps[i].substitute(subs);
    return r;
  }

  /// Pull a form in the first three variables back along the map.
  MPoly<K> pullback(const MPoly<K>& F) const {
    const auto& vars = comps[0].vars();
    if (F.nvars() != vars.size()) throw Error("form and map live in different rings");
    std::vector<MPoly<K>> subs{comps[0], comps[1], comps[2]};
    for (std::size_t i = 3; i < vars.size(); ++i) subs.push_back(MPoly<K>::variable(vars, i));
    return F.substitute(subs);
  }

  /// Components are proportional to (X, Y, Z).
  bool is_identity() const {
    const auto& vars = comps[0].vars();
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (!(comps[i] * MPoly<K>::variable(vars, j) == comps[j] * MPoly<K>::variable(vars, i))) return false;
    return true;
  }

  std::array<K, 3> eval_raw(const PPoint<K>& p) const {
    std::vector<K> v(p.begin(), p.end());
    return {comps[0].eval(v), comps[1].eval(v), comps[2].eval(v)};
  }

  RationalMapP2 specialize(const std::vector<CycNum>& values) const {
    RationalMapP2 r;
    for (int i = 0; i < 3; ++i) r.comps[i] = specialize_params(comps[i], values);
    return r;
  }

  template <class F>
  auto map(F f) const -> RationalMapP2<decltype(f(std::declval<K>()))> {
    return {{comps[0].map(f), comps[1].map(f), comps[2].map(f)}};
  }
};

/// Smallest n >= 1 with a^n proportional to the identity; 0 if none up to the bound.
template <class K>
int map_order(const RationalMapP2<K>& a, int bound = 64) {
  RationalMapP2<K> r = a;
  for (int n = 1; n <= bound; ++n) {
    if (r.is_identity()) return n;
    r = a.compose(r);
  }
  return 0;
}

/// h = k g with a nonzero constant k (over any coefficient field).
template <class K>
bool proportional_forms(const MPoly<K>& h, const MPoly<K>& g) {
  if (h.is_zero() || g.is_zero()) return h.is_zero() && g.is_zero();
  auto [eh, ch] = h.leading();
  auto [eg, cg] = g.leading();
  if (eh != eg) return false;
  return h == (ch / cg) * g;
}

/// Preservation (F o a = k F), order, and optional relations given as pairs of maps.
template <class K>
AutReport verify_automorphism(const MPoly<K>& F, const RationalMapP2<K>& a, int declared_order) {
  AutReport r;
  r.preserves_curve = proportional_forms(a.pullback(F), F);
  r.order = map_order(a);
  r.order_matches = r.order == declared_order;
  return r;
}

/// Image of a point of F = 0; indeterminate points go through a branch expansion.
template <class K>
PPoint<K> apply_map(const RationalMapP2<K>& m, const PPoint<K>& p, const MPoly<K>& F, int order = 8) {
  if (!shadowkit::is_zero(F.eval(std::vector<K>(p.begin(), p.end()))))
    throw OffCurve("point " + to_string(p) + " is not on the source curve");
  auto img = m.eval_raw(p);
  if (is_zero_vector(img)) img = branch_image(branch_expansion(F, p, order), m.comps);
  return normalize(img);
}

/// Every F_q-point of F = 0 (brute force over the affine chart Z = 1 and the line Z = 0).
inline std::vector<PPoint<FqElem>> fq_points(const MPoly<FqElem>& F, const FqContext* ctx) {
  std::vector<PPoint<FqElem>> out;
  std::uint64_t q = ctx->size();
  FqElem one(ctx, 1), zero(ctx, 0);
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = 0; j < q; ++j) {
      PPoint<FqElem> p{ctx->element(i), ctx->element(j), one};
      if (F.eval(std::vector<FqElem>(p.begin(), p.end())).is_zero()) out.push_back(p);
    }
  for (std::uint64_t i = 0; i < q; ++i) {
    PPoint<FqElem> p{ctx->element(i), one, zero};
    if (F.eval(std::vector<FqElem>(p.begin(), p.end())).is_zero()) out.push_back(p);
  }
  PPoint<FqElem> last{one, zero, zero};
  if (F.eval(std::vector<FqElem>(last.begin(), last.end())).is_zero()) out.push_back(last);
  return out;
}

struct InvarianceResult {
  bool holds = false;
  int checked = 0;
  std::optional<PPoint<FqElem>> witness;
};

/// map o aut = map on sampled F_q-points where both sides are defined by the closed formulas.
inline InvarianceResult invariance_check(const RationalMapP2<CycNum>& map, const RationalMapP2<CycNum>& aut,
                                         const MPoly<CycNum>& F, const FqContext* ctx, int samples,
                                         std::uint64_t seed = 1) {
  auto red = [ctx](const CycNum& x) { return reduce_cyc(x, ctx); };
  auto Fr = F.map(red);
  auto mr = map.map(red);
  auto ar = aut.map(red);
  auto pts = fq_points(Fr, ctx);
  std::mt19937_64 rng(seed);
  std::shuffle(pts.begin(), pts.end(), rng);
  InvarianceResult r;
  for (const auto& p : pts) {
    if (r.checked >= samples) break;
    auto ap = ar.eval_raw(p);
    if (is_zero_vector(ap)) continue;
    auto lhs = mr.eval_raw(ap);
    auto rhs = mr.eval_raw(p);
    if (is_zero_vector(lhs) || is_zero_vector(rhs)) continue;
    ++r.checked;
    if (!proj_equal(lhs, rhs)) {
      r.witness = p;
      return r;
    }
  }
  if (r.checked == 0) throw Error("no usable points found over F_" + std::to_string(ctx->size()));
  r.holds = true;
  return r;
}

enum class Smoothness { Smooth, Singular, Undetermined };

inline std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth:
      return "smooth";
    case Smoothness::Singular:
      return "singular";
    default:
      return "undetermined";
  }
}

struct SmoothnessResult {
  Smoothness verdict = Smoothness::Undetermined;
  std::optional<PPoint<CycNum>> singular_point;
};

namespace detail {

inline bool singular_at(const MPoly<CycNum>& F, const PPoint<CycNum>& p) {
  std::vector<CycNum> v(p.begin(), p.end());
  if (!F.eval(v).is_zero()) return false;
  for (int i = 0; i < 3; ++i)
    if (!F.partial(i).eval(v).is_zero()) return false;
  return true;
}

/// Rational roots of a polynomial whose coefficients happen to be rational.
inline std::vector<BigRational> rational_roots_if_rational(const Poly<CycNum>& f) {
  if (f.degree() <= 0) return {};
  std::vector<BigRational> c;
  for (int i = 0; i <= f.degree(); ++i) {
    if (!f.coeff(i).is_rational()) return {};
    c.push_back(f.coeff(i).rational_part());
  }
  return rational_roots(Poly<BigRational>(c));
}

/// Numerator of a polynomial-valued rational function.
inline Poly<CycNum> as_poly(const RatFn<CycNum>& f) {
  if (f.den().degree() != 0) throw Error("internal: resultant is not a polynomial");
  return f.num() * Poly<CycNum>(inv(f.den().lc()), f.num().var());
}

/// gcd over the x-line of Res_y(g, g_x) and Res_y(g, g_y) for g in (main, other) order.
inline Poly<CycNum> projection_gcd(const MPoly<CycNum>& g, std::size_t eliminate, std::size_t keep) {
  auto gb = g.to_bivariate(eliminate, keep);
  auto gx = g.partial(keep).to_bivariate(eliminate, keep);
  auto gy = g.partial(eliminate).to_bivariate(eliminate, keep);
  Poly<CycNum> acc(std::vector<CycNum>{}, "s");
  for (const auto* h : {&gx, &gy}) {
    Poly<CycNum> r = h->degree() < 0 ? Poly<CycNum>(std::vector<CycNum>{}, "s") : as_poly(resultant(gb, *h));
    acc = poly_gcd(acc.with_var("s"), r.with_var("s"));
  }
  return acc;
}

}  // namespace detail

/// Elimination test for singular points of a ternary form over Q(zeta_24).
inline SmoothnessResult smooth_projective(const MPoly<CycNum>& F) {
  SmoothnessResult r;
  if (F.is_zero()) {
    r.verdict = Smoothness::Singular;
    return r;
  }
  using P = PPoint<CycNum>;
  for (const P& p : {P{CycNum(1), CycNum(0), CycNum(0)}, P{CycNum(0), CycNum(1), CycNum(0)},
                     P{CycNum(0), CycNum(0), CycNum(1)}}) {
    if (detail::singular_at(F, p)) {
      r.verdict = Smoothness::Singular;
      r.singular_point = p;
      return r;
    }
  }
  bool undetermined = false;
  // affine chart Z = 1
  {
    std::vector<MPoly<CycNum>> subs{MPoly<CycNum>::variable(F.vars(), 0), MPoly<CycNum>::variable(F.vars(), 1),
                                    MPoly<CycNum>(F.vars(), CycNum(1))};
    MPoly<CycNum> g = F.substitute(subs);
    Poly<CycNum> gx = detail::projection_gcd(g, 1, 0);
    if (gx.degree() != 0) {
      Poly<CycNum> gy = detail::projection_gcd(g, 0, 1);
      if (gy.degree() != 0) {
        for (const auto& x0 : detail::rational_roots_if_rational(gx))
          for (const auto& y0 : detail::rational_roots_if_rational(gy)) {
            P p{CycNum(x0), CycNum(y0), CycNum(1)};
            if (detail::singular_at(F, p)) {
              r.verdict = Smoothness::Singular;
              r.singular_point = p;
              return r;
            }
          }
        undetermined = true;
      }
    }
  }
  // line Z = 0, points [X : 1 : 0]
  {
    auto restrict_line = [&](const MPoly<CycNum>& h) {
      std::vector<MPoly<CycNum>> subs{MPoly<CycNum>::variable(F.vars(), 0), MPoly<CycNum>(F.vars(), CycNum(1)),
                                      MPoly<CycNum>(F.vars(), CycNum(0))};
      return h.substitute(subs).to_univariate(0).with_var("s");
    };
    Poly<CycNum> acc = restrict_line(F);
    for (int i = 0; i < 3; ++i) acc = poly_gcd(acc, restrict_line(F.partial(i)));
    if (acc.degree() != 0) {
      for (const auto& x0 : detail::rational_roots_if_rational(acc)) {
        P p{CycNum(x0), CycNum(1), CycNum(0)};
        if (detail::singular_at(F, p)) {
          r.verdict = Smoothness::Singular;
          r.singular_point = p;
          return r;
        }
      }
      undetermined = true;
    }
  }
  r.verdict = undetermined ? Smoothness::Undetermined : Smoothness::Smooth;
  return r;
}

}  // namespace shadowkit
