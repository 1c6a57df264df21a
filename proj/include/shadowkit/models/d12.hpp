#pragma once

// The dihedral family: C_t, its quotient Y_t by tau^6 and the map to the quartic E_t.

#include <string>
#include <vector>

#include "shadowkit/elliptic/quartic.hpp"
#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/cyclotomic.hpp"
#include "shadowkit/exactalg/parse.hpp"
#include "shadowkit/models/affine.hpp"

namespace shadowkit::d12 {

inline const std::vector<std::string>& ct_vars() {
  static const std::vector<std::string> v{"x", "y", "t"};
  return v;
}
inline const std::vector<std::string>& yt_vars() {
  static const std::vector<std::string> v{"x", "y1", "t"};
  return v;
}

inline constexpr const char* kCtEquation = "y^12*(x-1)^3*(x-t)^4 - (x+1)^3*(x+t)^4";
inline constexpr const char* kYtEquation = "y1^6*(x-1)^3*(x-t)^4 - (x+1)^3*(x+t)^4";

inline void check_parameter(const CycNum& t) {
  if (t.is_zero() || (t * t - CycNum(1)).is_zero()) throw ExcludedParameter("t must avoid 0, 1 and -1");
}

/// The branch values of x, namely 1, -1, t, -t, are distinct, so the smooth model has genus 6.
inline bool smooth_member(const CycNum& t) {
  check_parameter(t);
  Poly<CycNum> b = Poly<CycNum>(std::vector<CycNum>{CycNum(-1), CycNum(0), CycNum(1)}) *
                   Poly<CycNum>(std::vector<CycNum>{-(t * t), CycNum(0), CycNum(1)});
  return !discriminant(b).is_zero();
}

/// Symbolic in t.
inline AffinePlaneCurve ct_curve() { return AffinePlaneCurve(parse_mpoly(kCtEquation, ct_vars()), "y"); }
inline AffinePlaneCurve yt_curve() { return AffinePlaneCurve(parse_mpoly(kYtEquation, yt_vars()), "y1"); }

inline MonomialAut<CycNum> sigma() { return {-1, CycNum(1), -1}; }
inline MonomialAut<CycNum> tau() { return {1, CycNum::zeta_m(12), 1}; }
/// Induced action on Y_t (y1 = y^2).
inline MonomialAut<CycNum> sigma_bar() { return {-1, CycNum(1), -1}; }
inline MonomialAut<CycNum> tau_bar() { return {1, CycNum::zeta_m(6), 1}; }

/// psi: C_t -> Y_t.
inline ChartPoint<CycNum> psi(const ChartPoint<CycNum>& p) { return {p.chart, p.u, p.y * p.y}; }

/// R(v) = v(v-1)(v+2)(t+1) - 2
inline CycNum r_of_v(const CycNum& v, const CycNum& t) {
  return v * (v - CycNum(1)) * (v + CycNum(2)) * (t + CycNum(1)) - CycNum(2);
}

/// pi_E: Y_t -> E_t via u = y1^2 (x-1)(x-t)/((x+1)(x+t)), v = u + 1/u, z = (y1 - 1/y1) h(v) / R(v).
inline QPoint<CycNum> pi_E(const ChartPoint<CycNum>& p, const CycNum& t) {
  check_parameter(t);
  CycNum num, den;
  if (p.chart == Chart::Affine) {
    num = (p.u - CycNum(1)) * (p.u - t);
    den = (p.u + CycNum(1)) * (p.u + t);
  } else {
    num = (CycNum(1) - p.u) * (CycNum(1) - t * p.u);
    den = (CycNum(1) + p.u) * (CycNum(1) + t * p.u);
  }
  if (den.is_zero() || num.is_zero() || p.y.is_zero()) throw PoleError("pi_E is not given by the closed formula here");
  CycNum u = p.y * p.y * num / den;
  CycNum v = u + u.inv();
  CycNum rv = r_of_v(v, t);
  if (rv.is_zero()) throw PoleError("R(v) vanishes at this point");
  CycNum z = (p.y - p.y.inv()) * et_h(t).eval(v) / rv;
  return QPoint<CycNum>::at(v, z);
}

}  // namespace shadowkit::d12
