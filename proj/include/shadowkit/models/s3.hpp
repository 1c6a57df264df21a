#pragma once

// The S3 family f_{u,w}, its automorphisms and the quotient maps to the two fibration cubics.
// Everything is symbolic in (u, w); specialize() fixes the parameters.

#include <array>
#include <string>
#include <vector>

#include "shadowkit/exactalg/cyclotomic.hpp"
#include "shadowkit/exactalg/mpoly.hpp"
#include "shadowkit/exactalg/parse.hpp"
#include "shadowkit/models/plane_maps.hpp"

namespace shadowkit::s3 {

inline const std::vector<std::string>& src_vars() {
  static const std::vector<std::string> v{"X", "Y", "Z", "u", "w"};
  return v;
}
inline const std::vector<std::string>& tgt_vars() {
  static const std::vector<std::string> v{"a", "b", "c", "u", "w"};
  return v;
}

inline constexpr const char* kCurve = "w^2*(X*(Y^3+Z^3)+Y^2*Z^2) + (u^3+w^4)*X^2*Y*Z + w^2*u^3*X^4";
inline constexpr const char* kQuotient = "w^2*(a^3-3*a*b*c+b^2*c) + (u^3+w^4)*b*c^2 + w^2*u^3*c^3";
inline constexpr const char* kQuotientPrime = "w^2*(a^2*c+b^3+a*b^2) + (u^3+w^4)*a*b*c + w^2*u^3*a*c^2";

using MP = MPoly<CycNum>;
using Map = RationalMapP2<CycNum>;

inline MP curve() { return parse_mpoly(kCurve, src_vars()); }
inline MP quotient() { return parse_mpoly(kQuotient, tgt_vars()); }
inline MP quotient_prime() { return parse_mpoly(kQuotientPrime, tgt_vars()); }

inline Map map_from(const std::array<std::string, 3>& src) {
  return {{parse_mpoly(src[0], src_vars()), parse_mpoly(src[1], src_vars()), parse_mpoly(src[2], src_vars())}};
}

inline std::string z3_pow(int k) { return "z3^" + std::to_string(((k % 3) + 3) % 3); }

/// sigma_i [X:Y:Z] = [X : z3^i Z : z3^(2i) Y]
inline Map sigma(int i) { return map_from({"X", z3_pow(i) + "*Z", z3_pow(2 * i) + "*Y"}); }
/// tau [X:Y:Z] = [X : z3 Y : z3^2 Z]
inline Map tau() { return map_from({"X", "z3*Y", "z3^2*Z"}); }
/// psi_i [X:Y:Z] = [X(z3^i Y + z3^(2i) Z) : YZ : X^2]
inline Map psi(int i) { return map_from({"X*(" + z3_pow(i) + "*Y+" + z3_pow(2 * i) + "*Z)", "Y*Z", "X^2"}); }
/// psi_tau [X:Y:Z] = [Y^3 : XYZ : X^3]
inline Map psi_tau() { return map_from({"Y^3", "X*Y*Z", "X^3"}); }

/// A = [1 : w : -w] and A' = [1 : -u : 0].
inline std::array<MP, 3> point_A() {
  return {parse_mpoly("1", src_vars()), parse_mpoly("w", src_vars()), parse_mpoly("-w", src_vars())};
}
inline std::array<MP, 3> point_A_prime() {
  return {parse_mpoly("1", src_vars()), parse_mpoly("-u", src_vars()), parse_mpoly("0", src_vars())};
}

/// F at a point whose coordinates are polynomials in the parameters.
inline MP residual(const MP& F, const std::array<MP, 3>& p) {
  std::vector<MP> subs{p[0], p[1], p[2]};
  for (std::size_t i = 3; i < F.nvars(); ++i) subs.push_back(MP::variable(p[0].vars(), i));
  return F.substitute(subs);
}
inline bool on_curve_symbolic(const MP& F, const std::array<MP, 3>& p) { return residual(F, p).is_zero(); }

/// The pullback of the target form is divisible by the source form, identically in (u, w).
inline bool maps_into(const MP& src, const Map& m, const MP& tgt) {
  return mpoly_divide(m.pullback(tgt), src).second.is_zero();
}

inline PPoint<CycNum> specialize_point(const std::array<MP, 3>& p, const CycNum& u, const CycNum& w) {
  PPoint<CycNum> r;
  for (int i = 0; i < 3; ++i) r[i] = specialize_params(p[i], {u, w}).eval(std::vector<CycNum>{0, 0, 0});
  return r;
}

/// K_C = 2[0:1:0] + 2[0:0:1] (a line section through the two flexes at X = 0).
inline std::vector<std::pair<PPoint<CycNum>, long>> canonical_divisor() {
  return {{{CycNum(0), CycNum(1), CycNum(0)}, 2}, {{CycNum(0), CycNum(0), CycNum(1)}, 2}};
}

inline SmoothnessResult smooth_member(const CycNum& u, const CycNum& w) {
  return smooth_projective(specialize_params(curve(), {u, w}));
}

}  // namespace shadowkit::s3
