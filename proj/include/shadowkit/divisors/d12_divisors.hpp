#pragma once

// The divisors on E_t coming from the dihedral family: the two principal divisors used to
// simplify, the sections D1(t), D2(t) before and after simplification, and the remark divisor.
// The three Weierstrass points over the roots of h enter as one cluster, so nothing here
// needs the cube root c.

#include "shadowkit/divisors/quartic_divisors.hpp"
#include "shadowkit/elliptic/quartic.hpp"
#include "shadowkit/exactalg/parse.hpp"

namespace shadowkit::d12 {

using QD = QDivisor<CycNum>;
using QP = QPlace<CycNum>;

inline CycNum i4() { return CycNum::zeta_m(4); }

/// (-1, 2t(2 zeta_3 + 1)), image of (1/x = 0, y1 = zeta_3).
inline QP base_point_1(const CycNum& t) { return QP::at(CycNum(-1), CycNum(2) * t * (CycNum(2) * CycNum::zeta_m(3) + CycNum(1))); }
/// (1, -2 zeta_4), image of (x = 0, y1 = zeta_12).
inline QP base_point_2() { return QP::at(CycNum(1), CycNum(-2) * i4()); }
inline QP identity_place() { return QP::at(CycNum(2), CycNum(0)); }

/// Sum of the Weierstrass points (v_i, 0) over the roots of h.
inline QP h_cluster(const CycNum& t) { return QP::cluster(et_h(t), Poly<CycNum>(std::vector<CycNum>{}, "v")); }

/// (pi_E)_* K_{Y_t} = (-2, 4 zeta_4) + (-2, -4 zeta_4)
inline QD canonical_image() {
  return QD{{QP::at(CycNum(-2), CycNum(4) * i4()), 1}, {QP::at(CycNum(-2), CycNum(-4) * i4()), 1}};
}

/// (pi_E)_* of the sum of the A_i + B_i: each pair lands on one (v_i, 0).
inline QD ramification_psi_image(const CycNum& t) { return QD{{h_cluster(t), 2}}; }

inline CurveFunction<CycNum> first_function() {
  Poly<CycNum> vp2 = parse_poly("v+2", "v"), vm2 = parse_poly("v-2", "v");
  return CurveFunction<CycNum>::rational(vp2.pow(4), vm2.pow(2));
}
inline CurveFunction<CycNum> second_function() {
  return CurveFunction<CycNum>::rational(Poly<CycNum>(CycNum(1), "v"), parse_poly("v-2", "v").pow(3), 2);
}

/// 4(-2, 4 zeta_4) + 4(-2, -4 zeta_4) - 8(2, 0)
inline QD first_display() { return 4 * canonical_image() - QD{{identity_place(), 8}}; }
/// 2 sum (v_i, 0) - 6(2, 0)
inline QD second_display(const CycNum& t) { return QD{{h_cluster(t), 2}, {identity_place(), -6}}; }

/// 20 P - 4 (pi_E)_* K_Y - 2 (pi_E)_* sum(A_i + B_i)
inline QD section_expanded(const QP& base, const CycNum& t) {
  return QD{{base, 20}} - 4 * canonical_image() - 2 * ramification_psi_image(t);
}
inline QD section_reduced(const QP& base) { return QD{{base, 20}, {identity_place(), -20}}; }

inline QD D1_expanded(const CycNum& t) { return section_expanded(base_point_1(t), t); }
inline QD D2_expanded(const CycNum& t) { return section_expanded(base_point_2(), t); }
inline QD D1_reduced(const CycNum& t) { return section_reduced(base_point_1(t)); }
inline QD D2_reduced() { return section_reduced(base_point_2()); }

/// Same shape with 20 (identity) in place of 20 (1, -2 zeta_4); its class is O.
inline QD remark_divisor(const CycNum& t) { return section_expanded(identity_place(), t); }

}  // namespace shadowkit::d12
