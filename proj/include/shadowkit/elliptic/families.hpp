#pragma once

// The elliptic fibrations attached to the two explicit families.

#include <string>
#include <vector>

#include "shadowkit/elliptic/cubic.hpp"
#include "shadowkit/elliptic/quartic.hpp"
#include "shadowkit/exactalg/cyclotomic.hpp"
#include "shadowkit/exactalg/mpoly.hpp"
#include "shadowkit/exactalg/ratfn.hpp"

namespace shadowkit {

inline const std::vector<std::string>& abc_vars() {
  static const std::vector<std::string> v{"a", "b", "c"};
  return v;
}

/// w^2 (a^3 - 3abc + b^2 c) + (u^3 + w^4) b c^2 + w^2 u^3 c^3
template <class K>
MPoly<K> s3_quotient_form(const K& u, const K& w) {
  using MP = MPoly<K>;
  const auto& v = abc_vars();
  MP a = MP::variable(v, 0), b = MP::variable(v, 1), c = MP::variable(v, 2);
  K w2 = w * w, u3 = u * u * u;
  return w2 * (a * a * a - K(3) * (a * b * c) + b * b * c) + (u3 + w2 * w2) * (b * c * c) + (w2 * u3) * (c * c * c);
}

/// w^2 (a^2 c + b^3 + a b^2) + (u^3 + w^4) abc + w^2 u^3 a c^2
template <class K>
MPoly<K> s3_prime_form(const K& u, const K& w) {
  using MP = MPoly<K>;
  const auto& v = abc_vars();
  MP a = MP::variable(v, 0), b = MP::variable(v, 1), c = MP::variable(v, 2);
  K w2 = w * w, u3 = u * u * u;
  return w2 * (a * a * c + b * b * b + a * b * b) + (u3 + w2 * w2) * (a * b * c) + (w2 * u3) * (a * c * c);
}

template <class K>
CubicModel<K> build_E_S3(const K& u, const K& w) {
  if (shadowkit::is_zero(w)) throw ExcludedParameter("w must be nonzero");
  return CubicModel<K>(s3_quotient_form(u, w), PPoint<K>{K(0), K(1), K(0)});
}

template <class K>
CubicModel<K> build_Eprime_S3(const K& u, const K& w) {
  if (shadowkit::is_zero(w)) throw ExcludedParameter("w must be nonzero");
  return CubicModel<K>(s3_prime_form(u, w), PPoint<K>{K(1), K(0), K(0)});
}

using CycFn = RatFn<CycNum>;

/// t = (c^3 - 1)/(c^3 + 1) as a function of the Kummer parameter c.
inline CycFn kummer_t() {
  CycFn c = CycFn::variable("c");
  return (c.pow(3) - CycFn(1)) / (c.pow(3) + CycFn(1));
}

/// v_i = zeta_3^i c + zeta_3^(-i) / c, the roots of h over Q(zeta_3)(c).
inline CycFn two_torsion_root(int i) {
  CycFn c = CycFn::variable("c");
  CycNum z = CycNum::zeta_m(3);
  CycNum zi(1), zmi(1);
  for (int k = 0; k < ((i % 3) + 3) % 3; ++k) {
    zi = zi * z;
    zmi = zmi * z * z;
  }
  return CycFn(zi, "c") * c + CycFn(zmi, "c") / c;
}

/// h(v) with t = (c^3 - 1)/(c^3 + 1), as a function of c.
inline CycFn h_residual(const CycFn& v) {
  CycFn t = kummer_t();
  CycFn v3 = v.pow(3);
  return (v3 - CycFn(3) * v + CycFn(2)) * t * t - (v3 - CycFn(3) * v - CycFn(2));
}

/// h(v_i) vanishes identically for i = 0, 1, 2.
inline bool two_torsion_roots_check() {
  for (int i = 0; i < 3; ++i)
    if (!h_residual(two_torsion_root(i)).is_zero()) return false;
  return true;
}

}  // namespace shadowkit
