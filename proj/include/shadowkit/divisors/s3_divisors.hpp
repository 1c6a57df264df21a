#pragma once

// Sections of the two fibration cubics obtained by pushing 8(A + A') - 4 K_C forward along
// the quotient maps, at a fixed smooth fibre.

#include <string>

#include "shadowkit/divisors/divisor.hpp"
#include "shadowkit/elliptic/families.hpp"
#include "shadowkit/models/s3.hpp"

namespace shadowkit::s3 {

using PD = FormalDivisor<PPoint<CycNum>>;

enum class Quotient { Psi1, Psi2, PsiTau };

inline std::string quotient_name(Quotient q) {
  switch (q) {
    case Quotient::Psi1:
      return "psi1";
    case Quotient::Psi2:
      return "psi2";
    default:
      return "psi_tau";
  }
}

inline Map quotient_map(Quotient q) {
  switch (q) {
    case Quotient::Psi1:
      return psi(1);
    case Quotient::Psi2:
      return psi(2);
    default:
      return psi_tau();
  }
}

/// Push a divisor of the fibre forward along a specialized quotient map.
inline PD push(const PD& d, Quotient q, const CycNum& u, const CycNum& w, int order = 8) {
  MPoly<CycNum> F = specialize_params(curve(), {u, w});
  Map m = quotient_map(q).specialize({u, w});
  return pushforward<PPoint<CycNum>>(d, [&](const PPoint<CycNum>& p) { return apply_map(m, p, F, order); });
}

inline PD canonical_divisor_at() {
  PD k;
  for (const auto& [p, n] : canonical_divisor()) k.add(p, n);
  return k;
}

/// 8 psi_*(A + A') - 4 psi_*(K_C)
inline PD section(Quotient q, const CycNum& u, const CycNum& w) {
  PD src;
  src.add(specialize_point(point_A(), u, w), 8);
  src.add(specialize_point(point_A_prime(), u, w), 8);
  return push(src, q, u, w) - 4 * push(canonical_divisor_at(), q, u, w);
}

inline CubicModel<CycNum> target_model(Quotient q, const CycNum& u, const CycNum& w) {
  return q == Quotient::PsiTau ? build_Eprime_S3(u, w) : build_E_S3(u, w);
}

}  // namespace shadowkit::s3
