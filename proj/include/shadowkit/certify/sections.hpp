#pragma once

// The concrete points the certificates are run on, moved to Weierstrass form.

#include "shadowkit/certify/torsion.hpp"
#include "shadowkit/divisors/d12_divisors.hpp"
#include "shadowkit/divisors/s3_divisors.hpp"

namespace shadowkit {

struct D12Sections {
  QuarticModel<CycNum> E;
  QWPoint D1, D2;
};

inline D12Sections d12_sections(const CycNum& t) {
  auto E = build_Et(t);
  QWPoint d1 = E.to_w(class_eval(E, d12::D1_reduced(t)));
  QWPoint d2 = E.to_w(class_eval(E, d12::D2_reduced()));
  return {std::move(E), d1, d2};
}

struct S3Sections {
  CubicModel<CycNum> E, Eprime;
  QWPoint P1, P2, Ptau;
};

/// Classes of the recomputed sections; they have degree 0, so group_sum is the class.
inline S3Sections s3_sections(const CycNum& u, const CycNum& w) {
  auto E = s3::target_model(s3::Quotient::Psi1, u, w);
  auto Ep = s3::target_model(s3::Quotient::PsiTau, u, w);
  QWPoint p1 = E.to_w(class_eval(E, s3::section(s3::Quotient::Psi1, u, w)));
  QWPoint p2 = E.to_w(class_eval(E, s3::section(s3::Quotient::Psi2, u, w)));
  QWPoint pt = Ep.to_w(class_eval(Ep, s3::section(s3::Quotient::PsiTau, u, w)));
  return {std::move(E), std::move(Ep), p1, p2, pt};
}

}  // namespace shadowkit
