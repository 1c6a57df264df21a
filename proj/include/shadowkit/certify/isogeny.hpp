#pragma once

// Geometric non-isogeny from one prime: ordinary reductions that are isogenous over the
// algebraic closure have the same imaginary quadratic field Q(sqrt(a^2 - 4q)). That field does
// not change under base extension, so curves counted over different residue degrees compare.

#include <cstdint>
#include <string>
#include <vector>

#include "shadowkit/certify/torsion.hpp"

namespace shadowkit {

struct BudgetExhausted : Error {
  using Error::Error;
};

struct CurveReductionData {
  int degree = 1;  // F_{p^degree} used for the count
  std::uint64_t count = 0;
  long trace = 0;
  bool ordinary = false;
  mpz_class disc_squarefree;
};

struct NonIsogenyCertificate {
  std::uint64_t p = 0;
  CurveReductionData first, second;
  std::vector<std::string> transcript;
};

namespace detail {

inline CurveReductionData reduction_data(const QWModel& E, std::uint64_t p) {
  const FqContext* ctx = fq_context(p);
  FqCurve Ep = reduce_model(E, ctx);
  int degree = defined_over_prime_field(Ep) ? 1 : ctx->k;
  CurveReductionData d;
  d.degree = degree;
  d.count = count_points(Ep, degree);
  QuadField qf = ordinary_quadfield(Ep);
  d.trace = qf.trace;
  d.ordinary = qf.ordinary;
  d.disc_squarefree = qf.disc_squarefree;
  return d;
}

}  // namespace detail

/// First prime of the budget (in order) that separates the two curves.
inline NonIsogenyCertificate nonisogeny_geometric(const QWModel& E1, const QWModel& E2, const std::vector<std::uint64_t>& primes) {
  NonIsogenyCertificate c;
  for (auto p : primes) {
    if (!admissible_prime(p)) continue;
    CurveReductionData a, b;
    try {
      a = detail::reduction_data(E1, p);
      b = detail::reduction_data(E2, p);
    } catch (const BadReduction&) {
      c.transcript.push_back("skip " + std::to_string(p) + ": bad reduction");
      continue;
    }
    if (!a.ordinary || !b.ordinary) {
      c.transcript.push_back("skip " + std::to_string(p) + ": supersingular reduction");
      continue;
    }
    if (a.disc_squarefree == b.disc_squarefree) {
      c.transcript.push_back("skip " + std::to_string(p) + ": same field Q(sqrt(" + a.disc_squarefree.get_str() + "))");
      continue;
    }
    c.p = p;
    c.first = a;
    c.second = b;
    c.transcript.push_back("p = " + std::to_string(p) + ": Q(sqrt(" + a.disc_squarefree.get_str() + ")) vs Q(sqrt(" +
                           b.disc_squarefree.get_str() + "))");
    return c;
  }
  throw BudgetExhausted("no prime in the budget separates the curves");
}

/// Recount both curves at the witness prime.
inline bool recheck(const QWModel& E1, const QWModel& E2, const NonIsogenyCertificate& c) {
  if (c.p == 0) return false;
  auto a = detail::reduction_data(E1, c.p), b = detail::reduction_data(E2, c.p);
  auto same = [](const CurveReductionData& x, const CurveReductionData& y) {
    return x.degree == y.degree && x.count == y.count && x.trace == y.trace && x.ordinary == y.ordinary &&
           x.disc_squarefree == y.disc_squarefree;
  };
  return same(a, c.first) && same(b, c.second) && a.ordinary && b.ordinary && a.disc_squarefree != b.disc_squarefree;
}

}  // namespace shadowkit
