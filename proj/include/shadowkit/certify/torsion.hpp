#pragma once

// Torsion / nontorsion certificates over Q(zeta_24).
//
// N0 = lcm of the reduction orders at two admissible primes bounds the order of any torsion
// point. "N0 P != O" is then shown either by exact arithmetic (small N0, or when P turns out
// torsion) or by a third prime r with N0 * (P mod r) != O: reduction is a homomorphism, so
// N0 P = O would reduce to O.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shadowkit/certify/primes.hpp"
#include "shadowkit/elliptic/weierstrass.hpp"

namespace shadowkit {

using QWModel = WeierstrassModel<CycNum>;
using QWPoint = WPoint<CycNum>;

struct PrimePrecondition : Error {
  using Error::Error;
};

/// Not enough usable primes in the pool for a certificate.
struct InsufficientPrimes : Error {
  using Error::Error;
};

struct Inconclusive : Error {
  using Error::Error;
};

struct ReductionWitness {
  std::uint64_t p = 0;
  int degree = 1;            // residue field F_{p^degree}
  std::uint64_t group_order = 0;
  std::uint64_t point_order = 0;
};

enum class TorsionVerdict { Torsion, Nontorsion };

struct TorsionCertificate {
  TorsionVerdict verdict = TorsionVerdict::Nontorsion;
  std::uint64_t order = 0;   // when torsion
  std::uint64_t bound = 0;   // N0
  std::vector<ReductionWitness> witnesses;
  std::string method;        // "exact" or "separating-prime"
  std::optional<ReductionWitness> separating;
  std::vector<std::string> transcript;

  bool is_torsion() const { return verdict == TorsionVerdict::Torsion; }
};

inline std::uint64_t reduction_order_witness(const QWModel& E, const QWPoint& P, std::uint64_t p, ReductionWitness* w) {
  if (!admissible_prime(p) || 24 % p == 0) throw PrimePrecondition(std::to_string(p) + " is not an odd prime prime to 24");
  const FqContext* ctx = fq_context(p);
  FqCurve Ep = reduce_model(E, ctx);
  FqPoint Pp = reduce_point(P, ctx);
  std::uint64_t N = count_points(Ep);
  std::uint64_t n = order_from_multiple(Ep, Pp, N);
  if (N % n != 0) throw Error("internal: reduced order does not divide the group order");
  if (w) *w = ReductionWitness{p, ctx->k, N, n};
  return n;
}

/// Exact order of P mod p; throws BadReduction when E or P does not reduce.
inline std::uint64_t reduction_order(const QWModel& E, const QWPoint& P, std::uint64_t p) {
  return reduction_order_witness(E, P, p, nullptr);
}

inline std::uint64_t torsion_bound(const QWModel& E, const QWPoint& P, std::uint64_t p, std::uint64_t q,
                                   std::vector<ReductionWitness>* ws = nullptr) {
  if (p == q) throw PrimePrecondition("torsion bound needs two distinct primes");
  ReductionWitness a, b;
  std::uint64_t np = reduction_order_witness(E, P, p, &a);
  std::uint64_t nq = reduction_order_witness(E, P, q, &b);
  if (ws) *ws = {a, b};
  return nt::lcm(np, nq);
}

namespace detail {

inline bool reduces_well(const QWModel& E, const QWPoint& P, std::uint64_t p) {
  try {
    reduction_order(E, P, p);
    return true;
  } catch (const BadReduction&) {
    return false;
  } catch (const NotIntegral&) {
    return false;
  }
}

/// Smallest n | N with n P = O, exactly.
inline std::uint64_t exact_order_dividing(const QWModel& E, const QWPoint& P, std::uint64_t N) {
  return order_from_multiple(E, P, N);
}

}  // namespace detail

struct TorsionOptions {
  std::uint64_t exact_limit = 24;      // exact smul(N0) below this
  std::uint64_t exact_fallback = 5000; // exact smul(N0) when no prime separates
};

inline TorsionCertificate is_nontorsion(const QWModel& E, const QWPoint& P, const std::vector<std::uint64_t>& pool,
                                        const TorsionOptions& opt = {}) {
  TorsionCertificate c;
  if (P.inf) {
    c.verdict = TorsionVerdict::Torsion;
    c.order = c.bound = 1;
    c.method = "exact";
    c.transcript.push_back("point is O");
    return c;
  }
  std::vector<std::uint64_t> good;
  for (auto p : pool) {
    if (std::find(good.begin(), good.end(), p) != good.end()) continue;
    if (detail::reduces_well(E, P, p)) good.push_back(p);
    else c.transcript.push_back("skip " + std::to_string(p) + ": bad reduction");
  }
  if (good.size() < 2) throw InsufficientPrimes("torsion bound needs two distinct good primes, pool has " + std::to_string(good.size()));
  c.bound = torsion_bound(E, P, good[0], good[1], &c.witnesses);
  for (const auto& w : c.witnesses)
    c.transcript.push_back("order mod " + std::to_string(w.p) + " is " + std::to_string(w.point_order) + " (#E = " +
                           std::to_string(w.group_order) + ")");
  c.transcript.push_back("N0 = " + std::to_string(c.bound));
  mpz_class N0(static_cast<unsigned long>(c.bound));

  auto exact = [&]() {
    c.method = "exact";
    QWPoint R = E.smul(N0, P);
    if (R.inf) {
      c.verdict = TorsionVerdict::Torsion;
      c.order = detail::exact_order_dividing(E, P, c.bound);
      c.transcript.push_back("exact: N0 P = O, order " + std::to_string(c.order));
    } else {
      c.verdict = TorsionVerdict::Nontorsion;
      c.transcript.push_back("exact: N0 P != O");
    }
  };

  if (c.bound <= opt.exact_limit) {
    exact();
    return c;
  }
  for (std::size_t i = 2; i < good.size(); ++i) {
    const FqContext* ctx = fq_context(good[i]);
    FqCurve Er = reduce_model(E, ctx);
    FqPoint Pr = reduce_point(P, ctx);
    if (!Er.smul(N0, Pr).inf) {
      ReductionWitness w;
      reduction_order_witness(E, P, good[i], &w);
      c.verdict = TorsionVerdict::Nontorsion;
      c.method = "separating-prime";
      c.separating = w;
      c.transcript.push_back("N0 P mod " + std::to_string(good[i]) + " != O (order there " +
                             std::to_string(w.point_order) + ")");
      return c;
    }
  }
  if (c.bound > opt.exact_fallback) throw Inconclusive("no separating prime and N0 too large for exact check");
  exact();
  return c;
}

inline TorsionCertificate is_nontorsion(const QWModel& E, const QWPoint& P) { return is_nontorsion(E, P, default_prime_pool()); }

/// Recompute every recorded number; true when the certificate stands.
inline bool recheck(const QWModel& E, const QWPoint& P, const TorsionCertificate& c) {
  if (P.inf) return c.is_torsion() && c.order == 1;
  if (c.witnesses.size() != 2) return false;
  for (const auto& w : c.witnesses) {
    ReductionWitness r;
    reduction_order_witness(E, P, w.p, &r);
    if (r.point_order != w.point_order || r.group_order != w.group_order || r.degree != w.degree) return false;
  }
  if (c.bound != nt::lcm(c.witnesses[0].point_order, c.witnesses[1].point_order)) return false;
  mpz_class N0(static_cast<unsigned long>(c.bound));
  if (c.method == "separating-prime") {
    if (c.is_torsion() || !c.separating) return false;
    if (c.separating->p == c.witnesses[0].p || c.separating->p == c.witnesses[1].p) return false;
    const FqContext* ctx = fq_context(c.separating->p);
    return !reduce_model(E, ctx).smul(N0, reduce_point(P, ctx)).inf;
  }
  if (c.method != "exact") return false;
  if (!c.is_torsion()) return !E.smul(N0, P).inf;
  if (c.bound % c.order != 0 || !E.smul(mpz_class(static_cast<unsigned long>(c.order)), P).inf) return false;
  return detail::exact_order_dividing(E, P, c.order) == c.order;
}

}  // namespace shadowkit
