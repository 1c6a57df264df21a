#pragma once

// Linear independence of two points. A field automorphism sigma with
//   sigma(P) = -P, sigma(Q) = Q   (involution) or   sigma(P) = Q, sigma(Q) = P   (swap)
// turns any relation into torsion statements, so nontorsion certificates finish the job.
// Otherwise a sieve over reductions can only find relations, never rule them out.

#include <optional>
#include <string>
#include <vector>

#include "shadowkit/certify/torsion.hpp"

namespace shadowkit {

inline QWPoint conj_point(const QWPoint& P, int j) {
  if (P.inf) return P;
  return QWPoint::affine(P.x.conj(j), P.y.conj(j));
}

inline bool model_fixed_by(const QWModel& E, int j) {
  for (const CycNum* a : {&E.a1, &E.a2, &E.a3, &E.a4, &E.a6})
    if (a->conj(j) != *a) return false;
  return true;
}

struct SieveResult {
  bool dependent = false;
  long m = 0, n = 0;
  long bound = 0;
  std::vector<std::uint64_t> primes;
  long survivors = 0;  // candidates passing every prime
};

namespace detail {

inline FqPoint fq_comb(const FqCurve& E, long m, const FqPoint& P, long n, const FqPoint& Q) {
  return E.add(E.smul(mpz_class(m), P), E.smul(mpz_class(n), Q));
}

}  // namespace detail

/// Relations m P + n Q = O with |m|, |n| <= B, smallest |m| + |n| first, sign fixed so the
/// first nonzero coefficient is positive.
inline SieveResult dependence_sieve(const QWModel& E, const QWPoint& P, const QWPoint& Q, long B,
                                    const std::vector<std::uint64_t>& primes) {
  if (B < 1) throw Error("sieve bound must be at least 1");
  SieveResult r;
  r.bound = B;
  struct Red {
    FqCurve E;
    FqPoint P, Q;
  };
  std::vector<Red> reds;
  for (auto p : primes) {
    if (!detail::reduces_well(E, P, p) || !detail::reduces_well(E, Q, p)) continue;
    const FqContext* ctx = fq_context(p);
    reds.push_back({reduce_model(E, ctx), reduce_point(P, ctx), reduce_point(Q, ctx)});
    r.primes.push_back(p);
  }
  for (long s = 1; s <= 2 * B; ++s) {
    for (long m = std::max(0L, s - B); m <= std::min(s, B); ++m) {
      long an = s - m;
      std::vector<long> ns = an ? std::vector<long>{an, -an} : std::vector<long>{0};
      for (long n : ns) {
        if (m == 0 && n <= 0) continue;
        bool ok = true;
        for (const auto& red : reds)
          if (!detail::fq_comb(red.E, m, red.P, n, red.Q).inf) {
            ok = false;
            break;
          }
        if (!ok) continue;
        ++r.survivors;
        if (E.add(E.smul(m, P), E.smul(n, Q)).inf) {
          r.dependent = true;
          r.m = m;
          r.n = n;
          return r;
        }
      }
    }
  }
  return r;
}

enum class IndependenceStrategy { GaloisInvolution, GaloisSwap, Sieve };

inline std::string to_string(IndependenceStrategy s) {
  switch (s) {
    case IndependenceStrategy::GaloisInvolution:
      return "galois-involution";
    case IndependenceStrategy::GaloisSwap:
      return "galois-swap";
    default:
      return "sieve";
  }
}

struct IndependenceCertificate {
  IndependenceStrategy strategy = IndependenceStrategy::Sieve;
  int automorphism = 1;  // zeta_24 -> zeta_24^j
  bool swapped_roles = false;  // involution with sigma(Q) = -Q, sigma(P) = P
  std::vector<std::pair<std::string, TorsionCertificate>> subs;
  std::optional<SieveResult> sieve;
  bool independent = false;
  std::vector<std::string> transcript;
};

/// sigma(P) and sigma(Q) are recomputed here, never taken from the caller.
inline IndependenceCertificate independence_galois(const QWModel& E, const QWPoint& P, const QWPoint& Q, int j,
                                                   const std::vector<std::uint64_t>& pool, long sieve_bound = 20) {
  IndependenceCertificate c;
  c.automorphism = j;
  if (!model_fixed_by(E, j)) throw Error("automorphism " + std::to_string(j) + " moves the curve");
  QWPoint sP = conj_point(P, j), sQ = conj_point(Q, j);
  auto nontorsion = [&](const std::string& name, const QWPoint& X) {
    auto cert = is_nontorsion(E, X, pool);
    bool nt = !cert.is_torsion();
    c.subs.emplace_back(name, std::move(cert));
    return nt;
  };
  if ((sP == E.neg(P) && sQ == Q) || (sP == P && sQ == E.neg(Q))) {
    c.strategy = IndependenceStrategy::GaloisInvolution;
    c.swapped_roles = sP == P && sQ == E.neg(Q) && !(sP == E.neg(P) && sQ == Q);
    c.transcript.push_back("sigma_" + std::to_string(j) + " negates " + (c.swapped_roles ? "Q" : "P") + " and fixes " +
                           (c.swapped_roles ? "P" : "Q"));
    bool a = nontorsion("P", P), b = nontorsion("Q", Q);
    c.independent = a && b;
  } else if (sP == Q && sQ == P) {
    c.strategy = IndependenceStrategy::GaloisSwap;
    c.transcript.push_back("sigma_" + std::to_string(j) + " swaps P and Q");
    bool a = nontorsion("P+Q", E.add(P, Q)), b = nontorsion("P-Q", E.sub(P, Q));
    c.independent = a && b;
  } else {
    c.strategy = IndependenceStrategy::Sieve;
    c.transcript.push_back("no Galois pattern for sigma_" + std::to_string(j) + "; sieving");
    c.sieve = dependence_sieve(E, P, Q, sieve_bound, pool);
    c.independent = false;
  }
  return c;
}

inline bool recheck(const QWModel& E, const QWPoint& P, const QWPoint& Q, const IndependenceCertificate& c) {
  if (!model_fixed_by(E, c.automorphism)) return false;
  QWPoint sP = conj_point(P, c.automorphism), sQ = conj_point(Q, c.automorphism);
  auto sub_ok = [&](const std::string& name, const QWPoint& X) {
    for (const auto& [n, cert] : c.subs)
      if (n == name) return recheck(E, X, cert) && !cert.is_torsion();
    return false;
  };
  switch (c.strategy) {
    case IndependenceStrategy::GaloisInvolution: {
      bool pattern = c.swapped_roles ? (sP == P && sQ == E.neg(Q)) : (sP == E.neg(P) && sQ == Q);
      return pattern && c.independent == (sub_ok("P", P) && sub_ok("Q", Q));
    }
    case IndependenceStrategy::GaloisSwap:
      return sP == Q && sQ == P && c.independent == (sub_ok("P+Q", E.add(P, Q)) && sub_ok("P-Q", E.sub(P, Q)));
    default:
      if (c.independent || !c.sieve) return false;
      if (c.sieve->dependent) return E.add(E.smul(c.sieve->m, P), E.smul(c.sieve->n, Q)).inf;
      return true;
  }
}

}  // namespace shadowkit
