#pragma once

// Word-size number theory used by the finite-field and certificate layers.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace shadowkit::nt {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Prime factorization by trial division; inputs here are group orders of a few thousand.
inline std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

/// Multiplicative order of p modulo m (gcd(p, m) = 1).
inline int mult_order(std::uint64_t p, std::uint64_t m) {
  std::uint64_t x = p % m;
  int k = 1;
  while (x != 1 % m) {
    x = mulmod(x, p, m);
    ++k;
  }
  return k;
}

/// Primes p > after with p = 1 (mod 24), in increasing order.
inline std::vector<std::uint64_t> primes_1_mod_24(std::size_t count, std::uint64_t after = 24) {
  std::vector<std::uint64_t> out;
  std::uint64_t n = after + 1;
  while (n % 24 != 1) ++n;
  for (; out.size() < count; n += 24) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

/// Signed squarefree part of a nonzero integer: n = s * m^2 with s squarefree.
/// Returns nullopt if a cofactor above the trial-division bound cannot be classified.
inline std::optional<mpz_class> squarefree_part(const mpz_class& n) {
  if (n == 0) return std::nullopt;
  mpz_class rest = abs(n);
  mpz_class part = sgn(n) < 0 ? -1 : 1;
  const unsigned long bound = 1000000;
  for (unsigned long p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(p) * p > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e & 1) part *= p;
  }
  if (rest == 1) return part;
  if (mpz_perfect_square_p(rest.get_mpz_t())) return part;
  // rest has no prime factor <= bound; below bound^3 it has at most two prime factors.
  mpz_class cube = mpz_class(bound) * bound * bound;
  if (rest < cube || mpz_probab_prime_p(rest.get_mpz_t(), 30)) return part * rest;
  return std::nullopt;
}

}  // namespace shadowkit::nt
