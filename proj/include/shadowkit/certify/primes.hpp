#pragma once

// Witness-prime pool. Reduction is injective on torsion at odd primes prime to 24 with good
// reduction, so only those are admitted.

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/numtheory.hpp"

namespace shadowkit {

inline constexpr const char* kPrimePoolEnv = "SHADOWKIT_PRIMES";

/// Eight primes = 1 mod 24 (degree-1 residue fields), then 5, 7, 11, 13 (degree 2).
inline std::vector<std::uint64_t> builtin_prime_pool() {
  auto pool = nt::primes_1_mod_24(8);
  for (std::uint64_t p : {5, 7, 11, 13}) pool.push_back(p);
  return pool;
}

inline bool admissible_prime(std::uint64_t p) { return p > 3 && nt::is_prime(p); }

/// "73,97,193" -> {73, 97, 193}; rejects junk and inadmissible primes.
inline std::vector<std::uint64_t> parse_prime_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    if (tok.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad prime '" + tok + "'");
    std::uint64_t p = std::stoull(tok);
    if (!admissible_prime(p)) throw ParseError(tok + " is not a prime > 3");
    out.push_back(p);
  }
  if (out.empty()) throw ParseError("empty prime list");
  return out;
}

/// Environment override or the builtin pool.
inline std::vector<std::uint64_t> default_prime_pool() {
  if (const char* env = std::getenv(kPrimePoolEnv); env && *env) return parse_prime_list(env);
  return builtin_prime_pool();
}

}  // namespace shadowkit
