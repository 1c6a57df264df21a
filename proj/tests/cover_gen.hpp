#pragma once

// Random symbolic covers for the shadow property runs. Each target fibre gets a branch
// profile (a partition of d); Galois covers use one ramification index per fibre.

#include <random>
#include <string>
#include <vector>

#include "shadowkit/shadow/cover.hpp"

namespace covergen {

struct Options {
  bool galois = false;
  int fixed_g_tgt = -1;  // -1: random in [0, 3]
  bool etale = false;
};

inline std::vector<int> random_partition(std::mt19937& rng, int d) {
  std::vector<int> parts;
  int left = d;
  while (left > 0) {
    int e = std::uniform_int_distribution<int>(1, left)(rng);
    parts.push_back(e);
    left -= e;
  }
  return parts;
}

inline std::vector<int> uniform_profile(std::mt19937& rng, int d) {
  std::vector<int> divs;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) divs.push_back(e);
  int e = divs[std::uniform_int_distribution<size_t>(0, divs.size() - 1)(rng)];
  return std::vector<int>(d / e, e);
}

inline shadowkit::SymbolicCover random_cover(std::mt19937& rng, const Options& opt = {}) {
  using shadowkit::LabelDivisor;
  for (;;) {
    shadowkit::SymbolicCover c;
    c.d = std::uniform_int_distribution<int>(2, 6)(rng);
    c.g_tgt = opt.fixed_g_tgt >= 0 ? opt.fixed_g_tgt : std::uniform_int_distribution<int>(0, 3)(rng);
    c.galois = opt.galois;
    int fibres = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int i = 0; i < fibres; ++i) {
      std::string q = "q" + std::to_string(i);
      auto prof = opt.etale ? std::vector<int>(c.d, 1) : opt.galois ? uniform_profile(rng, c.d) : random_partition(rng, c.d);
      LabelDivisor fib;
      for (size_t j = 0; j < prof.size(); ++j) {
        std::string p = "p" + std::to_string(i) + "_" + std::to_string(j);
        c.push[p] = q;
        fib.add(p, prof[j]);
        if (prof[j] > 1) c.R.add(p, prof[j] - 1);
      }
      c.pull[q] = fib;
    }
    long twice = static_cast<long>(c.d) * (2L * c.g_tgt - 2) + c.deg_R();
    if (twice % 2 != 0 || twice < -2) continue;
    c.g_src = static_cast<int>(twice / 2 + 1);
    c.name = "random(d=" + std::to_string(c.d) + ",g'=" + std::to_string(c.g_tgt) + ")";
    c.k_src_name = "K_C";
    c.k_tgt_name = "K_C'";
    return c;
  }
}

}  // namespace covergen
