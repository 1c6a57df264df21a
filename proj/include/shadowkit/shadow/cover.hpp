#pragma once

// Formal divisor algebra for a separable cover phi: C -> C'. Points are labels; the canonical
// classes stay symbols. A source expression is  pts + a K_src + b phi^*(K_tgt),
// a target expression is  pts + c K_tgt.

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "shadowkit/divisors/divisor.hpp"
#include "shadowkit/errors.hpp"

namespace shadowkit {

using LabelDivisor = FormalDivisor<std::string>;

struct CoverError : Error {
  using Error::Error;
};

struct SourceExpr {
  LabelDivisor pts;
  long k_src = 0;
  long k_tgt_pull = 0;

  friend bool operator==(const SourceExpr& a, const SourceExpr& b) {
    return a.pts == b.pts && a.k_src == b.k_src && a.k_tgt_pull == b.k_tgt_pull;
  }
  friend SourceExpr operator+(SourceExpr a, const SourceExpr& b) {
    a.pts += b.pts;
    a.k_src += b.k_src;
    a.k_tgt_pull += b.k_tgt_pull;
    return a;
  }
  friend SourceExpr operator*(long k, const SourceExpr& a) { return {k * a.pts, k * a.k_src, k * a.k_tgt_pull}; }
  bool is_zero() const { return pts.empty() && k_src == 0 && k_tgt_pull == 0; }
};

struct TargetExpr {
  LabelDivisor pts;
  long k_tgt = 0;

  friend bool operator==(const TargetExpr& a, const TargetExpr& b) { return a.pts == b.pts && a.k_tgt == b.k_tgt; }
  bool is_zero() const { return pts.empty() && k_tgt == 0; }
};

struct SymbolicCover {
  std::string name;
  int d = 1;
  int g_src = 0, g_tgt = 0;
  LabelDivisor R;
  std::map<std::string, std::string> push;
  std::map<std::string, LabelDivisor> pull;
  bool galois = false;
  bool consistency = true;
  std::string k_src_name = "K_src", k_tgt_name = "K_tgt";
  std::optional<LabelDivisor> k_src_expansion, k_tgt_expansion;

  long deg_R() const { return R.degree(); }

  /// Table consistency; Riemann-Hurwitz only when the flag asks for it.
  void validate() const {
    if (d < 1) throw CoverError(name + ": degree must be positive");
    for (const auto& [p, n] : R.terms())
      if (n < 0) throw CoverError(name + ": ramification divisor must be effective");
    for (const auto& [t, fibre] : pull) {
      if (fibre.degree() != d)
        throw CoverError(name + ": pullback of " + t + " has degree " + std::to_string(fibre.degree()));
      for (const auto& [s, n] : fibre.terms()) {
        auto it = push.find(s);
        if (it == push.end() || it->second != t) throw CoverError(name + ": " + s + " does not map to " + t);
      }
    }
    if (consistency && 2L * g_src - 2 != static_cast<long>(d) * (2L * g_tgt - 2) + deg_R())
      throw CoverError(name + ": Riemann-Hurwitz fails for the declared genera");
    if (k_src_expansion && k_src_expansion->degree() != 2L * g_src - 2)
      throw CoverError(name + ": K_src expansion has the wrong degree");
    if (k_tgt_expansion && k_tgt_expansion->degree() != 2L * g_tgt - 2)
      throw CoverError(name + ": K_tgt expansion has the wrong degree");
  }

  LabelDivisor push_points(const LabelDivisor& D) const {
    LabelDivisor r;
    for (const auto& [p, n] : D.terms()) {
      auto it = push.find(p);
      if (it == push.end()) throw CoverError(name + ": unmapped label " + p);
      r.add(it->second, n);
    }
    return r;
  }

  LabelDivisor pull_points(const LabelDivisor& T) const {
    LabelDivisor r;
    for (const auto& [p, n] : T.terms()) {
      auto it = pull.find(p);
      if (it == pull.end()) throw CoverError(name + ": missing pullback expansion for " + p);
      r += n * it->second;
    }
    return r;
  }

  long source_degree(const SourceExpr& e) const {
    return e.pts.degree() + e.k_src * (2L * g_src - 2) + e.k_tgt_pull * d * (2L * g_tgt - 2);
  }
  long target_degree(const TargetExpr& e) const { return e.pts.degree() + e.k_tgt * (2L * g_tgt - 2); }

  std::string show(const SourceExpr& e) const {
    std::string s = e.pts.to_string();
    if (e.k_src) s += (e.k_src < 0 ? " - " : " + ") + std::to_string(std::labs(e.k_src)) + "*" + k_src_name;
    if (e.k_tgt_pull)
      s += (e.k_tgt_pull < 0 ? " - " : " + ") + std::to_string(std::labs(e.k_tgt_pull)) + "*pullback(" + k_tgt_name + ")";
    return s;
  }
  std::string show(const TargetExpr& e) const {
    std::string s = e.pts.to_string();
    if (e.k_tgt) s += (e.k_tgt < 0 ? " - " : " + ") + std::to_string(std::labs(e.k_tgt)) + "*" + k_tgt_name;
    return s;
  }
};

enum class ShadowClass { IdenticallyZero, PullbackClass, General };

inline std::string to_string(ShadowClass c) {
  switch (c) {
    case ShadowClass::IdenticallyZero:
      return "identically-zero";
    case ShadowClass::PullbackClass:
      return "pullback-class";
    default:
      return "general";
  }
}

struct ShadowResult {
  SourceExpr div;
  ShadowClass cls = ShadowClass::General;
  std::vector<std::string> steps;
  // (2g-2)R - deg(R) K_src, filled for Galois covers once it is checked against div
  std::optional<SourceExpr> galois_form;
};

/// K_src -> phi^*(K_tgt) + R. Never applied silently: callers log it.
inline SourceExpr rewrite_k_src(const SymbolicCover& c, SourceExpr e) {
  if (e.k_src == 0) return e;
  e.pts += e.k_src * c.R;
  e.k_tgt_pull += e.k_src;
  e.k_src = 0;
  return e;
}

namespace detail {

/// T with pts = phi^*(T) when the points are a pullback, using the disjoint fibre table.
inline std::optional<LabelDivisor> as_pullback(const SymbolicCover& c, const LabelDivisor& pts) {
  LabelDivisor rest = pts, T;
  while (!rest.empty()) {
    const auto [p, n] = *rest.terms().begin();
    auto it = c.push.find(p);
    if (it == c.push.end()) return std::nullopt;
    auto fib = c.pull.find(it->second);
    if (fib == c.pull.end()) return std::nullopt;
    long e = fib->second.multiplicity(p);
    if (e == 0 || n % e != 0) return std::nullopt;
    long k = n / e;
    T.add(it->second, k);
    rest -= k * fib->second;
  }
  return T;
}

}  // namespace detail

inline SourceExpr galois_form(const SymbolicCover& c);

/// D = d(2g'-2) R - deg(R) phi^*(K') + 2(d R - phi^* phi_* R), with degree 0 asserted.
inline ShadowResult shadow(const SymbolicCover& c) {
  c.validate();
  ShadowResult r;
  const long d = c.d, gt = c.g_tgt, degR = c.deg_R();
  LabelDivisor pp = c.pull_points(c.push_points(c.R));
  r.div.pts = (d * (2 * gt - 2)) * c.R + (2 * d) * c.R - 2 * pp;
  r.div.k_tgt_pull = -degR;
  r.steps.push_back("general formula: " + c.show(r.div));
  if (gt == 1) {
    r.div.k_tgt_pull = 0;
    r.steps.push_back("genus-1 target: " + c.k_tgt_name + " is trivial");
    SourceExpr branch{(2 * d) * c.R - 2 * pp, 0, 0};
    if (!(branch == r.div)) throw Error("internal: genus-1 branch disagrees with the general formula");
    r.steps.push_back("genus-1 branch 2dR - 2 phi^*phi_*R agrees");
  }
  if (c.source_degree(r.div) != 0) throw Error("internal: shadow has degree " + std::to_string(c.source_degree(r.div)));
  if (r.div.is_zero()) {
    r.cls = ShadowClass::IdenticallyZero;
  } else if (gt == 0 && detail::as_pullback(c, r.div.pts)) {
    r.cls = ShadowClass::PullbackClass;
    r.steps.push_back("pullback from a genus-0 target: trivial class");
  }
  if (c.galois && pp == static_cast<long>(d) * c.R) {
    SourceExpr gf = galois_form(c);
    SourceExpr via = rewrite_k_src(c, gf);
    if (gt == 1) via.k_tgt_pull = 0;
    if (!(via == r.div)) throw CoverError(c.name + ": Galois form disagrees after rewriting K_src");
    r.steps.push_back("Galois form " + c.show(gf) + " agrees after rewriting " + c.k_src_name);
    r.galois_form = gf;
  }
  return r;
}

/// phi_* with the Riemann-Hurwitz rewriting of K_src first and phi_* phi^* = d.
inline TargetExpr push_along(const SourceExpr& D, const SymbolicCover& c, std::vector<std::string>* log = nullptr) {
  SourceExpr e = D;
  if (e.k_src != 0) {
    e = rewrite_k_src(c, e);
    if (log) log->push_back("rewrote " + c.k_src_name + " as pullback(" + c.k_tgt_name + ") + R");
  }
  TargetExpr t;
  t.pts = c.push_points(e.pts);
  t.k_tgt = static_cast<long>(c.d) * e.k_tgt_pull;
  return t;
}

struct PushforwardResult {
  TargetExpr closed;
  TargetExpr term_by_term;
  bool agree = false;
  std::vector<std::string> steps;
};

/// d((2g'-2) phi_*R - deg(R) K'), recomputed by pushing the shadow term by term.
inline PushforwardResult shadow_pushforward(const SymbolicCover& c) {
  PushforwardResult r;
  auto s = shadow(c);
  r.steps = s.steps;
  const long d = c.d, gt = c.g_tgt;
  r.closed.pts = (d * (2 * gt - 2)) * c.push_points(c.R);
  r.closed.k_tgt = gt == 1 ? 0 : -d * c.deg_R();
  r.term_by_term = push_along(s.div, c, &r.steps);
  // phi_* phi^* phi_* R must equal d phi_* R through the tables
  LabelDivisor pr = c.push_points(c.R);
  if (c.push_points(c.pull_points(pr)) != static_cast<long>(d) * pr) throw CoverError(c.name + ": push o pull is not multiplication by d");
  r.agree = r.closed == r.term_by_term;
  if (c.target_degree(r.closed) != 0) throw Error("internal: pushed shadow has nonzero degree");
  return r;
}

/// (2g-2) R - deg(R) K_src, the form valid for Galois covers.
inline SourceExpr galois_form(const SymbolicCover& c) { return SourceExpr{(2L * c.g_src - 2) * c.R, -c.deg_R(), 0}; }

struct IdentityCheck {
  bool holds = false;
  std::string witness;
};

/// d(2g'-2)R - deg(R) phi^*K' = (2g-2)R - deg(R) K_src after K_src -> phi^*K' + R.
inline IdentityCheck galois_identity_check(const SymbolicCover& c) {
  IdentityCheck r;
  LabelDivisor pp = c.pull_points(c.push_points(c.R));
  LabelDivisor dR = static_cast<long>(c.d) * c.R;
  if (pp != dR) {
    r.witness = "pullback(push(R)) - dR = " + (pp - dR).to_string();
    return r;
  }
  SourceExpr lhs{(static_cast<long>(c.d) * (2L * c.g_tgt - 2)) * c.R, 0, -c.deg_R()};
  SourceExpr rhs = rewrite_k_src(c, galois_form(c));
  if (!(lhs == rhs)) {
    r.witness = "lhs " + c.show(lhs) + " vs rhs " + c.show(rhs);
    return r;
  }
  r.holds = true;
  return r;
}

inline bool rh_check(const SymbolicCover& c) {
  return 2L * c.g_src - 2 == static_cast<long>(c.d) * (2L * c.g_tgt - 2) + c.deg_R();
}

// ---------- fixture format

inline LabelDivisor label_divisor_from_json(const nlohmann::json& j) {
  LabelDivisor d;
  for (const auto& [k, v] : j.items()) d.add(k, v.get<long>());
  return d;
}

inline SymbolicCover cover_from_json(const nlohmann::json& j) {
  SymbolicCover c;
  try {
    c.name = j.value("name", std::string("cover"));
    c.d = j.at("degree").get<int>();
    c.g_src = j.at("genus_src").get<int>();
    c.g_tgt = j.at("genus_tgt").get<int>();
    const nlohmann::json ram = j.value("ramification", nlohmann::json::object());
    c.R = label_divisor_from_json(ram);
    for (const auto& [k, v] : j.at("push").items()) c.push[k] = v.get<std::string>();
    const nlohmann::json pull = j.value("pull", nlohmann::json::object());
    for (const auto& [k, v] : pull.items()) c.pull[k] = label_divisor_from_json(v);
    c.galois = j.value("galois", false);
    c.consistency = j.value("consistency", true);
    c.k_src_name = j.value("K_src", std::string("K_src"));
    c.k_tgt_name = j.value("K_tgt", std::string("K_tgt"));
    if (j.contains("K_src_expansion")) c.k_src_expansion = label_divisor_from_json(j["K_src_expansion"]);
    if (j.contains("K_tgt_expansion")) c.k_tgt_expansion = label_divisor_from_json(j["K_tgt_expansion"]);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cover fixture: ") + e.what());
  }
  return c;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline SymbolicCover load_cover(const std::string& path) { return cover_from_json(load_json_file(path)); }

}  // namespace shadowkit
