#pragma once

// Simultaneous-torsion exclusion on the Legendre side. The sections' v-coordinates are moved by
// the Moebius map 2 -> inf, v1 -> 0, v2 -> 1; the images alpha, beta satisfy F(alpha, beta) = 0,
// and F must divide no polynomial of the external list.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "shadowkit/elliptic/families.hpp"
#include "shadowkit/exactalg/mpoly.hpp"
#include "shadowkit/exactalg/parse.hpp"
#include "shadowkit/exactalg/poly.hpp"
#include "shadowkit/exactalg/finite_field.hpp"

namespace shadowkit {

using BiPoly = MPoly<CycNum>;

inline const std::vector<std::string>& ab_vars() {
  static const std::vector<std::string> v{"a", "b"};
  return v;
}

/// F(a,b) = 2ab(a - 3b)^2 - (a - 3b)(a^2 - 6ab - 3b^2) + 8b^2
inline BiPoly stoll_relation() {
  return parse_mpoly("2*a*b*(a-3*b)^2 - (a-3*b)*(a^2-6*a*b-3*b^2) + 8*b^2", ab_vars());
}

/// The Moebius map on the v-line with 2 -> inf, v1 -> 0, v2 -> 1, over Q(zeta_3)(c).
inline CycFn legendre_map(const CycFn& v) {
  CycFn v1 = two_torsion_root(1), v2 = two_torsion_root(2);
  return (v - v1) * (v2 - CycFn(2)) / ((v - CycFn(2)) * (v2 - v1));
}

inline CycFn stoll_alpha() { return legendre_map(CycFn(1)); }
inline CycFn stoll_beta() { return legendre_map(CycFn(-1)); }

/// The closed forms quoted for alpha = psi(1) and beta = psi(-1).
inline CycFn stoll_alpha_closed() {
  CycFn c = CycFn::variable("c");
  CycFn z(CycNum::zeta_m(3), "c"), z2(CycNum::zeta_m(3) * CycNum::zeta_m(3), "c");
  return (c + z) * (c - z).pow(2) / ((z2 - z) * c * (c - CycFn(1)));
}
inline CycFn stoll_beta_closed() {
  CycFn c = CycFn::variable("c");
  CycFn z(CycNum::zeta_m(3), "c");
  return (CycFn(2) * z + CycFn(1)) * (c - z).pow(3) / (CycFn(9) * c * (c + CycFn(1)));
}

inline CycFn eval_bivariate(const BiPoly& F, const CycFn& a, const CycFn& b) {
  auto Fc = F.map([](const CycNum& k) { return CycFn(k, "c"); });
  return Fc.eval(std::vector<CycFn>{a, b});
}

// ---------- list file

struct ListEntry {
  int line = 0;
  std::string text;
  std::optional<BiPoly> poly;
  std::string error;
  bool divisible = false;          // F | L
  bool divisible_swapped = false;  // F(b, a) | L
  bool scalar_match = false;       // L = k F or k F(b, a)
};

namespace detail {

inline long read_uint(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw ParseError("expected an integer", 0);
  return std::stol(s.substr(start, i - start));
}

/// term = [int]['*'][a['^'int]]['*'][b['^'int]]
inline BiPoly parse_list_term(const std::string& s, std::size_t& i) {
  mpz_class coeff = 1;
  bool any = false;
  if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    coeff = mpz_class(s.substr(start, i - start));
    any = true;
  }
  int ea = 0, eb = 0;
  auto star = [&] {
    if (i < s.size() && s[i] == '*') {
      if (!any) throw ParseError("'*' without a left operand", 0);
      ++i;
      if (i >= s.size() || (s[i] != 'a' && s[i] != 'b')) throw ParseError("expected a or b after '*'", 0);
    }
  };
  star();
  if (i < s.size() && s[i] == 'a') {
    ++i;
    ea = 1;
    if (i < s.size() && s[i] == '^') ea = static_cast<int>(read_uint(s, ++i));
    any = true;
    star();
  }
  if (i < s.size() && s[i] == 'b') {
    ++i;
    eb = 1;
    if (i < s.size() && s[i] == '^') eb = static_cast<int>(read_uint(s, ++i));
    any = true;
  }
  if (!any) throw ParseError("empty term", 0);
  return BiPoly::term(ab_vars(), CycNum(BigRational(coeff)), {ea, eb});
}

}  // namespace detail

/// One polynomial per line; '#' comments; whitespace ignored.
inline BiPoly parse_list_polynomial(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial", 0);
  std::size_t i = 0;
  BiPoly acc(ab_vars());
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError(std::string("unexpected '") + s[i] + "'", 0);
    }
    BiPoly t = detail::parse_list_term(s, i);
    acc += sign < 0 ? BiPoly(ab_vars(), CycNum(-1)) * t : t;
    first = false;
  }
  return acc;
}

inline std::vector<ListEntry> read_stoll_list(std::istream& in) {
  std::vector<ListEntry> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    ListEntry e;
    e.line = no;
    e.text = body;
    try {
      e.poly = parse_list_polynomial(body);
      if (e.poly->is_zero()) throw ParseError("zero polynomial", 0);
    } catch (const ParseError& err) {
      e.poly.reset();
      e.error = "line " + std::to_string(no) + ": " + err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

// ---------- irreducibility (informational)

/// Irreducible over Q when F is cubic in a, its a-coefficients share no factor in b, and for
/// some b0 the specialization mod p keeps degree 3 and has no root. Otherwise "unknown".
inline std::string irreducibility_over_Q(const BiPoly& F) {
  if (F.degree_in(0) != 3) return "unknown (not cubic in a)";
  auto coeffs = F.to_bivariate(0, 1);
  Poly<CycNum> g;
  for (int i = 0; i <= coeffs.degree(); ++i) g = poly_gcd(g, coeffs.coeff(i).num());
  if (g.degree() > 0) return "reducible (content in b)";
  for (std::uint64_t p : {73ULL, 97ULL, 193ULL}) {
    const FqContext* ctx = fq_context(p);
    for (long b0 = 1; b0 <= 5; ++b0) {
      FqElem bb = ctx->from_int(b0);
      auto lead = reduce_cyc(coeffs.coeff(3).num().eval(CycNum(b0)), ctx);
      if (lead.is_zero()) continue;
      bool root = false;
      for (std::uint64_t x = 0; x < p && !root; ++x) {
        auto Fp = F.map([&](const CycNum& k) { return reduce_cyc(k, ctx); });
        root = Fp.eval(std::vector<FqElem>{ctx->element(x), bb}).is_zero();
      }
      if (!root)
        return "irreducible over Q (b = " + std::to_string(b0) + " gives a rootless cubic mod " + std::to_string(p) + ")";
    }
  }
  return "unknown";
}

// ---------- report

enum class ListStatus { NoList, Excluded, Matched, Malformed };

inline std::string to_string(ListStatus s) {
  switch (s) {
    case ListStatus::NoList:
      return "UNVERIFIED-NO-LIST";
    case ListStatus::Excluded:
      return "excluded";
    case ListStatus::Matched:
      return "matched";
    default:
      return "malformed-list";
  }
}

struct StollReport {
  CycFn alpha, beta;
  BiPoly F;
  bool closed_forms_ok = false;
  bool identity_ok = false;
  bool nonconstant = false, distinct = false, avoids_01 = false;
  std::string irreducibility;
  ListStatus status = ListStatus::NoList;
  std::vector<ListEntry> entries;

  bool constraints_ok() const { return nonconstant && distinct && avoids_01; }
};

inline StollReport stoll_check(std::istream* list) {
  StollReport r;
  r.F = stoll_relation();
  r.alpha = stoll_alpha();
  r.beta = stoll_beta();
  r.closed_forms_ok = r.alpha == stoll_alpha_closed() && r.beta == stoll_beta_closed();
  r.identity_ok = eval_bivariate(r.F, r.alpha, r.beta).is_zero();
  r.nonconstant = !r.alpha.is_constant() && !r.beta.is_constant();
  r.distinct = r.alpha != r.beta;
  r.avoids_01 = !r.alpha.is_zero() && !r.beta.is_zero() && r.alpha != CycFn(1) && r.beta != CycFn(1);
  r.irreducibility = irreducibility_over_Q(r.F);
  if (!list) return r;
  r.entries = read_stoll_list(*list);
  bool malformed = false, matched = false;
  std::size_t polys = 0;
  BiPoly Fs = r.F.substitute({BiPoly::variable(ab_vars(), 1), BiPoly::variable(ab_vars(), 0)});
  for (auto& e : r.entries) {
    if (!e.poly) {
      malformed = true;
      continue;
    }
    ++polys;
    e.divisible = bivar_divides(r.F, *e.poly);
    e.divisible_swapped = bivar_divides(Fs, *e.poly);
    for (const BiPoly* G : {&r.F, &Fs}) {
      auto [q, rem] = mpoly_divide(*e.poly, *G);
      if (rem.is_zero() && q.total_degree() == 0) e.scalar_match = true;
    }
    matched = matched || e.divisible;
  }
  if (malformed) r.status = ListStatus::Malformed;
  else if (polys == 0) r.status = ListStatus::NoList;  // an empty placeholder proves nothing
  else r.status = matched ? ListStatus::Matched : ListStatus::Excluded;
  return r;
}

/// Path variant; an empty path means no list was supplied.
inline StollReport stoll_check(const std::string& path) {
  if (path.empty()) return stoll_check(static_cast<std::istream*>(nullptr));
  std::ifstream in(path);
  if (!in) throw Error("cannot open list file " + path);
  return stoll_check(&in);
}

}  // namespace shadowkit
