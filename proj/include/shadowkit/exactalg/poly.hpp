#pragma once

// Dense univariate polynomials over a field K. K needs K(long), + - * /, ==,
// and the free functions is_zero, inv and to_string.

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/scalar.hpp"
#include "shadowkit/exactalg/cyclotomic.hpp"
#include "shadowkit/exactalg/numtheory.hpp"
#include "shadowkit/exactalg/rational.hpp"

namespace shadowkit {

template <class K>
class Poly {
 public:
  using coeff_type = K;

  Poly() = default;
  explicit Poly(std::vector<K> coeffs, std::string var = "x") : c_(std::move(coeffs)), var_(std::move(var)) { trim(); }
  Poly(const K& constant, std::string var) : c_{constant}, var_(std::move(var)) { trim(); }

  static Poly variable(std::string var = "x") { return Poly(std::vector<K>{K(0), K(1)}, std::move(var)); }
  static Poly monomial(const K& c, int deg, std::string var = "x") {
    std::vector<K> v(deg + 1, K(0));
    v[deg] = c;
    return Poly(std::move(v), std::move(var));
  }

  const std::string& var() const { return var_; }
  Poly with_var(std::string v) const {
    Poly r = *this;
    r.var_ = std::move(v);
    return r;
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K(0); }
  K operator[](int i) const { return coeff(i); }
  K lc() const { return c_.empty() ? K(0) : c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }

  Poly monic() const {
    if (is_zero()) return *this;
    K l = inv(lc());
    Poly r = *this;
    for (auto& x : r.c_) x = x * l;
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator+(const Poly& f, const Poly& g) {
    std::vector<K> v(std::max(f.c_.size(), g.c_.size()), K(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(i) + g.coeff(i);
    return Poly(std::move(v), pick_var(f, g));
  }
  friend Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }
  friend Poly operator*(const Poly& f, const Poly& g) {
    std::string v = pick_var(f, g);
    if (f.is_zero() || g.is_zero()) return Poly(std::vector<K>{}, v);
    std::vector<K> out(f.c_.size() + g.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
      if (shadowkit::is_zero(f.c_[i])) continue;
      for (std::size_t j = 0; j < g.c_.size(); ++j) out[i + j] = out[i + j] + f.c_[i] * g.c_[j];
    }
    return Poly(std::move(out), v);
  }
  friend Poly operator*(const K& s, const Poly& f) {
    Poly r = f;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }
  friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

  /// Euclidean division f = q*g + r, deg r < deg g.
  static std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::string v = pick_var(f, g);
    Poly r = f.with_var(v);
    int dg = g.degree();
    if (f.degree() < dg) return {Poly(std::vector<K>{}, v), r};
    std::vector<K> q(f.degree() - dg + 1, K(0));
    K li = inv(g.lc());
    while (!r.is_zero() && r.degree() >= dg) {
      int shift = r.degree() - dg;
      K coef = r.lc() * li;
      q[shift] = coef;
      for (int i = 0; i <= dg; ++i) r.c_[shift + i] = r.c_[shift + i] - coef * g.c_[i];
      r.c_.pop_back();
      r.trim();
    }
    return {Poly(std::move(q), v), r};
  }
  friend Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
  friend Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

  /// Exact division; throws if g does not divide f.
  static Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(std::vector<K>{}, var_);
    std::vector<K> d(c_.size() - 1, K(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = K(static_cast<long>(i)) * c_[i];
    return Poly(std::move(d), var_);
  }

  /// Horner evaluation at x in any ring T that K converts into.
  template <class T>
  T eval(const T& x) const {
    if (c_.empty()) return T(0);
    T acc = T(c_.back());
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) acc = acc * x + T(c_[i]);
    return acc;
  }
  K operator()(const K& x) const { return eval<K>(x); }

  Poly compose(const Poly& g) const {
    if (c_.empty()) return Poly(std::vector<K>{}, g.var_);
    Poly acc(c_.back(), g.var_);
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) acc = acc * g + Poly(c_[i], g.var_);
    return acc;
  }

  Poly pow(unsigned e) const {
    Poly r(K(1), var_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  template <class F>
  auto map(F f) const -> Poly<decltype(f(std::declval<K>()))> {
    using L = decltype(f(std::declval<K>()));
    std::vector<L> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return Poly<L>(std::move(out), var_);
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (shadowkit::is_zero(c_[i])) continue;
      std::string cs = shadowkit::to_string(c_[i]);
      bool compound = cs.find_first_of("+- ", 1) != std::string::npos;
      if (!out.empty()) out += " + ";
      if (i == 0) {
        out += compound ? "(" + cs + ")" : cs;
        continue;
      }
      if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
      out += var_;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  static std::string pick_var(const Poly& f, const Poly& g) {
    if (f.degree() > 0 && g.degree() > 0 && f.var_ != g.var_)
      throw Error("polynomials in different variables: " + f.var_ + ", " + g.var_);
    return f.degree() > 0 ? f.var_ : g.var_;
  }
  void trim() {
    while (!c_.empty() && shadowkit::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
  std::string var_ = "x";
};

template <class K>
bool is_zero(const Poly<K>& f) {
  return f.is_zero();
}
template <class K>
std::string to_string(const Poly<K>& f) {
  return f.to_string();
}

/// Monic gcd (zero if both inputs are zero).
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_xgcd(const Poly<K>& a, const Poly<K>& b) {
  std::string v = a.degree() > 0 ? a.var() : b.var();
  Poly<K> r0 = a, r1 = b, s0(K(1), v), s1(K(0), v), t0(K(0), v), t1(K(1), v);
  while (!r1.is_zero()) {
    auto [q, r] = Poly<K>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K li = inv(r0.lc());
  return {li * r0, li * s0, li * t0};
}

template <class K>
K kpow(K b, unsigned e) {
  K r(1);
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

/// Res(f, g) = lc(f)^deg(g) * prod of g over the roots of f.
template <class K>
K resultant(const Poly<K>& f, const Poly<K>& g) {
  if (f.is_zero() || g.is_zero()) return K(0);
  int n = f.degree(), m = g.degree();
  if (n == 0) return kpow(f.lc(), m);
  if (m == 0) return kpow(g.lc(), n);
  Poly<K> r = g % f;
  if (r.is_zero()) return K(0);
  int k = r.degree();
  K res = kpow(f.lc(), m - k) * resultant(r, f);
  if ((n * k) % 2) res = -res;
  return res;
}

template <class K>
K discriminant(const Poly<K>& f) {
  int n = f.degree();
  if (n < 1) throw DegreeError("discriminant of a constant");
  K r = resultant(f, f.derivative()) / f.lc();
  return ((n * (n - 1) / 2) % 2) ? -r : r;
}

/// Yun's algorithm (characteristic zero): f = lc * prod a_i^i, returns (a_i, i) with a_i nonconstant.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& f) {
  std::vector<std::pair<Poly<K>, int>> out;
  if (f.degree() < 1) return out;
  Poly<K> fp = f.derivative();
  Poly<K> a = poly_gcd(f, fp);
  Poly<K> b = Poly<K>::exact_div(f, a);
  Poly<K> c = Poly<K>::exact_div(fp, a);
  Poly<K> d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    Poly<K> ai = poly_gcd(b, d);
    b = Poly<K>::exact_div(b, ai);
    c = Poly<K>::exact_div(d, ai);
    d = c - b.derivative();
    if (ai.degree() >= 1) out.emplace_back(ai.monic(), i);
  }
  return out;
}

template <class K>
bool is_squarefree(const Poly<K>& f) {
  return poly_gcd(f, f.derivative()).degree() <= 0;
}

/// Rational roots of a rational polynomial (each listed once).
/// Integer clearing and divisor enumeration; throws when coefficients are too large to factor.
inline std::vector<BigRational> rational_roots(const Poly<BigRational>& f) {
  std::vector<BigRational> roots;
  if (f.degree() < 1) return roots;
  Poly<BigRational> g = f;
  int low = 0;
  while (shadowkit::is_zero(g.coeff(low))) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<BigRational> shifted;
  for (int i = low; i <= g.degree(); ++i) shifted.push_back(g.coeff(i));
  g = Poly<BigRational>(shifted, f.var());
  if (g.degree() < 1) return roots;
  mpz_class den = 1;
  for (const auto& c : g.coeffs()) den = lcm(den, c.den());
  mpz_class a0 = abs(g.coeff(0).num() * (den / g.coeff(0).den()));
  mpz_class an = abs(g.lc().num() * (den / g.lc().den()));
  const mpz_class limit("1000000000000");
  if (a0 > limit || an > limit) throw Error("rational root search: coefficients too large");
  auto divisors = [](std::uint64_t n) {
    std::vector<std::uint64_t> ds{1};
    for (auto [p, e] : nt::factor(n)) {
      std::size_t sz = ds.size();
      std::uint64_t pk = 1;
      for (int k = 1; k <= e; ++k) {
        pk *= p;
        for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
      }
    }
    return ds;
  };
  for (auto pn : divisors(a0.get_ui())) {
    for (auto qd : divisors(an.get_ui())) {
      if (std::gcd(pn, qd) != 1) continue;
      for (int s : {1, -1}) {
        BigRational r(mpz_class(static_cast<unsigned long>(pn)) * s, mpz_class(static_cast<unsigned long>(qd)));
        if (shadowkit::is_zero(g(r)) && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Characteristic polynomial by Faddeev-LeVerrier.
inline Poly<BigRational> charpoly(const std::vector<std::vector<BigRational>>& m, const std::string& var = "x") {
  std::size_t n = m.size();
  std::vector<BigRational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<BigRational>> mk(n, std::vector<BigRational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    // mk <- m * (mk + c[n-k+1] I)
    std::vector<std::vector<BigRational>> t = mk;
    for (std::size_t i = 0; i < n; ++i) t[i][i] += c[n - k + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigRational s;
        for (std::size_t l = 0; l < n; ++l)
          if (!m[i][l].is_zero() && !t[l][j].is_zero()) s += m[i][l] * t[l][j];
        mk[i][j] = s;
      }
    BigRational tr;
    for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
    c[n - k] = -tr / BigRational(static_cast<long>(k));
  }
  return Poly<BigRational>(c, var);
}

/// Minimal polynomial over Q of an element of Q(zeta_24).
inline Poly<BigRational> min_poly(const CycNum& x, const std::string& var = "x") {
  std::vector<std::vector<BigRational>> m(8, std::vector<BigRational>(8));
  for (int j = 0; j < 8; ++j) {
    CycNum col = x * CycNum::zeta(j);
    for (int i = 0; i < 8; ++i) m[i][j] = col.coeff(i);
  }
  Poly<BigRational> cp = charpoly(m, var);
  return Poly<BigRational>::exact_div(cp, poly_gcd(cp, cp.derivative())).monic();
}

}  // namespace shadowkit
