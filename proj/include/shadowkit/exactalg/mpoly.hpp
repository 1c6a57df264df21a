#pragma once

// Sparse multivariate polynomials over a field K with named variables.
// Terms are keyed by exponent vectors; std::map order is lex with the first variable largest.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/scalar.hpp"
#include "shadowkit/exactalg/poly.hpp"
#include "shadowkit/exactalg/ratfn.hpp"

namespace shadowkit {

template <class K>
class MPoly {
 public:
  using Exps = std::vector<int>;
  using coeff_type = K;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  MPoly(std::vector<std::string> vars, const K& c) : vars_(std::move(vars)) {
    if (!shadowkit::is_zero(c)) terms_[Exps(vars_.size(), 0)] = c;
  }

  static MPoly variable(const std::vector<std::string>& vars, const std::string& name) {
    MPoly r(vars);
    r.terms_[r.unit_exps(r.index_of(name))] = K(1);
    return r;
  }
  static MPoly variable(const std::vector<std::string>& vars, std::size_t i) {
    MPoly r(vars);
    r.terms_[r.unit_exps(i)] = K(1);
    return r;
  }
  static MPoly term(const std::vector<std::string>& vars, const K& c, Exps e) {
    MPoly r(vars);
    if (e.size() != vars.size()) throw Error("exponent vector size mismatch");
    if (!shadowkit::is_zero(c)) r.terms_[std::move(e)] = c;
    return r;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<Exps, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw Error("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  int degree_in(std::size_t i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }
  bool is_homogeneous(int deg) const {
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (s != deg) return false;
    }
    return true;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a.same_ring(b);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.check_vars(b));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exps e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MPoly operator*(const K& s, const MPoly& a) {
    MPoly r(a.vars_);
    if (shadowkit::is_zero(s)) return r;
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned e) const {
    MPoly r(vars_, K(1)), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  MPoly partial(std::size_t i) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exps f = e;
      --f[i];
      r.add_term(f, K(static_cast<long>(e[i])) * c);
    }
    return r;
  }
  MPoly partial(const std::string& name) const { return partial(index_of(name)); }

  /// Evaluate with values in a ring T that K converts into.
  template <class T>
  T eval(const std::vector<T>& vals) const {
    if (vals.size() != vars_.size()) throw Error("wrong number of values for evaluation");
    std::vector<std::vector<T>> powers(vars_.size());
    auto pw = [&](std::size_t i, int e) -> const T& {
      auto& v = powers[i];
      if (v.empty()) v.push_back(T(1));
      while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * vals[i]);
      return v[e];
    };
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T t(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) t = t * pw(i, e[i]);
      acc = acc + t;
    }
    return acc;
  }

  /// Substitute polynomials (over the ring of subs[0]) for every variable.
  MPoly substitute(const std::vector<MPoly>& subs) const {
    if (subs.size() != vars_.size()) throw Error("wrong number of substitutions");
    const auto& target = subs.front().vars_;
    std::vector<std::vector<MPoly>> powers(vars_.size());
    MPoly acc(target);
    for (const auto& [e, c] : terms_) {
      MPoly t(target, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        auto& v = powers[i];
        if (v.empty()) v.push_back(MPoly(target, K(1)));
        while (static_cast<int>(v.size()) <= e[i]) v.push_back(v.back() * subs[i]);
        t = t * v[e[i]];
      }
      acc += t;
    }
    return acc;
  }

  /// Replace one variable by a constant, keeping the variable list.
  MPoly specialize(std::size_t i, const K& value) const {
    MPoly r(vars_);
    std::vector<K> pw{K(1)};
    for (const auto& [e, c] : terms_) {
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * value);
      Exps f = e;
      f[i] = 0;
      r.add_term(f, c * pw[e[i]]);
    }
    return r;
  }

  template <class F>
  auto map(F f) const -> MPoly<decltype(f(std::declval<K>()))> {
    using L = decltype(f(std::declval<K>()));
    MPoly<L> r(vars_);
    for (const auto& [e, c] : terms_) r += MPoly<L>::term(vars_, f(c), e);
    return r;
  }

  /// Lex leading term (first variable most significant).
  std::pair<Exps, K> leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  /// Coefficients as a univariate polynomial in variable i (others must not occur).
  Poly<K> to_univariate(std::size_t i) const {
    std::vector<K> c(std::max(0, degree_in(i) + 1), K(0));
    for (const auto& [e, k] : terms_) {
      for (std::size_t j = 0; j < e.size(); ++j)
        if (j != i && e[j]) throw Error("polynomial is not univariate in " + vars_[i]);
      c[e[i]] = k;
    }
    return Poly<K>(std::move(c), vars_[i]);
  }

  /// f(x_main, x_coeff) as a polynomial in x_main over K(x_coeff); other variables must not occur.
  Poly<RatFn<K>> to_bivariate(std::size_t main, std::size_t coeff) const {
    int d = std::max(0, degree_in(main) + 1);
    std::vector<std::vector<K>> rows(d);
    for (const auto& [e, k] : terms_) {
      for (std::size_t j = 0; j < e.size(); ++j)
        if (j != main && j != coeff && e[j]) throw Error("polynomial is not bivariate");
      auto& row = rows[e[main]];
      if (static_cast<int>(row.size()) <= e[coeff]) row.resize(e[coeff] + 1, K(0));
      row[e[coeff]] = k;
    }
    std::vector<RatFn<K>> cs;
    for (auto& row : rows) cs.emplace_back(Poly<K>(std::move(row), vars_[coeff]));
    return Poly<RatFn<K>>(std::move(cs), vars_[main]);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = shadowkit::to_string(c);
      bool compound = cs.find_first_of("+- ", 1) != std::string::npos;
      bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
      if (!out.empty()) out += " + ";
      if (!has_var) {
        out += compound ? "(" + cs + ")" : cs;
        continue;
      }
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (cs == "1") {
        out += mono;
      } else if (cs == "-1") {
        out += "-" + mono;
      } else {
        out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
      }
    }
    return out;
  }

 private:
  Exps unit_exps(std::size_t i) const {
    Exps e(vars_.size(), 0);
    e.at(i) = 1;
    return e;
  }
  const std::vector<std::string>& check_vars(const MPoly& o) const {
    if (vars_ == o.vars_) return vars_;
    if (vars_.empty() && terms_.empty()) return o.vars_;
    if (o.vars_.empty() && o.terms_.empty()) return vars_;
    throw Error("multivariate polynomials over different variable lists");
  }
  MPoly same_ring(const MPoly& o) const {
    MPoly r(check_vars(o));
    r.terms_ = terms_;
    return r;
  }
  void add_term(const Exps& e, const K& c) {
    if (shadowkit::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (shadowkit::is_zero(it->second)) terms_.erase(it);
    }
  }

  template <class L>
  friend class MPoly;

  std::vector<std::string> vars_;
  std::map<Exps, K> terms_;
};

template <class K>
bool is_zero(const MPoly<K>& f) {
  return f.is_zero();
}
template <class K>
std::string to_string(const MPoly<K>& f) {
  return f.to_string();
}

/// Multivariate division by a single divisor under lex order: returns (quotient, remainder).
/// For one divisor the remainder is zero exactly when g divides f.
template <class K>
std::pair<MPoly<K>, MPoly<K>> mpoly_divide(const MPoly<K>& f, const MPoly<K>& g) {
  if (g.is_zero()) throw DivisionByZero("multivariate division by zero");
  auto [lg, cg] = g.leading();
  K cgi = inv(cg);
  MPoly<K> q(f.vars()), r(f.vars()), p = f;
  while (!p.is_zero()) {
    auto [lp, cp] = p.leading();
    bool divides = true;
    typename MPoly<K>::Exps e(lp.size());
    for (std::size_t i = 0; i < lp.size(); ++i) {
      e[i] = lp[i] - lg[i];
      if (e[i] < 0) divides = false;
    }
    if (divides) {
      MPoly<K> t = MPoly<K>::term(f.vars(), cp * cgi, e);
      q += t;
      p -= t * g;
    } else {
      MPoly<K> t = MPoly<K>::term(f.vars(), cp, lp);
      r += t;
      p -= t;
    }
  }
  return {q, r};
}

/// True iff F divides L in K[vars].
template <class K>
bool bivar_divides(const MPoly<K>& F, const MPoly<K>& L) {
  if (F.is_zero()) throw DivisionByZero("divisibility test by the zero polynomial");
  return mpoly_divide(L, F).second.is_zero();
}

}  // namespace shadowkit
