#pragma once

// Integer-weighted finite sums of points, their pushforward and evaluation in the group of a
// pointed model.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/projective.hpp"
#include "shadowkit/exactalg/scalar.hpp"

namespace shadowkit {

/// Hooks a point type can overload: canonical form on insertion, and degree of the place.
template <class P>
P canonical_point(const P& p) {
  return p;
}
template <class K>
PPoint<K> canonical_point(const PPoint<K>& p) {
  return normalize(p);
}
template <class P>
long place_degree(const P&) {
  return 1;
}

template <class P>
class FormalDivisor {
 public:
  FormalDivisor() = default;
  FormalDivisor(std::initializer_list<std::pair<P, long>> terms) {
    for (const auto& [p, n] : terms) add(p, n);
  }

  static FormalDivisor point(const P& p, long n = 1) {
    FormalDivisor d;
    d.add(p, n);
    return d;
  }

  void add(const P& p, long n) {
    if (n == 0) return;
    P c = canonical_point(p);
    auto it = terms_.find(c);
    if (it == terms_.end()) {
      terms_.emplace(std::move(c), n);
      return;
    }
    it->second += n;
    if (it->second == 0) terms_.erase(it);
  }

  const std::map<P, long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  long multiplicity(const P& p) const {
    auto it = terms_.find(canonical_point(p));
    return it == terms_.end() ? 0 : it->second;
  }

  long degree() const {
    long d = 0;
    for (const auto& [p, n] : terms_) d += n * place_degree(p);
    return d;
  }

  FormalDivisor& operator+=(const FormalDivisor& o) {
    for (const auto& [p, n] : o.terms_) add(p, n);
    return *this;
  }
  FormalDivisor& operator-=(const FormalDivisor& o) {
    for (const auto& [p, n] : o.terms_) add(p, -n);
    return *this;
  }
  friend FormalDivisor operator+(FormalDivisor a, const FormalDivisor& b) { return a += b; }
  friend FormalDivisor operator-(FormalDivisor a, const FormalDivisor& b) { return a -= b; }
  friend FormalDivisor operator*(long k, const FormalDivisor& a) {
    FormalDivisor r;
    if (k == 0) return r;
    for (const auto& [p, n] : a.terms_) r.terms_.emplace(p, k * n);
    return r;
  }
  FormalDivisor operator-() const { return (-1) * *this; }
  friend bool operator==(const FormalDivisor& a, const FormalDivisor& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FormalDivisor& a, const FormalDivisor& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, n] : terms_) {
      if (!first) s += n < 0 ? " - " : " + ";
      else if (n < 0) s += "-";
      first = false;
      long a = n < 0 ? -n : n;
      if (a != 1) s += std::to_string(a) + "*";
      s += shadowkit::to_string(p);
    }
    return s;
  }

 private:
  std::map<P, long> terms_;
};

template <class P>
long degree(const FormalDivisor<P>& d) {
  return d.degree();
}

/// Pointwise image with summed multiplicities; the degree check guards against lossy maps.
template <class Q, class P, class F>
FormalDivisor<Q> pushforward(const FormalDivisor<P>& d, F&& f) {
  FormalDivisor<Q> r;
  for (const auto& [p, n] : d.terms()) r.add(f(p), n);
  if (r.degree() != d.degree()) throw DegreeError("pushforward changed the degree");
  return r;
}

/// Sum of n_i P_i in the group of a pointed model, without any degree condition.
/// Model needs identity(), contains(), add() and smul(long, P).
template <class Model, class P>
P group_sum(const Model& E, const FormalDivisor<P>& d) {
  P acc = E.identity();
  for (const auto& [p, n] : d.terms()) {
    if (!E.contains(p)) throw OffCurve("divisor point " + shadowkit::to_string(p) + " is not on the curve");
    acc = E.add(acc, E.smul(n, p));
  }
  return acc;
}

/// The point of Pic^0 = E attached to a degree-0 divisor.
template <class Model, class P>
P class_eval(const Model& E, const FormalDivisor<P>& d) {
  if (d.degree() != 0) throw DegreeError("class evaluation needs degree 0, got " + std::to_string(d.degree()));
  return group_sum(E, d);
}

template <class Model, class P>
bool verify_class_equal(const Model& E, const FormalDivisor<P>& a, const FormalDivisor<P>& b) {
  if (a.degree() != b.degree())
    throw DegreeError("degrees differ: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  auto c = class_eval(E, a - b);
  return c == E.identity();
}

}  // namespace shadowkit
