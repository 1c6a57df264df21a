#pragma once

// Truncated power series and local branches of plane curves at smooth points.

#include <algorithm>
#include <array>
#include <climits>
#include <string>
#include <vector>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/mpoly.hpp"

namespace shadowkit {

/// Power series in eps known modulo eps^prec. Constants are exact (prec = INT_MAX).
template <class K>
class Series {
 public:
  static constexpr int kExact = INT_MAX;

  Series() : c_{}, prec_(kExact) {}
  Series(long n) : c_{K(n)}, prec_(kExact) { trim(); }  // NOLINT(google-explicit-constructor)
  Series(const K& k) : c_{k}, prec_(kExact) { trim(); }  // NOLINT(google-explicit-constructor)
  Series(std::vector<K> c, int prec) : c_(std::move(c)), prec_(prec) { trim(); }

  int prec() const { return prec_; }
  K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K(0); }

  /// Index of the first nonzero coefficient; -1 if zero up to the precision.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!shadowkit::is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Series operator+(const Series& a, const Series& b) {
    int prec = std::min(a.prec_, b.prec_);
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<K> out(n, K(0));
    for (std::size_t i = 0; i < n; ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Series(std::move(out), prec);
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b) {
    int prec = std::min(a.prec_, b.prec_);
    if (a.c_.empty() || b.c_.empty()) return Series(std::vector<K>{}, prec);
    std::size_t n = a.c_.size() + b.c_.size() - 1;
    if (prec != kExact) n = std::min<std::size_t>(n, prec);
    std::vector<K> out(n, K(0));
    for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
      if (shadowkit::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Series(std::move(out), prec);
  }
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_ && a.prec_ == b.prec_; }

 private:
  void trim() {
    if (prec_ != kExact && static_cast<int>(c_.size()) > prec_) c_.resize(prec_);
    while (!c_.empty() && shadowkit::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
  int prec_;
};

template <class K>
bool is_zero(const Series<K>& s) {
  return s.valuation() < 0;
}

/// One branch of a projective plane curve F(X,Y,Z) = 0 through a smooth point:
/// the chart coordinate is 1, the parameter coordinate is base + eps, the solved one is a series.
template <class K>
struct BranchExpansion {
  std::array<K, 3> base;
  int chart = 0;
  int param = 1;
  int solved = 2;
  int order = 8;
  std::array<Series<K>, 3> coords;

  /// F(coords) must vanish modulo eps^(order+1).
  bool residual_ok(const MPoly<K>& F) const {
    Series<K> r = F.template eval<Series<K>>(std::vector<Series<K>>(coords.begin(), coords.end()));
    return r.valuation() < 0;
  }
};

template <class K>
BranchExpansion<K> branch_expansion(const MPoly<K>& F, std::array<K, 3> pt, int order = 8) {
  if (F.nvars() != 3) throw Error("branch expansion needs a ternary form");
  int chart = -1;
  for (int i = 2; i >= 0; --i)
    if (!shadowkit::is_zero(pt[i])) {
      chart = i;
      break;
    }
  if (chart < 0) throw Error("the zero vector is not a projective point");
  K s = inv(pt[chart]);
  for (auto& x : pt) x = x * s;
  std::vector<K> ptv(pt.begin(), pt.end());
  if (!shadowkit::is_zero(F.template eval<K>(ptv))) throw OffCurve("branch expansion at a point off the curve");

  int i = (chart + 1) % 3, j = (chart + 2) % 3;
  K di = F.partial(i).template eval<K>(ptv), dj = F.partial(j).template eval<K>(ptv);
  int param = i, solved = j;
  K dsolved = dj;
  if (shadowkit::is_zero(dj)) {
    if (shadowkit::is_zero(di)) throw UnresolvedIndeterminacy("branch expansion at a singular point of the chart");
    std::swap(param, solved);
    dsolved = di;
  }
  const int prec = order + 1;
  K dinv = inv(dsolved);
  std::vector<K> sol(prec, K(0));
  sol[0] = pt[solved];
  auto build = [&](const std::vector<K>& solved_coeffs) {
    std::array<Series<K>, 3> c;
    c[chart] = Series<K>(std::vector<K>{K(1)}, prec);
    c[param] = Series<K>(std::vector<K>{pt[param], K(1)}, prec);
    c[solved] = Series<K>(solved_coeffs, prec);
    return c;
  };
  for (int k = 1; k <= order; ++k) {
    auto c = build(sol);
    Series<K> r = F.template eval<Series<K>>(std::vector<Series<K>>(c.begin(), c.end()));
    sol[k] = -(r.coeff(k) * dinv);
  }
  BranchExpansion<K> b;
  b.base = pt;
  b.chart = chart;
  b.param = param;
  b.solved = solved;
  b.order = order;
  b.coords = build(sol);
  if (!b.residual_ok(F)) throw UnresolvedIndeterminacy("branch expansion residual does not vanish");
  return b;
}

/// Limit of [G0:G1:G2] along the branch: leading coefficients at the minimal valuation.
template <class K>
std::array<K, 3> branch_image(const BranchExpansion<K>& b, const std::array<MPoly<K>, 3>& G) {
  std::vector<Series<K>> args(b.coords.begin(), b.coords.end());
  std::array<Series<K>, 3> vals;
  int vmin = -1;
  for (int m = 0; m < 3; ++m) {
    vals[m] = G[m].template eval<Series<K>>(args);
    int v = vals[m].valuation();
    if (v >= 0 && (vmin < 0 || v < vmin)) vmin = v;
  }
  if (vmin < 0)
    throw UnresolvedIndeterminacy("map stays indeterminate to order " + std::to_string(b.order));
  return {vals[0].coeff(vmin), vals[1].coeff(vmin), vals[2].coeff(vmin)};
}

}  // namespace shadowkit
