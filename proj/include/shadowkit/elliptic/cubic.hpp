#pragma once

// Pointed plane cubics F(X,Y,Z) = 0 with a marked point O, mapped to Weierstrass form by
// tangent projection. O need not be a flex.
//
// Non-flex O: the tangent at O meets the curve again at T; with l the tangent at O, m the
// tangent at T and n a line through O, x = m/l and y = mn/l^2 have poles 2O and 3O.
// Flex O: x = n/l, y = m/l with n through O and m not through O.
// The relation among 1, x, y, x^2, xy, y^2, x^3 is found by linear algebra modulo F.

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "shadowkit/elliptic/weierstrass.hpp"
#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/linalg.hpp"
#include "shadowkit/exactalg/mpoly.hpp"
#include "shadowkit/exactalg/projective.hpp"
#include "shadowkit/models/branch.hpp"

namespace shadowkit {

template <class K>
class CubicModel {
 public:
  CubicModel(MPoly<K> F, PPoint<K> O) : F_(std::move(F)), O_(normalize(O)) { build(); }

  const MPoly<K>& form() const { return F_; }
  const PPoint<K>& identity() const { return O_; }
  const WeierstrassModel<K>& weierstrass() const { return *w_; }
  bool marked_is_flex() const { return flex_; }
  /// Third intersection of the tangent at O (equals O for a flex).
  const PPoint<K>& tangent_point() const { return T_; }
  const std::array<MPoly<K>, 3>& forward_forms() const { return fwd_; }

  bool contains(const PPoint<K>& p) const { return shadowkit::is_zero(F_.eval(std::vector<K>(p.begin(), p.end()))); }

  WPoint<K> to_w(const PPoint<K>& p) const {
    if (!contains(p)) throw OffCurve("point " + to_string(p) + " is not on the cubic");
    for (const auto& [src, img] : exceptional_)
      if (proj_equal(src, p)) return img;
    return forward_raw(p);
  }

  PPoint<K> from_w(const WPoint<K>& p) const {
    for (const auto& [src, img] : exceptional_)
      if (img == p) return src;
    if (p.inf) return O_;
    std::array<K, 3> vals = flex_ ? std::array<K, 3>{alpha_ * alpha_ * delta_, alpha_ * p.x, p.y}
                                  : std::array<K, 3>{alpha_ * delta_ * p.x, p.x * p.x, delta_ * p.y};
    PPoint<K> out;
    for (int i = 0; i < 3; ++i) out[i] = minv_[i][0] * vals[0] + minv_[i][1] * vals[1] + minv_[i][2] * vals[2];
    if (is_zero_vector(out)) throw UnresolvedIndeterminacy("inverse map undefined at " + p.to_string());
    return normalize(out);
  }

  PPoint<K> neg(const PPoint<K>& p) const { return from_w(w_->neg(to_w(p))); }
  PPoint<K> add(const PPoint<K>& p, const PPoint<K>& q) const {
    if (!contains(p) || !contains(q)) throw MixedModel();
    return from_w(w_->add(to_w(p), to_w(q)));
  }
  PPoint<K> smul(const mpz_class& n, const PPoint<K>& p) const { return from_w(w_->smul(n, to_w(p))); }
  PPoint<K> smul(long n, const PPoint<K>& p) const { return smul(mpz_class(n), p); }

  /// Source/target pairs handled outside the closed formulas.
  const std::vector<std::pair<PPoint<K>, WPoint<K>>>& exceptional() const { return exceptional_; }

 private:
  using MP = MPoly<K>;

  static std::vector<K> vec(const PPoint<K>& p) { return std::vector<K>(p.begin(), p.end()); }
  PPoint<K> gradient(const PPoint<K>& p) const {
    auto v = vec(p);
    return {F_.partial(0).eval(v), F_.partial(1).eval(v), F_.partial(2).eval(v)};
  }
  MP linear(const PPoint<K>& coeffs) const {
    const auto& vars = F_.vars();
    MP r(vars);
    for (int i = 0; i < 3; ++i) r += coeffs[i] * MP::variable(vars, i);
    return r;
  }

  /// Candidate points used to pick auxiliary lines.
  static std::vector<PPoint<K>> candidates() {
    std::vector<PPoint<K>> c;
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long d = -2; d <= 2; ++d)
          if (a || b || d) c.push_back({K(a), K(b), K(d)});
    std::stable_sort(c.begin(), c.end(), [](const PPoint<K>& x, const PPoint<K>& y) {
      auto weight = [](const PPoint<K>& p) {
        int w = 0;
        for (const auto& v : p) w += shadowkit::is_zero(v) ? 0 : 1;
        return w;
      };
      return weight(x) < weight(y);
    });
    return c;
  }

  /// A point on the line {line . X = 0} distinct from p (which lies on it).
  static PPoint<K> other_point_on_line(const PPoint<K>& line, const PPoint<K>& p) {
    for (const auto& c : candidates())
      if (shadowkit::is_zero(dot(line, c)) && !proj_equal(c, p)) return c;
    for (auto& v : nullspace(Matrix<K>{{line[0], line[1], line[2]}}, 3)) {
      PPoint<K> c{v[0], v[1], v[2]};
      if (!proj_equal(c, p)) return c;
    }
    throw Error("internal: line has a single point");
  }

  static bool independent(const PPoint<K>& a, const PPoint<K>& b, const PPoint<K>& c) {
    return !shadowkit::is_zero(det3(Matrix<K>{{a[0], a[1], a[2]}, {b[0], b[1], b[2]}, {c[0], c[1], c[2]}}));
  }

  void build() {
    if (F_.nvars() != 3 || !F_.is_homogeneous(3)) throw DegreeError("cubic model needs a ternary cubic form");
    if (!contains(O_)) throw OffCurve("marked point is not on the cubic");
    PPoint<K> gO = gradient(O_);
    if (is_zero_vector(gO)) throw SingularFiber("marked point is singular");

    PPoint<K> D = other_point_on_line(gO, O_);
    auto Fat = [&](const PPoint<K>& p) { return F_.eval(vec(p)); };
    PPoint<K> OD{O_[0] + D[0], O_[1] + D[1], O_[2] + D[2]};
    K beta = Fat(D);
    K alpha = Fat(OD) - beta;
    flex_ = shadowkit::is_zero(alpha);
    if (flex_ && shadowkit::is_zero(beta)) throw SingularFiber("tangent line is a component of the cubic");
    if (flex_) {
      T_ = O_;
    } else {
      T_ = normalize(PPoint<K>{-beta * O_[0] + alpha * D[0], -beta * O_[1] + alpha * D[1], -beta * O_[2] + alpha * D[2]});
    }

    MP l = linear(gO);
    std::vector<MP> forms;
    std::size_t degree;
    PPoint<K> r1, r2;  // the other two line coefficient vectors
    if (!flex_) {
      PPoint<K> gT = gradient(T_);
      if (is_zero_vector(gT)) throw SingularFiber("cubic is singular at the tangent point");
      r1 = gT;
      bool ok = false;
      for (const auto& c : candidates()) {
        if (proj_equal(c, O_)) continue;
        PPoint<K> line = cross(O_, c);
        if (is_zero_vector(line) || !independent(gO, gT, line)) continue;
        r2 = line;
        ok = true;
        break;
      }
      if (!ok) throw Error("no auxiliary line through the marked point");
      MP m = linear(r1), n = linear(r2);
      forms = {m * m * n * n, m * m * n * l, m * n * l * l, m * m * m * l, m * m * l * l, m * l * l * l, l * l * l * l};
      const auto& vars = F_.vars();
      for (int i = 0; i < 3; ++i) forms.push_back(F_ * MP::variable(vars, i));
      degree = 4;
    } else {
      bool ok = false;
      for (const auto& c : candidates()) {
        if (proj_equal(c, O_)) continue;
        PPoint<K> nline = cross(O_, c);
        if (is_zero_vector(nline) || proj_equal(nline, gO)) continue;
        for (const auto& c2 : candidates()) {
          if (shadowkit::is_zero(dot(c2, O_))) continue;
          if (!independent(gO, nline, c2)) continue;
          r1 = nline;
          r2 = c2;
          ok = true;
          break;
        }
        if (ok) break;
      }
      if (!ok) throw Error("no auxiliary lines for the flex construction");
      MP n = linear(r1), m = linear(r2);
      forms = {m * m * l, n * m * l, m * l * l, n * n * n, n * n * l, n * l * l, l * l * l, F_};
      degree = 3;
    }

    // coefficient matrix over the monomials of the given degree
    std::vector<std::vector<int>> monos;
    for (std::size_t i = 0; i <= degree; ++i)
      for (std::size_t j = 0; i + j <= degree; ++j)
        monos.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(degree - i - j)});
    Matrix<K> mat(monos.size(), std::vector<K>(forms.size(), K(0)));
    for (std::size_t c = 0; c < forms.size(); ++c) {
      if (!forms[c].is_homogeneous(static_cast<int>(degree))) throw Error("internal: inhomogeneous form");
      for (const auto& [e, k] : forms[c].terms()) {
        auto it = std::find(monos.begin(), monos.end(), e);
        mat[it - monos.begin()][c] = k;
      }
    }
    auto ns = nullspace(mat, forms.size());
    if (ns.size() != 1) throw SingularFiber("cubic does not define an elliptic curve with this marked point");
    const auto& rel = ns[0];
    // rel: c1 y^2 + c2 xy + c3 y + c4 x^3 + c5 x^2 + c6 x + c7 = 0
    alpha_ = rel[0];
    K b = rel[1], g = rel[2];
    delta_ = -rel[3];
    K eps = -rel[4], zeta = -rel[5], eta = -rel[6];
    if (shadowkit::is_zero(alpha_) || shadowkit::is_zero(delta_))
      throw SingularFiber("degenerate relation: cubic is singular");
    K ad = alpha_ * delta_;
    w_ = std::make_unique<WeierstrassModel<K>>(b, eps * alpha_, g * ad, zeta * alpha_ * ad,
                                              eta * alpha_ * alpha_ * alpha_ * delta_ * delta_);
    if (!flex_) {
      MP m = linear(r1), n = linear(r2);
      fwd_ = {ad * (m * l), (alpha_ * ad) * (m * n), l * l};
      minv_ = inverse3(Matrix<K>{{gO[0], gO[1], gO[2]}, {r1[0], r1[1], r1[2]}, {r2[0], r2[1], r2[2]}});
    } else {
      MP n = linear(r1), m = linear(r2);
      fwd_ = {ad * n, (alpha_ * ad) * m, l};
      minv_ = inverse3(Matrix<K>{{gO[0], gO[1], gO[2]}, {r1[0], r1[1], r1[2]}, {r2[0], r2[1], r2[2]}});
    }

    exceptional_.emplace_back(O_, WPoint<K>::O());
    if (!flex_) {
      exceptional_.emplace_back(T_, forward_raw(T_));
      // S: third intersection of the tangent at T
      PPoint<K> S = third_on_tangent(T_, r1);
      if (!proj_equal(S, T_)) exceptional_.emplace_back(S, forward_raw(S));
    }
  }

  /// Third point of the tangent line at a point p (p counted twice).
  PPoint<K> third_on_tangent(const PPoint<K>& p, const PPoint<K>& grad) const {
    PPoint<K> D = other_point_on_line(grad, p);
    PPoint<K> pd{p[0] + D[0], p[1] + D[1], p[2] + D[2]};
    K beta = F_.eval(vec(D));
    K alpha = F_.eval(vec(pd)) - beta;
    if (shadowkit::is_zero(alpha)) return normalize(p);
    return normalize(PPoint<K>{-beta * p[0] + alpha * D[0], -beta * p[1] + alpha * D[1], -beta * p[2] + alpha * D[2]});
  }

  WPoint<K> forward_raw(const PPoint<K>& p) const {
    auto v = vec(p);
    PPoint<K> img{fwd_[0].eval(v), fwd_[1].eval(v), fwd_[2].eval(v)};
    if (is_zero_vector(img)) img = branch_image(branch_expansion(F_, p), fwd_);
    if (shadowkit::is_zero(img[2])) {
      if (!shadowkit::is_zero(img[0])) throw Error("internal: image off the Weierstrass model");
      return WPoint<K>::O();
    }
    K zi = inv(img[2]);
    return WPoint<K>::affine(img[0] * zi, img[1] * zi);
  }

  MPoly<K> F_;
  PPoint<K> O_;
  PPoint<K> T_;
  bool flex_ = false;
  K alpha_, delta_;
  std::shared_ptr<const WeierstrassModel<K>> w_;
  std::array<MPoly<K>, 3> fwd_;
  Matrix<K> minv_;
  std::vector<std::pair<PPoint<K>, WPoint<K>>> exceptional_;
};

}  // namespace shadowkit
