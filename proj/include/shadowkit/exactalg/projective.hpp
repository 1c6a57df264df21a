#pragma once

#include <array>
#include <string>

#include "shadowkit/errors.hpp"
#include "shadowkit/exactalg/scalar.hpp"

namespace shadowkit {

template <class K>
using PPoint = std::array<K, 3>;

/// Scale so the last nonzero coordinate is 1.
template <class K>
PPoint<K> normalize(PPoint<K> p) {
  for (int i = 2; i >= 0; --i) {
    if (is_zero(p[i])) continue;
    K s = inv(p[i]);
    for (auto& x : p) x = x * s;
    return p;
  }
  throw Error("the zero vector is not a projective point");
}

template <class K>
bool proj_equal(const PPoint<K>& a, const PPoint<K>& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  return true;
}

template <class K>
bool is_zero_vector(const PPoint<K>& p) {
  return is_zero(p[0]) && is_zero(p[1]) && is_zero(p[2]);
}

template <class K>
std::string to_string(const PPoint<K>& p) {
  return "[" + to_string(p[0]) + " : " + to_string(p[1]) + " : " + to_string(p[2]) + "]";
}

template <class K>
PPoint<K> cross(const PPoint<K>& a, const PPoint<K>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class K>
K dot(const PPoint<K>& a, const PPoint<K>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace shadowkit
