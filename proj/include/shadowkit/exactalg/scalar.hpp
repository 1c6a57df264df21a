#pragma once

// Free-function forms of the member operations shared by all coefficient types, so that
// qualified calls inside templates resolve for types declared later.

#include <string>

namespace shadowkit {

template <class T>
auto is_zero(const T& x) -> decltype(x.is_zero()) {
  return x.is_zero();
}

template <class T>
auto to_string(const T& x) -> decltype(x.to_string()) {
  return x.to_string();
}

inline std::string to_string(const std::string& label) { return label; }

template <class T>
auto inv(const T& x) -> decltype(x.inv()) {
  return x.inv();
}

}  // namespace shadowkit
