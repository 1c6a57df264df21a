#pragma once

#include <stdexcept>
#include <string>

namespace shadowkit {

/// Base class for every error raised by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

/// A rational function was evaluated at a zero of its denominator.
struct PoleError : Error {
  using Error::Error;
};

/// p = 2 or 3 (ramified in the cyclotomic field).
struct RamifiedPrime : Error {
  using Error::Error;
};

/// A value has a denominator divisible by the reduction prime.
struct NotIntegral : Error {
  using Error::Error;
};

struct BadReduction : Error {
  using Error::Error;
};

struct ExcludedParameter : Error {
  using Error::Error;
};

struct SingularFiber : Error {
  using Error::Error;
};

struct UnresolvedIndeterminacy : Error {
  using Error::Error;
};

struct MixedModel : Error {
  MixedModel() : Error("points belong to different model instances") {}
};

struct DegreeError : Error {
  using Error::Error;
};

struct OffCurve : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  int line;
};

/// Precondition of a certificate procedure not met (e.g. too few primes).
struct CertificateError : Error {
  using Error::Error;
};

}  // namespace shadowkit
