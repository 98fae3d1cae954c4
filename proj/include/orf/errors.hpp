#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orf {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySequence : Error {
  EmptySequence() : Error("pole sequence is empty") {}
};

struct WrongHalfPlane : Error {
  std::size_t index;
  explicit WrongHalfPlane(std::size_t idx)
      : Error("pole at index " + std::to_string(idx) +
              " lies outside the declared open half-plane"),
        index(idx) {}
};

struct PrefixTooShort : Error {
  PrefixTooShort(int requested, std::size_t available)
      : Error("prefix length " + std::to_string(requested) +
              " exceeds stored poles (" + std::to_string(available) + ")") {}
};

struct PoleHit : Error {
  std::complex<double> where;
  explicit PoleHit(std::complex<double> z)
      : Error("evaluation point coincides with a pole"), where(z) {}
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct DegenerateArguments : Error {
  using Error::Error;
};

struct ZeroWidth : Error {
  ZeroWidth() : Error("mu requires y != 0; use mu_limit for the y -> 0 value") {}
};

struct InvalidExponent : Error {
  explicit InvalidExponent(double p)
      : Error("Lp exponent must exceed 1, got " + std::to_string(p)) {}
};

// Carries the partial result so callers can degrade gracefully.
struct ToleranceNotMet : Error {
  std::complex<double> value;
  double abs_error_estimate;
  std::int64_t nodes_used;
  std::int64_t node_budget;
  ToleranceNotMet(std::complex<double> v, double est, std::int64_t used,
                  std::int64_t budget)
      : Error("quadrature node budget " + std::to_string(budget) +
              " exhausted; achieved error estimate " + std::to_string(est)),
        value(v), abs_error_estimate(est), nodes_used(used),
        node_budget(budget) {}
};

struct ConfigParseError : Error {
  int line;
  ConfigParseError(int line_no, const std::string& message)
      : Error("config line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace orf
