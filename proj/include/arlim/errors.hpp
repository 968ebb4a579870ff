#pragma once

#include <stdexcept>
#include <string>

namespace arlim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The lagged regressor has (numerically) zero spread, so Δ3 vanishes.
class SingularDesign : public Error {
 public:
  using Error::Error;
};

/// An explosive path would leave the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A root search could not establish a bracket (b_n or b_0 search).
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace arlim
