#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace srss {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rejected input: bad key material, malformed files, out-of-range arguments.
struct ValidationError : Error {
  using Error::Error;
};

/// Failure while computing on inputs that passed validation.
struct ComputeError : Error {
  using Error::Error;
};

struct InvalidKey : ValidationError {
  using ValidationError::ValidationError;
};

struct InvalidParams : ValidationError {
  using ValidationError::ValidationError;
};

/// A 256-entry table is not a permutation of 0..255.
struct NotBijective : ValidationError {
  NotBijective(std::uint8_t duplicate, const std::string& msg)
      : ValidationError(msg), duplicate_value(duplicate) {}
  std::uint8_t duplicate_value;
};

struct IndexOutOfRange : ValidationError {
  using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

struct EmptyImage : ValidationError {
  using ValidationError::ValidationError;
};

/// No pixel pair fits the requested co-occurrence offset.
struct NoPairs : ValidationError {
  using ValidationError::ValidationError;
};

/// The logistic orbit left (0,1) and collapsed; the keystream is unusable.
struct DegenerateOrbit : ComputeError {
  using ComputeError::ComputeError;
};

struct InvalidTrit : ComputeError {
  using ComputeError::ComputeError;
};

}  // namespace srss
