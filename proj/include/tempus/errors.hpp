#pragma once

#include <stdexcept>
#include <string>

namespace tempus {

// Base for every library error; the CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};
struct ZeroResponse : Error {
  using Error::Error;
};
// Signals the delta-supported on-shell case of the photon propagator; the
// delta weight is metadata on the signal, never a numeric result.
struct OnShellError : Error {
  using Error::Error;
};
struct PoleError : Error {
  using Error::Error;
};
struct ZeroDetuningError : Error {
  using Error::Error;
};
struct ZeroEnergyError : Error {
  using Error::Error;
};
struct NegativeTimeError : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NonHermitianError : Error {
  using Error::Error;
};
struct NonUnitStateError : Error {
  using Error::Error;
};
struct EmptySliceError : Error {
  using Error::Error;
};
struct NonPositiveError : Error {
  using Error::Error;
};
struct UnderdeterminedError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct MissingFieldError : Error {
  using Error::Error;
};
struct TieError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

}  // namespace tempus
