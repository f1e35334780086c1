#ifndef SCMOM_ERRORS_HPP
#define SCMOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scmom {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text could not be parsed (moment grammar, config files).
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
  std::size_t pos;
};

/// A moment required for evaluation is absent from a phase-space point.
struct MissingMomentError : Error {
  using Error::Error;
};

/// A chart was evaluated outside its domain of validity.
struct ChartDomainError : Error {
  using Error::Error;
};

/// Root-system analysis did not produce the expected algebra type.
struct ClassificationError : Error {
  using Error::Error;
};

/// Adaptive integration could not proceed (step failure, NaN).
struct IntegrationError : Error {
  using Error::Error;
};

/// The spectral oracle failed its basis-size self-consistency check.
struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace scmom

#endif
