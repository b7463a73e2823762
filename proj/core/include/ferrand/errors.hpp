#pragma once

#include <stdexcept>
#include <string>

namespace ferrand {

/// Base class for every error raised by the library. The CLI maps the
/// concrete subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible input (bad polynomial text, non-surjective mu).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured degree or t cap was reached before a stopping certificate.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical self-check failed. Always indicates a bug or a
/// counterexample, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ferrand
