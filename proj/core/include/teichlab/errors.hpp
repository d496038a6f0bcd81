#pragma once

#include <stdexcept>
#include <string>

namespace teichlab {

// Every error carries a short machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& message)
      : Error("input_error", message) {}

 protected:
  InputError(std::string code, const std::string& message)
      : Error(std::move(code), message) {}
};

// A BlockPoint outside the open unit ball for the given modulus.
class InvariantError : public InputError {
 public:
  explicit InvariantError(const std::string& message)
      : InputError("invariant_violation", message) {}
};

class DegenerateSegmentError : public Error {
 public:
  explicit DegenerateSegmentError(const std::string& message)
      : Error("degenerate_segment", message) {}
};

class InvalidSigmaError : public Error {
 public:
  InvalidSigmaError(const std::string& message, double t)
      : Error("invalid_sigma", message), t_(t) {}

  /// Parameter value at which the violation was observed.
  double t() const noexcept { return t_; }

 private:
  double t_;
};

class ConstructionError : public Error {
 public:
  explicit ConstructionError(const std::string& message)
      : Error("construction_failed", message) {}
};

class ExistenceUnknownError : public Error {
 public:
  explicit ExistenceUnknownError(const std::string& message)
      : Error("existence_unknown", message) {}
};

}  // namespace teichlab
