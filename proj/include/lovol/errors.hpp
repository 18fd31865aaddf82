#pragma once

#include <stdexcept>
#include <string>

namespace lovol {

// Split used by the CLI: input errors exit 1, numerical failures exit 2.
enum class ErrorKind { input, numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string type, const std::string& message)
      : std::runtime_error(message), kind_(kind), type_(std::move(type)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& type() const { return type_; }

 private:
  ErrorKind kind_;
  std::string type_;
};

struct BadParameterError : Error {
  explicit BadParameterError(const std::string& msg)
      : Error(ErrorKind::input, "BadParameter", msg) {}
};

struct NonPositiveDefiniteError : Error {
  explicit NonPositiveDefiniteError(const std::string& msg)
      : Error(ErrorKind::numerical, "NonPositiveDefinite", msg) {}
};

struct MissingDerivativesError : Error {
  explicit MissingDerivativesError(const std::string& msg)
      : Error(ErrorKind::input, "MissingDerivatives", msg) {}
};

struct UnsupportedWeightError : Error {
  explicit UnsupportedWeightError(const std::string& msg)
      : Error(ErrorKind::input, "UnsupportedWeight", msg) {}
};

struct CutoffTooSmallError : Error {
  CutoffTooSmallError(const std::string& msg, int required)
      : Error(ErrorKind::numerical, "CutoffTooSmall", msg), required_cutoff(required) {}
  int required_cutoff;
};

struct InsufficientLadderError : Error {
  explicit InsufficientLadderError(const std::string& msg)
      : Error(ErrorKind::numerical, "InsufficientLadder", msg) {}
};

}  // namespace lovol
