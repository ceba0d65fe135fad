#pragma once

#include <stdexcept>
#include <string>

namespace stanley {

/// Base of all library errors. `kind()` is a stable machine-readable tag
/// used by the CLI error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse", what) {}
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error("precondition", what) {}
};

/// Enumeration or exhaustive-search size limits.
class LimitError : public Error {
 public:
  explicit LimitError(const std::string& what) : Error("limit", what) {}
};

/// A construction produced something that does not verify. Always a bug.
class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& what)
      : Error("verification", what) {}
};

}  // namespace stanley
