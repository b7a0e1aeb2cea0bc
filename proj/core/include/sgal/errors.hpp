#pragma once

#include <stdexcept>
#include <string>

namespace sgal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input could not be parsed or is structurally malformed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size limit was exceeded; `limit` names the bound that was hit.
class GuardrailError : public Error {
 public:
  GuardrailError(const std::string& what, std::string limit)
      : Error(what), limit_(std::move(limit)) {}
  const std::string& limit() const noexcept { return limit_; }

 private:
  std::string limit_;
};

}  // namespace sgal
