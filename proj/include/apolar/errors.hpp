#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace apolar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or sequence text. `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Unsupported or inconsistent coefficient field (characteristic 2, mixed moduli).
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Operands live over rings with different numbers of variables.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// No truncation bound below the configured ceiling: the ideal is not m-primary.
class NotArtinian : public Error {
 public:
  using Error::Error;
};

class NotGorenstein : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its self-check. Always an implementation bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// The classifier turned a Hilbert function down; the message names the verdict.
class Rejected : public Error {
 public:
  Rejected(std::string verdict, const std::string& reason)
      : Error(verdict + ": " + reason), verdict_(std::move(verdict)) {}

  const std::string& verdict() const { return verdict_; }

 private:
  std::string verdict_;
};

class UnrealizableByPowers : public Error {
 public:
  using Error::Error;
};

}  // namespace apolar
