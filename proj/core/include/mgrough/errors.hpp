#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgrough {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands were built over different universes.
class UniverseMismatch : public Error {
 public:
  UniverseMismatch() : Error("operands belong to different universes") {}
  explicit UniverseMismatch(const std::string& what) : Error(what) {}
};

/// A relation or covering failed its structural invariant.
class InvalidRelation : public Error {
 public:
  using Error::Error;
};

/// A poset failed validation (reflexivity, antisymmetry, transitivity, duplicates).
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured limit.
class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(const std::string& what, std::size_t requested, std::size_t limit)
      : Error(what + ": size " + std::to_string(requested) + " exceeds limit " +
              std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// Malformed relation text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mgrough
