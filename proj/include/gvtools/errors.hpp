#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gvt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or argument outside an operation's domain.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the memory budget.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t bound) : Error(what), bound_(bound) {}
  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

/// A truncated value is no longer trusted at an exponent the caller needs.
class ValidityExhausted : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};

/// Strict mode: a recovered invariant is not an integer.
class StrictIntegrality : public Error {
 public:
  using Error::Error;
};

class NotSuperRigidShape : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Row or flag disagrees with the file header.
class DimensionMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace gvt
