#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace softgt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands do not share a frame, a set escapes its carrier, or a name is unknown.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (non-strong space, non-cover, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exact search would exceed its configured size or node budget.
class ThresholdExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

/// A truncation family produced a size that differs from its expected growth law.
class CertificationFailure : public Error {
 public:
  CertificationFailure(std::string family, int index, const std::string& what)
      : Error("certification of " + family + " failed at n=" + std::to_string(index) + ": " + what),
        family_(std::move(family)),
        index_(index) {}

  const std::string& family() const noexcept { return family_; }
  int index() const noexcept { return index_; }

 private:
  std::string family_;
  int index_;
};

}  // namespace softgt
