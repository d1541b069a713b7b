#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supalg {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (JSON files, rational literals).  Carries a
/// 1-based line/column position when one is known; (0,0) means "whole input".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t col = 0)
      : Error(format(what, line, col)), line_(line), col_(col) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return col_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t col) {
    if (line == 0) return what;
    return what + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")";
  }
  std::size_t line_;
  std::size_t col_;
};

/// Well-formed input whose content violates a documented invariant
/// (grading, normalization, duplicate keys, out-of-range indices, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The filesystem said no.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Operands with incompatible shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on mathematical membership failed (e.g. a map passed to a
/// transform is not actually a solution of the relevant equations).
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// "Cannot happen" per the underlying theory; raised instead of silently
/// producing wrong output if an internal consistency check ever fails.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace supalg
