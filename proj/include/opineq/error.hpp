#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opineq {

enum class ErrorKind {
  NotHermitian,
  NotPSD,
  NonConvergence,
  NonFinite,
  DimensionMismatch,
  NotOrthonormal,
  BadExponents,
  ZeroOperand,
  NotSelfadjointProduct,
  BadPolynomial,
  ParseError,
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  BadRank,
  BadSize,
  BadConfig,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);

  int line() const noexcept { return line_; }

 private:
  int line_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace opineq
