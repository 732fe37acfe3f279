#include "opineq/error.hpp"

namespace opineq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::BadExponents: return "BadExponents";
    case ErrorKind::ZeroOperand: return "ZeroOperand";
    case ErrorKind::NotSelfadjointProduct: return "NotSelfadjointProduct";
    case ErrorKind::BadPolynomial: return "BadPolynomial";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(int line, const std::string& message)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace opineq
