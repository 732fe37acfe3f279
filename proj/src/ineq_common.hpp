#pragma once

#include <cmath>
#include <string>

#include "opineq/ineq.hpp"

namespace opineq::detail {

inline std::string p_label(SchattenP p) { return p.label(); }

inline Params with_p(SchattenP p) { return {{"p", p.label()}}; }

inline double snorm(const ComplexMatrix& a, SchattenP p) { return schatten_norm(a, p); }
inline double opnorm(const ComplexMatrix& a) { return operator_norm(a); }

/// ||C (+) C||_p = 2^{1/p} ||C||_p
inline double doubled(double norm_c, SchattenP p) {
  return p.is_inf() ? norm_c : std::pow(2.0, 1.0 / p.finite()) * norm_c;
}

inline void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(ErrorKind::DimensionMismatch, std::string(where) + ": operands differ in shape");
  }
}

inline void require_square(const ComplexMatrix& a, const char* where) {
  if (a.rows() != a.cols()) raise(ErrorKind::DimensionMismatch, std::string(where) + ": operand is not square");
}

inline void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) raise(ErrorKind::BadExponents, std::string(name) + " must lie in [0, 1]");
}

inline void require_norm_order(SchattenP p, const char* where) {
  if (!p.is_inf() && p.finite() < 1.0) {
    raise(ErrorKind::BadExponents, std::string(where) + ": quasi-norm orders are excluded");
  }
}

inline bool is_zero(const ComplexMatrix& a) { return a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0; }

std::uint64_t digest_of(std::initializer_list<const ComplexMatrix*> mats, const Params& params);

}  // namespace opineq::detail
