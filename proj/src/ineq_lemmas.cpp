#include <algorithm>
#include <cmath>

#include "ineq_common.hpp"

namespace opineq {

using namespace detail;

namespace {

// <u, v> = v* u
Complex inner(const ComplexVector& u, const ComplexVector& v) { return v.dot(u); }

ComplexMatrix as_matrix(const ComplexVector& v) { return v; }

void require_unit(const ComplexVector& v) { require_orthonormal(as_matrix(v)); }

}  // namespace

BoundReport check_mixed_schwarz(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                                double alpha) {
  require_square(a, "check_mixed_schwarz");
  require_unit_interval(alpha, "alpha");
  if (x.size() != a.cols() || y.size() != a.rows()) {
    raise(ErrorKind::DimensionMismatch, "check_mixed_schwarz: vectors do not fit A");
  }
  const AbsFactors fa(a);
  const Params params{{"alpha", format_double(alpha)}};
  const ComplexMatrix xm = as_matrix(x), ym = as_matrix(y);
  const double lhs = std::norm(inner(a * x, y));
  const double rx = inner(fa.abs_power(2.0 * alpha) * x, x).real();
  const double ry = inner(fa.abs_adjoint_power(2.0 * (1.0 - alpha)) * y, y).real();
  return make_report("mixed-schwarz", lhs, std::max(0.0, rx) * std::max(0.0, ry), params,
                     digest_of({&a, &xm, &ym}, params));
}

BoundReport check_mccarthy(const ComplexMatrix& p_psd, const ComplexVector& x, double p) {
  require_square(p_psd, "check_mccarthy");
  if (!(p >= 1.0) || !std::isfinite(p)) raise(ErrorKind::BadExponents, "check_mccarthy needs finite p >= 1");
  if (x.size() != p_psd.rows()) raise(ErrorKind::DimensionMismatch, "check_mccarthy: vector does not fit");
  require_unit(x);
  const PsdFactor f(p_psd);
  const Params params{{"p", format_double(p)}};
  const ComplexMatrix xm = as_matrix(x);
  const double base = std::max(0.0, inner(f.power(1.0) * x, x).real());
  const double rhs = inner(f.power(p) * x, x).real();
  return make_report("mccarthy", std::pow(base, p), rhs, params, digest_of({&p_psd, &xm}, params));
}

BoundReport check_buzano(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e) {
  if (x.size() != y.size() || x.size() != e.size()) {
    raise(ErrorKind::DimensionMismatch, "check_buzano: vectors differ in length");
  }
  require_unit(e);
  const ComplexMatrix xm = as_matrix(x), ym = as_matrix(y), em = as_matrix(e);
  const double lhs = std::abs(inner(x, e) * inner(e, y));
  const double rhs = 0.5 * (x.norm() * y.norm() + std::abs(inner(x, y)));
  return make_report("buzano", lhs, rhs, {}, digest_of({&xm, &ym, &em}, {}));
}

}  // namespace opineq
