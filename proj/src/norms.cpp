#include "opineq/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace opineq {

SchattenP::SchattenP(double p) : p_(p), inf_(false) {
  if (std::isinf(p) && p > 0) {
    inf_ = true;
    p_ = 0.0;
    return;
  }
  if (!(p > 0.0) || !std::isfinite(p)) raise(ErrorKind::BadExponents, "Schatten order must lie in (0, inf]");
}

double SchattenP::finite() const {
  if (inf_) raise(ErrorKind::BadExponents, "finite Schatten order required");
  return p_;
}

std::string SchattenP::label() const {
  if (inf_) return "inf";
  std::ostringstream os;
  os << p_;
  return os.str();
}

SchattenP parse_schatten_p(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Infinity" || text == "INF") return SchattenP::inf();
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') raise(ErrorKind::BadExponents, "cannot parse Schatten order '" + text + "'");
  return SchattenP(v);
}

double schatten_power_from_singular_values(const RealVector& s, double p) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    if (s(j) > 0.0) acc += std::pow(s(j), p);
  }
  return acc;
}

double schatten_from_singular_values(const RealVector& s, SchattenP p) {
  if (s.size() == 0) return 0.0;
  const double s1 = s.maxCoeff();
  if (s1 <= 0.0) return 0.0;
  if (p.is_inf()) return s1;
  const double q = p.finite();
  double acc = 0.0;
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    if (s(j) > 0.0) acc += std::pow(s(j) / s1, q);
  }
  return s1 * std::pow(acc, 1.0 / q);
}

double schatten_norm(const ComplexMatrix& a, SchattenP p) {
  return schatten_from_singular_values(svd(a).singular_values, p);
}

double schatten_power(const ComplexMatrix& a, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) raise(ErrorKind::BadExponents, "schatten_power needs finite p > 0");
  return schatten_power_from_singular_values(svd(a).singular_values, p);
}

double operator_norm(const ComplexMatrix& a) { return schatten_norm(a, SchattenP::inf()); }

double spectral_radius(const ComplexMatrix& a) {
  const SchurEigen se = schur_eigenvalues(a);
  if (se.values.size() == 0) return 0.0;
  return se.values.cwiseAbs().maxCoeff();
}

void require_orthonormal(const ComplexMatrix& x, double tol) {
  const ComplexMatrix gram = x.adjoint() * x;
  const ComplexMatrix id = ComplexMatrix::Identity(x.cols(), x.cols());
  const double dev = x.cols() == 0 ? 0.0 : (gram - id).cwiseAbs().maxCoeff();
  if (!(dev <= tol)) raise(ErrorKind::NotOrthonormal, "columns deviate from orthonormality by " + std::to_string(dev));
}

double orthonormal_pair_sum(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& y,
                            SchattenP p) {
  if (p.is_inf() || p.finite() < 1.0) raise(ErrorKind::BadExponents, "orthonormal_pair_sum needs finite p >= 1");
  if (x.rows() != a.cols() || y.rows() != a.rows()) raise(ErrorKind::DimensionMismatch, "orthonormal_pair_sum: row counts");
  if (x.cols() != y.cols()) raise(ErrorKind::DimensionMismatch, "orthonormal_pair_sum: column counts differ");
  require_orthonormal(x);
  require_orthonormal(y);
  const ComplexMatrix ax = a * x;
  RealVector m(x.cols());
  for (Eigen::Index k = 0; k < x.cols(); ++k) m(k) = std::abs(y.col(k).dot(ax.col(k)));
  return schatten_from_singular_values(m, p);
}

double direct_sum_schatten(double norm_a, double norm_b, SchattenP p) {
  if (norm_a < 0.0 || norm_b < 0.0) raise(ErrorKind::BadExponents, "direct_sum_schatten: negative norm");
  const double m = std::max(norm_a, norm_b);
  if (m == 0.0 || p.is_inf()) return m;
  const double q = p.finite();
  return m * std::pow(std::pow(norm_a / m, q) + std::pow(norm_b / m, q), 1.0 / q);
}

}  // namespace opineq
