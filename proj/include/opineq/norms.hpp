#pragma once

#include <limits>
#include <string>

#include "opineq/linalg.hpp"

namespace opineq {

/// Norm order p in (0, inf]; infinity is a distinct state and selects the operator norm.
class SchattenP {
 public:
  explicit SchattenP(double p);
  static SchattenP inf() { return SchattenP(); }

  bool is_inf() const noexcept { return inf_; }
  /// +infinity for the operator norm
  double value() const noexcept { return inf_ ? std::numeric_limits<double>::infinity() : p_; }
  /// Finite order; throws BadExponents for infinity.
  double finite() const;
  std::string label() const;

  friend bool operator==(const SchattenP& a, const SchattenP& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.p_ == b.p_);
  }

 private:
  SchattenP() : p_(0.0), inf_(true) {}
  double p_;
  bool inf_;
};

/// Accepts "inf", "infinity" or a positive decimal.
SchattenP parse_schatten_p(const std::string& text);

struct RadiusEstimate {
  double value = 0.0;
  double certified_error = 0.0;
  int evaluations = 0;
};

double schatten_from_singular_values(const RealVector& s, SchattenP p);
double schatten_norm(const ComplexMatrix& a, SchattenP p);
/// sum of s_j^p, the p-th power of the Schatten norm without the final root
double schatten_power(const ComplexMatrix& a, double p);
double schatten_power_from_singular_values(const RealVector& s, double p);
double operator_norm(const ComplexMatrix& a);
double spectral_radius(const ComplexMatrix& a);

/// Default tolerance used when none is given: 1e-8 * max(1, ||A||).
double default_radius_tol(const ComplexMatrix& a);

/// w(A) = max over theta of lambda_max(Re(e^{i theta} A)), with a certified error bound.
RadiusEstimate numerical_radius(const ComplexMatrix& a);
RadiusEstimate numerical_radius(const ComplexMatrix& a, double tol);

/// max over unimodular lambda of ||A + lambda B||.
RadiusEstimate max_unimodular_norm(const ComplexMatrix& a, const ComplexMatrix& b);
RadiusEstimate max_unimodular_norm(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// (sum_k |<A x_k, y_k>|^p)^{1/p} over the columns of X and Y.
double orthonormal_pair_sum(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& y,
                            SchattenP p);

/// ||A (+) B||_p from ||A||_p and ||B||_p.
double direct_sum_schatten(double norm_a, double norm_b, SchattenP p);

/// Throws NotOrthonormal unless ||X*X - I||_max <= tol.
void require_orthonormal(const ComplexMatrix& x, double tol = 1e-10);

}  // namespace opineq
