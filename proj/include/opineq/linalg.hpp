#pragma once

#include <complex>
#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "opineq/error.hpp"

namespace opineq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Relative residual budget for every decomposition.
inline constexpr double kDecompTol = 1e-10;
/// Eigenvalues in [-kPsdTol*||A||, 0) are clamped to zero before spectral functions.
inline constexpr double kPsdTol = 1e-10;
/// Relative skew-Hermitian part tolerated by hermitian_eig and selfadjointness checks.
inline constexpr double kHermTol = 1e-9;

struct HermitianEigen {
  RealVector values;                    // descending
  std::optional<ComplexMatrix> vectors; // columns match values
};

/// Complex Schur form A = Q T Q*. Eigenvalues are ordered by decreasing modulus,
/// ties broken by decreasing real part, then decreasing imaginary part. When the
/// basis is requested, diag(T) is exactly the returned list.
struct SchurEigen {
  ComplexVector values;
  std::optional<ComplexMatrix> basis;
  std::optional<ComplexMatrix> triangular;
};

struct SvdResult {
  RealVector singular_values;  // descending, min(rows, cols) entries
  std::optional<ComplexMatrix> left;   // full rows x rows
  std::optional<ComplexMatrix> right;  // full cols x cols
};

ComplexMatrix adjoint(const ComplexMatrix& a);
/// (A + A*) / 2
ComplexMatrix real_part(const ComplexMatrix& a);
/// (A - A*) / 2i
ComplexMatrix imag_part(const ComplexMatrix& a);

HermitianEigen hermitian_eig(const ComplexMatrix& a, bool want_vectors = false);
SvdResult svd(const ComplexMatrix& a, bool want_vectors = false);
SchurEigen schur_eigenvalues(const ComplexMatrix& a, bool want_basis = false);

/// Moore-Penrose inverse through the SVD, discarding singular values at or below
/// the numeric-rank threshold.
ComplexMatrix pseudoinverse(const ComplexMatrix& a);

double rank_threshold(Eigen::Index rows, Eigen::Index cols, double largest_singular_value);
int numeric_rank(const ComplexMatrix& a);
int numeric_rank(const RealVector& singular_values, Eigen::Index rows, Eigen::Index cols);

/// Orthogonal projector onto range(A), built from the leading left singular vectors.
ComplexMatrix range_projector(const ComplexMatrix& a);

/// f applied to the spectrum of a Hermitian PSD matrix; t^0 is taken as 1.
ComplexMatrix psd_spectral_function(const ComplexMatrix& a, const std::function<double(double)>& f);
ComplexMatrix psd_power(const ComplexMatrix& a, double exponent);

/// |A| = (A*A)^{1/2}, computed from the SVD as V S V*.
ComplexMatrix abs_operator(const ComplexMatrix& a);

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);
/// Dense assembly of [[A, X], [B, Y]].
ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& b,
                       const ComplexMatrix& y);

ComplexMatrix shift_matrix(int n);

/// Eigendecomposition of a PSD matrix kept around so several spectral functions
/// can be applied without re-solving.
class PsdFactor {
 public:
  explicit PsdFactor(const ComplexMatrix& a);

  ComplexMatrix apply(const std::function<double(double)>& f) const;
  ComplexMatrix power(double exponent) const;
  const RealVector& eigenvalues() const { return values_; }

 private:
  ComplexMatrix vectors_;
  RealVector values_;  // clamped, descending
};

/// Polar factors of A from one SVD: |A|^g = V S^g V*, |A*|^g = U S^g U*.
class AbsFactors {
 public:
  explicit AbsFactors(const ComplexMatrix& a);

  ComplexMatrix abs_power(double exponent) const;
  ComplexMatrix abs_adjoint_power(double exponent) const;
  const RealVector& singular_values() const { return s_; }

 private:
  ComplexMatrix u_;
  ComplexMatrix v_;
  RealVector s_;
};

}  // namespace opineq
