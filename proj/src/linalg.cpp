#include "opineq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace opineq {

namespace {

void require_finite(const ComplexMatrix& a, const char* where) {
  if (!a.allFinite()) raise(ErrorKind::NonFinite, std::string(where) + ": matrix has NaN or Inf entries");
}

// true when x should be listed strictly before y
bool schur_before(const Complex& x, const Complex& y, double tie) {
  const double mx = std::abs(x), my = std::abs(y);
  if (mx > my + tie) return true;
  if (my > mx + tie) return false;
  if (x.real() > y.real() + tie) return true;
  if (y.real() > x.real() + tie) return false;
  return x.imag() > y.imag() + tie;
}

// swap diagonal entries k, k+1 of upper triangular T by a Givens rotation
void swap_schur_pair(ComplexMatrix& t, ComplexMatrix& q, Eigen::Index k) {
  const Complex a = t(k, k), b = t(k + 1, k + 1), c = t(k, k + 1);
  Eigen::Vector2cd v(c, b - a);
  const double nv = v.norm();
  if (nv == 0.0) return;
  v /= nv;
  Eigen::Matrix2cd g;
  g << v(0), -std::conj(v(1)), v(1), std::conj(v(0));
  t.middleCols(k, 2) = t.middleCols(k, 2) * g;
  t.middleRows(k, 2) = g.adjoint() * t.middleRows(k, 2);
  q.middleCols(k, 2) = q.middleCols(k, 2) * g;
  t(k + 1, k) = 0.0;
  t(k, k) = b;
  t(k + 1, k + 1) = a;
}

}  // namespace

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix real_part(const ComplexMatrix& a) { return (a + a.adjoint()) * 0.5; }

ComplexMatrix imag_part(const ComplexMatrix& a) {
  return (a - a.adjoint()) * Complex(0.0, -0.5);
}

HermitianEigen hermitian_eig(const ComplexMatrix& a, bool want_vectors) {
  if (a.rows() != a.cols()) raise(ErrorKind::DimensionMismatch, "hermitian_eig: matrix is not square");
  require_finite(a, "hermitian_eig");
  const double scale = a.norm();
  const double skew = (a - a.adjoint()).norm();
  if (skew > kHermTol * std::max(scale, std::numeric_limits<double>::min()) && skew > 0.0) {
    raise(ErrorKind::NotHermitian, "hermitian_eig: skew part " + std::to_string(skew));
  }
  HermitianEigen out;
  const Eigen::Index n = a.rows();
  if (n == 0) {
    out.values.resize(0);
    if (want_vectors) out.vectors = ComplexMatrix(0, 0);
    return out;
  }
  const ComplexMatrix h = real_part(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, want_vectors ? Eigen::ComputeEigenvectors
                                                                  : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) raise(ErrorKind::NonConvergence, "hermitian_eig: solver failed");
  out.values = es.eigenvalues().reverse();
  if (want_vectors) out.vectors = es.eigenvectors().rowwise().reverse();
  return out;
}

SvdResult svd(const ComplexMatrix& a, bool want_vectors) {
  require_finite(a, "svd");
  SvdResult out;
  if (a.size() == 0) {
    out.singular_values.resize(0);
    if (want_vectors) {
      out.left = ComplexMatrix::Identity(a.rows(), a.rows());
      out.right = ComplexMatrix::Identity(a.cols(), a.cols());
    }
    return out;
  }
  const unsigned opts = want_vectors ? (Eigen::ComputeFullU | Eigen::ComputeFullV) : 0u;
  Eigen::JacobiSVD<ComplexMatrix> js(a, opts);
  if (js.info() != Eigen::Success) raise(ErrorKind::NonConvergence, "svd: solver failed");
  out.singular_values = js.singularValues();
  if (want_vectors) {
    out.left = js.matrixU();
    out.right = js.matrixV();
  }
  return out;
}

SchurEigen schur_eigenvalues(const ComplexMatrix& a, bool want_basis) {
  if (a.rows() != a.cols()) raise(ErrorKind::DimensionMismatch, "schur_eigenvalues: matrix is not square");
  require_finite(a, "schur_eigenvalues");
  const Eigen::Index n = a.rows();
  SchurEigen out;
  if (n == 0) {
    out.values.resize(0);
    if (want_basis) {
      out.basis = ComplexMatrix(0, 0);
      out.triangular = ComplexMatrix(0, 0);
    }
    return out;
  }
  Eigen::ComplexSchur<ComplexMatrix> cs(a, want_basis);
  if (cs.info() != Eigen::Success) raise(ErrorKind::NonConvergence, "schur_eigenvalues: QR iteration failed");
  ComplexMatrix t = cs.matrixT();
  t.triangularView<Eigen::StrictlyLower>().setZero();
  const double tie = 1e-12 * std::max(1.0, t.diagonal().cwiseAbs().maxCoeff());

  if (!want_basis) {
    ComplexVector d = t.diagonal();
    for (Eigen::Index pass = 0; pass < n; ++pass) {
      for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (schur_before(d(k + 1), d(k), tie)) std::swap(d(k), d(k + 1));
      }
    }
    out.values = d;
    return out;
  }

  ComplexMatrix q = cs.matrixU();
  for (Eigen::Index pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      if (schur_before(t(k + 1, k + 1), t(k, k), tie)) {
        swap_schur_pair(t, q, k);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  out.values = t.diagonal();
  out.basis = std::move(q);
  out.triangular = std::move(t);
  return out;
}

double rank_threshold(Eigen::Index rows, Eigen::Index cols, double largest_singular_value) {
  return static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon() *
         largest_singular_value;
}

int numeric_rank(const RealVector& s, Eigen::Index rows, Eigen::Index cols) {
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double tau = rank_threshold(rows, cols, s(0));
  int k = 0;
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    if (s(j) > tau) ++k;
  }
  return k;
}

int numeric_rank(const ComplexMatrix& a) {
  return numeric_rank(svd(a, false).singular_values, a.rows(), a.cols());
}

ComplexMatrix pseudoinverse(const ComplexMatrix& a) {
  require_finite(a, "pseudoinverse");
  if (a.size() == 0) return ComplexMatrix::Zero(a.cols(), a.rows());
  Eigen::JacobiSVD<ComplexMatrix> js(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (js.info() != Eigen::Success) raise(ErrorKind::NonConvergence, "pseudoinverse: svd failed");
  const RealVector& s = js.singularValues();
  const int k = numeric_rank(s, a.rows(), a.cols());
  RealVector inv = RealVector::Zero(s.size());
  for (int j = 0; j < k; ++j) inv(j) = 1.0 / s(j);
  return js.matrixV() * inv.asDiagonal() * js.matrixU().adjoint();
}

ComplexMatrix range_projector(const ComplexMatrix& a) {
  const SvdResult r = svd(a, true);
  const int k = numeric_rank(r.singular_values, a.rows(), a.cols());
  const ComplexMatrix uk = r.left->leftCols(k);
  return uk * uk.adjoint();
}

PsdFactor::PsdFactor(const ComplexMatrix& a) {
  HermitianEigen he = hermitian_eig(a, true);
  values_ = std::move(he.values);
  vectors_ = std::move(*he.vectors);
  if (values_.size() == 0) return;
  const double scale = values_.cwiseAbs().maxCoeff();
  for (Eigen::Index j = 0; j < values_.size(); ++j) {
    if (values_(j) < 0.0) {
      if (values_(j) < -kPsdTol * scale) {
        raise(ErrorKind::NotPSD, "eigenvalue " + std::to_string(values_(j)) + " below clamp window");
      }
      values_(j) = 0.0;
    }
  }
}

ComplexMatrix PsdFactor::apply(const std::function<double(double)>& f) const {
  RealVector fv(values_.size());
  for (Eigen::Index j = 0; j < values_.size(); ++j) fv(j) = f(values_(j));
  return vectors_ * fv.asDiagonal() * vectors_.adjoint();
}

ComplexMatrix PsdFactor::power(double exponent) const {
  return apply([exponent](double x) { return std::pow(x, exponent); });
}

ComplexMatrix psd_spectral_function(const ComplexMatrix& a, const std::function<double(double)>& f) {
  return PsdFactor(a).apply(f);
}

ComplexMatrix psd_power(const ComplexMatrix& a, double exponent) { return PsdFactor(a).power(exponent); }

AbsFactors::AbsFactors(const ComplexMatrix& a) {
  SvdResult r = svd(a, true);
  s_ = std::move(r.singular_values);
  u_ = std::move(*r.left);
  v_ = std::move(*r.right);
}

namespace {

ComplexMatrix powered_gram(const ComplexMatrix& w, const RealVector& s, double exponent) {
  RealVector d = RealVector::Zero(w.cols());
  for (Eigen::Index j = 0; j < d.size(); ++j) {
    const double sj = j < s.size() ? s(j) : 0.0;
    d(j) = std::pow(sj, exponent);
  }
  return w * d.asDiagonal() * w.adjoint();
}

}  // namespace

ComplexMatrix AbsFactors::abs_power(double exponent) const { return powered_gram(v_, s_, exponent); }

ComplexMatrix AbsFactors::abs_adjoint_power(double exponent) const {
  return powered_gram(u_, s_, exponent);
}

ComplexMatrix abs_operator(const ComplexMatrix& a) { return AbsFactors(a).abs_power(1.0); }

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& b,
                       const ComplexMatrix& y) {
  if (a.rows() != x.rows() || b.rows() != y.rows() || a.cols() != b.cols() || x.cols() != y.cols()) {
    raise(ErrorKind::DimensionMismatch, "block2x2: blocks are not conformable");
  }
  ComplexMatrix out(a.rows() + b.rows(), a.cols() + x.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.topRightCorner(x.rows(), x.cols()) = x;
  out.bottomLeftCorner(b.rows(), b.cols()) = b;
  out.bottomRightCorner(y.rows(), y.cols()) = y;
  return out;
}

ComplexMatrix shift_matrix(int n) {
  if (n < 1) raise(ErrorKind::BadSize, "shift_matrix: n must be positive");
  ComplexMatrix j = ComplexMatrix::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) j(k, k + 1) = 1.0;
  return j;
}

}  // namespace opineq
