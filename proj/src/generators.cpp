#include "opineq/generators.hpp"

#include <cmath>
#include <string>

namespace opineq {

namespace {

void require_size(int n, const char* where) {
  if (n < 1) raise(ErrorKind::BadSize, std::string(where) + ": size must be positive");
}

}  // namespace

ComplexMatrix gen_ginibre(int rows, int cols, Rng& rng) {
  require_size(rows, "gen_ginibre");
  require_size(cols, "gen_ginibre");
  ComplexMatrix a(rows, cols);
  // row-major fill so the stream order matches the text format
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      a(i, j) = Complex(re, im);
    }
  }
  return a;
}

ComplexMatrix gen_ginibre(int n, Rng& rng) { return gen_ginibre(n, n, rng); }

ComplexVector gen_complex_vector(int n, Rng& rng) { return gen_ginibre(n, 1, rng).col(0); }

ComplexVector gen_unit_vector(int n, Rng& rng) {
  ComplexVector v = gen_complex_vector(n, rng);
  return v / v.norm();
}

ComplexMatrix gen_psd(int n, Rng& rng) {
  const ComplexMatrix g = gen_ginibre(n, rng);
  return g.adjoint() * g;
}

ComplexMatrix gen_fixed_rank(int n, int r, Rng& rng) {
  require_size(n, "gen_fixed_rank");
  if (r < 1 || r > n) raise(ErrorKind::BadRank, "gen_fixed_rank: rank must lie in 1..n");
  for (int attempt = 0; attempt < 8; ++attempt) {
    const ComplexMatrix a = gen_ginibre(n, r, rng) * gen_ginibre(r, n, rng);
    if (numeric_rank(a) == r) return a;
  }
  raise(ErrorKind::BadRank, "gen_fixed_rank: could not reach rank " + std::to_string(r));
}

ComplexMatrix gen_unitary(int n, Rng& rng) {
  const ComplexMatrix g = gen_ginibre(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const double m = std::abs(r(j, j));
    if (m > 0.0) q.col(j) *= r(j, j) / m;
  }
  return q;
}

ComplexMatrix gen_orthonormal_set(int n, int k, Rng& rng) {
  require_size(n, "gen_orthonormal_set");
  if (k < 1 || k > n) raise(ErrorKind::BadSize, "gen_orthonormal_set: need 1 <= k <= n");
  return gen_unitary(n, rng).leftCols(k);
}

ComplexMatrix gen_normal(int n, Rng& rng) {
  const ComplexMatrix u = gen_unitary(n, rng);
  const ComplexVector d = gen_complex_vector(n, rng);
  return u * d.asDiagonal() * u.adjoint();
}

ComplexMatrix gen_hermitian(int n, Rng& rng) {
  const ComplexMatrix g = gen_ginibre(n, rng);
  return real_part(g);
}

ComplexMatrix gen_nilpotent(int n) {
  require_size(n, "gen_nilpotent");
  return shift_matrix(n);
}

}  // namespace opineq
