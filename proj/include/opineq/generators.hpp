#pragma once

#include "opineq/linalg.hpp"
#include "opineq/rng.hpp"

namespace opineq {

/// Entries re, im ~ N(0, 1) independently.
ComplexMatrix gen_ginibre(int rows, int cols, Rng& rng);
ComplexMatrix gen_ginibre(int n, Rng& rng);
ComplexVector gen_complex_vector(int n, Rng& rng);
ComplexVector gen_unit_vector(int n, Rng& rng);

/// G* G for a square Ginibre G.
ComplexMatrix gen_psd(int n, Rng& rng);
/// n x r times r x n Ginibre factors; the numeric rank is asserted.
ComplexMatrix gen_fixed_rank(int n, int r, Rng& rng);
/// U D U* with Haar-like U and complex Gaussian diagonal D.
ComplexMatrix gen_normal(int n, Rng& rng);
ComplexMatrix gen_hermitian(int n, Rng& rng);
ComplexMatrix gen_nilpotent(int n);
/// QR of a Ginibre matrix with the phases of diag(R) folded into Q.
ComplexMatrix gen_unitary(int n, Rng& rng);
ComplexMatrix gen_orthonormal_set(int n, int k, Rng& rng);

}  // namespace opineq
