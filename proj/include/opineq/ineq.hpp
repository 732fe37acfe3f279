#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opineq/norms.hpp"
#include "opineq/report.hpp"

namespace opineq {

/// Exponent of the power pair f(t) = t^alpha, g(t) = t^(1-alpha).
struct PowerPair {
  double alpha = 0.5;
  explicit PowerPair(double a);
};

/// Radii inside checks are computed to this relative accuracy.
inline constexpr double kCheckRadiusTol = 1e-9;
double check_radius(const ComplexMatrix& a);

// Direct-sum and product forms
BoundReport check_agm(const ComplexMatrix& a, const ComplexMatrix& b, SchattenP p);
Reports check_sum_product(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                          const ComplexMatrix& y, SchattenP p);
Reports check_commutator_family(const ComplexMatrix& a, const ComplexMatrix& b, int sign, SchattenP p);
Reports check_square_bounds(const ComplexMatrix& a, SchattenP p);
Reports check_moore_penrose(const ComplexMatrix& a, SchattenP p);
Reports check_positive_sum_split(const ComplexMatrix& x, const ComplexMatrix& y, double alpha, double t,
                                 SchattenP p);
Reports check_weighted_product(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                               const ComplexMatrix& y, SchattenP p);
BoundReport check_selfadjoint_product_lemma(const ComplexMatrix& a, const ComplexMatrix& b, SchattenP p);

// Orthonormal-set and eigenvalue sums
Reports check_rank_schatten(const ComplexMatrix& a, double p, double q);
Reports check_orthonormal_sums(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& y,
                               double alpha, double p, double q);
Reports check_weyl_chain(const ComplexMatrix& a, double p);
Reports check_schatten_monotone(const ComplexMatrix& a, SchattenP p, SchattenP q,
                                const std::vector<SchattenP>& grid);

// Numerical radius and operator norm
Reports check_positive_sum_norm(const ComplexMatrix& x, const ComplexMatrix& y, double alpha, double t);
BoundReport check_block_radius_lemma(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& b,
                                     const ComplexMatrix& y);
Reports check_numrad_bounds(const ComplexMatrix& a, double alpha, double t);
/// Same reports over a list of (alpha, t) points, sharing one w(A); the
/// parameter-free bounds are emitted once.
Reports check_numrad_grid(const ComplexMatrix& a, const std::vector<std::pair<double, double>>& grid);
Reports check_sandwich(const ComplexMatrix& a);
Reports check_triangle_refined(const ComplexMatrix& a, const ComplexMatrix& b);
Reports check_parallelism(const ComplexMatrix& a, const ComplexMatrix& b);

// Scalar lemmas
BoundReport check_mixed_schwarz(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                                double alpha);
BoundReport check_mccarthy(const ComplexMatrix& p_psd, const ComplexVector& x, double p);
BoundReport check_buzano(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e);

struct CatalogEntry {
  std::string check_id;
  std::string family;
  std::string statement;
};

/// Every check id emitted by the functions above with a plain statement of the inequality.
const std::vector<CatalogEntry>& check_catalog();
std::string catalog_markdown();

}  // namespace opineq
