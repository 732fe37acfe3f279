#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "opineq/generators.hpp"
#include "opineq/ineq.hpp"
#include "test_util.hpp"

using namespace opineq;
using opineq::test::all_hold;
using opineq::test::diag;
using opineq::test::find;
using opineq::test::oracle_singular_values;

namespace {

const double kPi = std::acos(-1.0);
const SchattenP kInf = SchattenP::inf();

double oracle_norm(const ComplexMatrix& a, double p) {
  const RealVector s = oracle_singular_values(a);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
  return std::pow(acc, 1.0 / p);
}

double eig_power_sum(const ComplexMatrix& a, double p) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(a, false);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) acc += std::pow(std::abs(es.eigenvalues()(i)), p);
  return acc;
}

void expect_equality(const BoundReport* r, double tol) {
  ASSERT_NE(r, nullptr);
  EXPECT_NEAR(r->lhs, r->rhs, tol) << r->check_id;
  EXPECT_TRUE(r->holds) << r->check_id;
}

}  // namespace

TEST(Agm, EqualOperandsGiveEquality) {
  Rng rng(51);
  const ComplexMatrix a = gen_ginibre(4, rng);
  for (const SchattenP& p : {SchattenP(1.0), SchattenP(2.0), kInf}) {
    const BoundReport r = check_agm(a, a, p);
    EXPECT_NEAR(r.lhs, r.rhs, 1e-9 * r.rhs);
    EXPECT_TRUE(r.holds);
  }
}

TEST(Agm, ZeroOperand) {
  Rng rng(52);
  const BoundReport r = check_agm(gen_ginibre(3, rng), ComplexMatrix::Zero(3, 3), SchattenP(2.0));
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_TRUE(r.holds);
}

TEST(Agm, RandomPairsMatchOracle) {
  Rng rng(53);
  for (int k = 0; k < 30; ++k) {
    const ComplexMatrix a = gen_ginibre(4, rng), b = gen_ginibre(4, rng);
    const BoundReport r = check_agm(a, b, SchattenP(2.0));
    EXPECT_TRUE(r.holds);
    EXPECT_NEAR(r.lhs, (a * b.adjoint()).norm(), 1e-10 * r.lhs);
    EXPECT_NEAR(r.rhs, 0.5 * (a.adjoint() * a + b.adjoint() * b).norm(), 1e-10 * r.rhs);
  }
}

TEST(SumProduct, ZeroAndIdentityCases) {
  const ComplexMatrix z = ComplexMatrix::Zero(3, 3), id = ComplexMatrix::Identity(3, 3);
  for (const BoundReport& r : check_sum_product(z, z, z, z, SchattenP(2.0))) {
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_EQ(r.rhs, 0.0);
    EXPECT_TRUE(r.holds);
  }
  Rng rng(54);
  const ComplexMatrix a = gen_ginibre(3, rng);
  const Reports rs = check_sum_product(a, a, id, id, kInf);
  EXPECT_TRUE(all_hold(rs));
  ASSERT_NE(find(rs, "sum-product-a"), nullptr);
  EXPECT_NEAR(find(rs, "sum-product-a")->lhs, 2.0 * operator_norm(a * a), 1e-10);
}

TEST(SumProduct, RandomQuadruples) {
  Rng rng(55);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = gen_ginibre(3, rng), b = gen_ginibre(3, rng);
    const ComplexMatrix x = gen_ginibre(3, rng), y = gen_ginibre(3, rng);
    for (const SchattenP& p : {SchattenP(1.0), SchattenP(2.0), kInf}) {
      EXPECT_TRUE(all_hold(check_sum_product(a, b, x, y, p)));
    }
  }
}

TEST(Commutator, SelfAndAdjointCases) {
  Rng rng(56);
  const ComplexMatrix a = gen_ginibre(4, rng);
  EXPECT_TRUE(all_hold(check_commutator_family(a, a, 1, SchattenP(2.0))));
  const Reports rs = check_commutator_family(a, a.adjoint(), -1, kInf);
  EXPECT_TRUE(all_hold(rs));
  const BoundReport* np = find(rs, "comm-normprod");
  ASSERT_NE(np, nullptr);
  const double na = operator_norm(a);
  EXPECT_NEAR(np->lhs, operator_norm(a.adjoint() * a - a * a.adjoint()), 1e-10 * na * na);
  EXPECT_NEAR(np->rhs, na * na, 1e-10 * na * na);
}

TEST(Commutator, RandomPairsBothSigns) {
  Rng rng(57);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = gen_ginibre(4, rng), b = gen_ginibre(4, rng);
    for (int sign : {1, -1}) {
      const Reports rs = check_commutator_family(a, b, sign, kInf);
      EXPECT_TRUE(all_hold(rs));
      EXPECT_NE(find(rs, "comm-scaled-order"), nullptr);
      EXPECT_TRUE(all_hold(check_commutator_family(a, b, sign, SchattenP(3.0))));
    }
  }
  EXPECT_THROW(check_commutator_family(gen_ginibre(2, rng), gen_ginibre(2, rng), 0, kInf), Error);
}

TEST(Square, NormalGivesLowerEquality) {
  Rng rng(58);
  const ComplexMatrix a = gen_normal(4, rng);
  expect_equality(find(check_square_bounds(a, kInf), "square-op-lower"), 1e-9 * operator_norm(a * a));
}

TEST(Square, NilpotentHasZeroSquare) {
  const Reports rs = check_square_bounds(shift_matrix(2), SchattenP(2.0));
  ASSERT_NE(find(rs, "square-a2"), nullptr);
  EXPECT_EQ(find(rs, "square-a2")->lhs, 0.0);
  EXPECT_TRUE(all_hold(rs));
}

TEST(Square, RandomInputs) {
  Rng rng(59);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = gen_ginibre(4, rng);
    for (const SchattenP& p : {SchattenP(1.0), SchattenP(2.0), SchattenP(3.0), kInf}) {
      EXPECT_TRUE(all_hold(check_square_bounds(a, p)));
    }
  }
}

TEST(MoorePenrose, UnitaryEquality) {
  Rng rng(60);
  const Reports rs = check_moore_penrose(gen_unitary(3, rng), kInf);
  expect_equality(find(rs, "mp-right"), 1e-10);
  expect_equality(find(rs, "mp-left"), 1e-10);
  EXPECT_TRUE(all_hold(rs));
}

TEST(MoorePenrose, ZeroAndRankDeficient) {
  for (const BoundReport& r : check_moore_penrose(ComplexMatrix::Zero(3, 3), SchattenP(2.0))) {
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_TRUE(r.holds);
  }
  Rng rng(61);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = gen_fixed_rank(4, 2, rng);
    for (const SchattenP& p : {SchattenP(1.0), SchattenP(2.0), kInf}) {
      const Reports rs = check_moore_penrose(a, p);
      EXPECT_EQ(rs.size(), 5u);
      EXPECT_TRUE(all_hold(rs));
    }
  }
}

TEST(PositiveSplit, IdentityPairEquality) {
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  const Reports rs = check_positive_sum_split(id, id, 0.5, 0.5, kInf);
  expect_equality(find(rs, "psplit-general"), 1e-12);
  expect_equality(find(rs, "psplit-half"), 1e-12);
}

TEST(PositiveSplit, ZeroSecondOperandEquality) {
  Rng rng(62);
  const ComplexMatrix x = gen_psd(3, rng);
  for (const SchattenP& p : {SchattenP(1.0), SchattenP(2.0), kInf}) {
    expect_equality(find(check_positive_sum_split(x, ComplexMatrix::Zero(3, 3), 0.5, 0.5, p), "psplit-general"),
                    1e-9 * schatten_norm(x, p));
  }
}

TEST(PositiveSplit, RandomPsdPairsOverGrid) {
  Rng rng(63);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix x = gen_psd(4, rng), y = gen_psd(4, rng);
    for (double a : {0.0, 0.25, 0.5, 1.0}) {
      for (double t : {0.0, 0.25, 0.5, 1.0}) {
        EXPECT_TRUE(all_hold(check_positive_sum_split(x, y, a, t, SchattenP(2.0))));
      }
    }
  }
}

TEST(PositiveSplit, RejectsIndefinite) {
  EXPECT_THROW(check_positive_sum_split(diag({1.0, -1.0}), diag({1.0, 1.0}), 0.5, 0.5, kInf), Error);
}

TEST(WeightedProduct, AllIdentityEqualities) {
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  const Reports rs = check_weighted_product(id, id, id, id, kInf);
  EXPECT_TRUE(all_hold(rs));
  for (const char* id_ : {"wp-y0", "wp-w-mediated", "wp-w-product", "wp-sqrt-w", "wp-two-sided", "wp-half-w"}) {
    expect_equality(find(rs, id_), 1e-9);
  }
}

TEST(WeightedProduct, CommutingScalarsEquality) {
  const ComplexMatrix four = diag({4.0}), one = diag({1.0});
  const Reports rs = check_weighted_product(four, one, four, one, kInf);
  const BoundReport* r = find(rs, "wp-sqrt-w");
  expect_equality(r, 1e-9);
  EXPECT_NEAR(r->lhs, 4.0, 1e-12);
}

TEST(WeightedProduct, RandomInputs) {
  Rng rng(64);
  for (int k = 0; k < 15; ++k) {
    const ComplexMatrix a = gen_ginibre(3, rng), b = gen_ginibre(3, rng);
    const ComplexMatrix x = gen_psd(3, rng), y = gen_psd(3, rng);
    for (const SchattenP& p : {SchattenP(1.0), SchattenP(2.0), kInf}) {
      EXPECT_TRUE(all_hold(check_weighted_product(a, b, x, y, p)));
    }
  }
}

TEST(SelfadjointLemma, EqualityCases) {
  const ComplexMatrix a = diag({1.0, 2.0}), b = diag({3.0, -1.0});
  const BoundReport c = check_selfadjoint_product_lemma(a, b, SchattenP(2.0));
  expect_equality(&c, 1e-12);
  Rng rng(65);
  const ComplexMatrix g = gen_ginibre(3, rng);
  for (const SchattenP& p : {SchattenP(1.0), kInf}) {
    const BoundReport r = check_selfadjoint_product_lemma(g, g.adjoint(), p);
    EXPECT_NEAR(r.lhs, r.rhs, 1e-9 * r.rhs);
  }
  const ComplexMatrix q = range_projector(gen_fixed_rank(4, 2, rng));
  EXPECT_TRUE(check_selfadjoint_product_lemma(q, q, SchattenP(2.0)).holds);
}

TEST(SelfadjointLemma, GeneratedPairs) {
  Rng rng(66);
  for (int k = 0; k < 20; ++k) {
    // B = H P makes A B = P H P selfadjoint
    const ComplexMatrix h = gen_hermitian(4, rng), p = gen_psd(4, rng);
    for (const SchattenP& q : {SchattenP(1.0), SchattenP(2.0), kInf}) {
      EXPECT_TRUE(check_selfadjoint_product_lemma(p, h * p, q).holds);
    }
  }
}

TEST(SelfadjointLemma, RejectsNonSelfadjointProduct) {
  try {
    check_selfadjoint_product_lemma(shift_matrix(3), ComplexMatrix::Identity(3, 3), kInf);
    FAIL() << "expected NotSelfadjointProduct";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSelfadjointProduct);
  }
}

TEST(RankSchatten, RankOneSharp) {
  Rng rng(67);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = gen_fixed_rank(3 + k % 4, 1, rng);
    for (double p : {1.0, 2.0, 3.0}) {
      const BoundReport* r = find(check_rank_schatten(a, p, 2.0), "rank-pp");
      ASSERT_NE(r, nullptr);
      EXPECT_LE(std::abs(r->slack), 1e-8 * operator_norm(a));
    }
  }
}

TEST(RankSchatten, ZeroMatrix) {
  for (const BoundReport& r : check_rank_schatten(ComplexMatrix::Zero(3, 3), 2.0, 2.0)) {
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_TRUE(r.holds);
  }
}

TEST(RankSchatten, RankThreeAgainstOracle) {
  Rng rng(68);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix a = gen_fixed_rank(6, 3, rng);
    const Reports rs = check_rank_schatten(a, 2.0, 2.0);
    EXPECT_TRUE(all_hold(rs));
    const BoundReport* r = find(rs, "rank-pp");
    ASSERT_NE(r, nullptr);
    EXPECT_NEAR(r->lhs, oracle_norm(a, 2.0), 1e-9 * r->lhs);
    EXPECT_NEAR(r->rhs, std::pow(3.0, 0.25) * oracle_norm(a, 4.0), 1e-9 * r->rhs);
  }
  EXPECT_THROW(check_rank_schatten(gen_ginibre(3, rng), 0.5, 2.0), Error);
}

TEST(OrthonormalSums, DiagonalStandardBasisEquality) {
  const ComplexMatrix d = diag({1.0, Complex(0, 2), -3.0});
  const ComplexMatrix e = ComplexMatrix::Identity(3, 3);
  const Reports rs = check_orthonormal_sums(d, e, e, 0.5, 2.0, 2.0);
  EXPECT_TRUE(all_hold(rs));
  const BoundReport* r = find(rs, "on-half");
  expect_equality(r, 1e-10);
  EXPECT_NEAR(r->lhs, 14.0, 1e-10);
}

TEST(OrthonormalSums, SingleColumn) {
  Rng rng(69);
  const ComplexMatrix a = gen_ginibre(4, rng);
  const ComplexMatrix x = gen_orthonormal_set(4, 1, rng);
  const Reports rs = check_orthonormal_sums(a, x, x, 0.5, 2.0, 2.0);
  EXPECT_TRUE(all_hold(rs));
  const Complex q = x.col(0).dot(a * x.col(0));
  EXPECT_NEAR(find(rs, "on-half")->lhs, std::norm(q), 1e-10);
}

TEST(OrthonormalSums, RandomSets) {
  Rng rng(70);
  for (int k = 0; k < 15; ++k) {
    const ComplexMatrix a = gen_ginibre(4, rng);
    const ComplexMatrix x = gen_orthonormal_set(4, 3, rng), y = gen_orthonormal_set(4, 3, rng);
    for (double alpha : {0.25, 0.5, 0.75}) {
      EXPECT_TRUE(all_hold(check_orthonormal_sums(a, x, y, alpha, 2.0, 2.0)));
      EXPECT_TRUE(all_hold(check_orthonormal_sums(a, x, y, alpha, 3.0, 1.5)));
    }
  }
}

TEST(WeylChain, NilpotentAndNormal) {
  for (int n = 2; n <= 5; ++n) {
    const Reports rs = check_weyl_chain(shift_matrix(n), 2.0);
    EXPECT_LT(find(rs, "weyl-refined")->lhs, 1e-12);
    EXPECT_TRUE(all_hold(rs));
  }
  const Reports rs = check_weyl_chain(diag({1.0, Complex(0, 2), -3.0}), 2.0);
  const BoundReport* r = find(rs, "weyl-refined");
  expect_equality(r, 1e-10);
  EXPECT_NEAR(r->lhs, 14.0, 1e-10);
  expect_equality(find(rs, "weyl-refined-link"), 1e-10);
}

TEST(WeylChain, RandomNonNormalMatchesOracleAndIsStrict) {
  Rng rng(71);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = gen_ginibre(5, rng);
    for (double p : {2.0, 3.0, 4.0}) {
      const Reports rs = check_weyl_chain(a, p);
      EXPECT_TRUE(all_hold(rs));
      const BoundReport* r = find(rs, "weyl-refined");
      EXPECT_NEAR(r->lhs, eig_power_sum(a, p), 1e-8 * r->lhs);
      const double full = std::pow(oracle_norm(a, p), p);
      const double mid = 0.5 * full + 0.5 * std::pow(oracle_norm(a * a, p / 2), p / 2);
      EXPECT_NEAR(r->rhs, mid, 1e-8 * mid);
      EXPECT_LT(mid, full * (1 - 1e-6));
    }
  }
}

TEST(Monotone, IdentityIsConstant) {
  const std::vector<SchattenP> grid{SchattenP(1.0), SchattenP(2.0), SchattenP(4.0)};
  const Reports rs = check_schatten_monotone(ComplexMatrix::Identity(4, 4), SchattenP(1.0), SchattenP(2.0), grid);
  for (const BoundReport& r : rs) {
    if (r.check_id == "mono-normalized") EXPECT_NEAR(r.lhs, r.rhs, 1e-12);
  }
  EXPECT_TRUE(all_hold(rs));
}

TEST(Monotone, RankOneReverseSlack) {
  Rng rng(72);
  const ComplexMatrix a = gen_fixed_rank(5, 1, rng);
  const double s1 = operator_norm(a);
  const double p = 1.0, q = 2.0;
  const Reports rs = check_schatten_monotone(a, SchattenP(p), SchattenP(q), {});
  const BoundReport* r = find(rs, "mono-reverse");
  ASSERT_NE(r, nullptr);
  EXPECT_NEAR(r->slack, s1 * (std::pow(5.0, (q - p) / (p * q)) - 1.0), 1e-9 * s1);
  EXPECT_NEAR(find(rs, "mono-decreasing")->slack, 0.0, 1e-9 * s1);
}

TEST(Monotone, RandomBothDirections) {
  Rng rng(73);
  const std::vector<SchattenP> grid{SchattenP(1.0), SchattenP(1.5), SchattenP(2.0), SchattenP(4.0), kInf};
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = gen_ginibre(5, rng);
    EXPECT_TRUE(all_hold(check_schatten_monotone(a, SchattenP(1.0), SchattenP(2.0), grid)));
    EXPECT_TRUE(all_hold(check_schatten_monotone(a, SchattenP(2.0), SchattenP(4.0), grid)));
    EXPECT_TRUE(all_hold(check_schatten_monotone(a, SchattenP(2.0), kInf, {})));
  }
  EXPECT_THROW(check_schatten_monotone(gen_ginibre(2, rng), SchattenP(2.0), SchattenP(1.0), {}), Error);
}

TEST(PositiveNorm, IdentityAndZeroEqualities) {
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  const Reports rs = check_positive_sum_norm(id, id, 0.5, 0.5);
  expect_equality(find(rs, "pn-half"), 1e-12);
  EXPECT_NEAR(find(rs, "pn-half")->lhs, 2.0, 1e-12);
  Rng rng(74);
  const ComplexMatrix x = gen_psd(3, rng);
  expect_equality(find(check_positive_sum_norm(x, ComplexMatrix::Zero(3, 3), 0.5, 0.5), "pn-half"),
                  1e-9 * operator_norm(x));
}

TEST(PositiveNorm, RandomPsdOverGrid) {
  Rng rng(75);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix x = gen_psd(4, rng), y = gen_psd(4, rng);
    for (double a : {0.0, 0.5, 1.0}) {
      for (double t : {0.0, 0.5, 1.0}) {
        const Reports rs = check_positive_sum_norm(x, y, a, t);
        EXPECT_TRUE(all_hold(rs));
        EXPECT_NE(find(rs, "pn-half-vs-max"), nullptr);
      }
    }
  }
}

TEST(BlockRadius, NonnegativeScalarsEquality) {
  const BoundReport r = check_block_radius_lemma(diag({2.0}), diag({1.0}), diag({3.0}), diag({0.5}));
  EXPECT_NEAR(r.lhs, r.rhs, 1e-12);
  const double want = 1.25 + std::sqrt(0.75 * 0.75 + 3.0);
  EXPECT_NEAR(r.rhs, want, 1e-12);
}

TEST(BlockRadius, RandomBlocks) {
  Rng rng(76);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = gen_ginibre(2, rng), x = gen_ginibre(2, 3, rng);
    const ComplexMatrix b = gen_ginibre(3, 2, rng), y = gen_ginibre(3, rng);
    EXPECT_TRUE(check_block_radius_lemma(a, x, b, y).holds);
  }
}

TEST(Numrad, NilpotentTwoIsSharp) {
  const Reports rs = check_numrad_bounds(shift_matrix(2), 0.0, 0.0);
  const BoundReport* r = find(rs, "nr-kit3");
  expect_equality(r, 1e-9);
  EXPECT_NEAR(r->rhs, 0.5, 1e-12);
}

TEST(Numrad, NormalIsSharp) {
  Rng rng(77);
  const ComplexMatrix a = gen_normal(4, rng);
  const double na = operator_norm(a);
  expect_equality(find(check_numrad_bounds(a, 0.5, 0.5), "nr-general"), 1e-8 * na);
}

TEST(Numrad, RandomGridHoldsAndKit3MatchesOracle) {
  Rng rng(78);
  std::vector<std::pair<double, double>> grid;
  for (double a : {0.0, 0.5, 1.0}) {
    for (double t : {0.0, 0.5, 1.0}) grid.emplace_back(a, t);
  }
  for (int k = 0; k < 15; ++k) {
    const ComplexMatrix a = gen_ginibre(4, rng);
    const Reports rs = check_numrad_grid(a, grid);
    EXPECT_TRUE(all_hold(rs));
    int general = 0, pintu = 0;
    for (const BoundReport& r : rs) {
      general += r.check_id == "nr-general";
      pintu += r.check_id == "nr-pintu";
    }
    EXPECT_EQ(general, 9);
    EXPECT_EQ(pintu, 1);
    const BoundReport* kit = find(rs, "nr-kit3");
    const double want = 0.5 * oracle_singular_values(a)(0) + 0.5 * std::sqrt(oracle_singular_values(a * a)(0));
    EXPECT_NEAR(kit->rhs, want, 1e-9 * want);
    EXPECT_NEAR(kit->lhs, opineq::test::scan_radius(a, 4096), 1e-4 * kit->lhs);
  }
}

TEST(Sandwich, RandomAndNormal) {
  Rng rng(79);
  for (int k = 0; k < 20; ++k) {
    const Reports rs = check_sandwich(gen_ginibre(2 + k % 5, rng));
    EXPECT_TRUE(all_hold(rs));
    EXPECT_EQ(find(rs, "sw-normal-r"), nullptr);
  }
  const Reports rs = check_sandwich(gen_normal(4, rng));
  EXPECT_TRUE(all_hold(rs));
  EXPECT_NE(find(rs, "sw-normal-r"), nullptr);
  EXPECT_NE(find(rs, "sw-normal-norm"), nullptr);
}

TEST(Triangle, EqualOperandsGiveEquality) {
  Rng rng(80);
  const ComplexMatrix a = gen_ginibre(4, rng);
  const Reports rs = check_triangle_refined(a, a);
  EXPECT_TRUE(all_hold(rs));
  for (const BoundReport& r : rs) {
    if (r.check_id == "tri-astar-b" && *r.param("sign") == "+") {
      EXPECT_NEAR(r.lhs, 2 * operator_norm(a), 1e-9 * r.lhs);
      EXPECT_NEAR(r.lhs, r.rhs, 1e-8 * r.lhs);
    }
  }
}

TEST(Triangle, HermitianNormEquality) {
  Rng rng(81);
  const ComplexMatrix h = gen_hermitian(4, rng);
  const Reports rs = check_triangle_refined(h, gen_ginibre(4, rng));
  const BoundReport* r = find(rs, "tri-normeq");
  expect_equality(r, 1e-9 * operator_norm(h));
}

TEST(Triangle, RandomPairs) {
  Rng rng(82);
  for (int k = 0; k < 20; ++k) {
    EXPECT_TRUE(all_hold(check_triangle_refined(gen_ginibre(4, rng), gen_ginibre(4, rng))));
  }
}

TEST(Parallelism, PositiveMultiple) {
  Rng rng(83);
  const ComplexMatrix a = gen_ginibre(3, rng);
  const Reports rs = check_parallelism(a, 2.0 * a);
  EXPECT_TRUE(all_hold(rs));
  const BoundReport* r = find(rs, "par-iff-wAstarB");
  EXPECT_LT(r->lhs, 1e-8);
  EXPECT_LT(r->rhs, 1e-8);
  EXPECT_NE(find(rs, "par-necessary-1"), nullptr);
}

TEST(Parallelism, ShiftAndAdjointAreNotParallel) {
  const ComplexMatrix j = shift_matrix(3);
  const Reports rs = check_parallelism(j, j.adjoint());
  EXPECT_TRUE(all_hold(rs));
  EXPECT_GT(find(rs, "par-iff-wAstarB")->lhs, 1e-6);
  EXPECT_EQ(find(rs, "par-necessary-1"), nullptr);
  EXPECT_NEAR(max_unimodular_norm(j, j.adjoint()).value, std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(operator_norm(j.adjoint() * j + j * j.adjoint()), 2.0, 1e-12);
}

TEST(Parallelism, UnimodularMultipleOfUnitary) {
  Rng rng(84);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix u = gen_unitary(3, rng);
    const Complex lambda = std::polar(1.0, 2 * kPi * rng.uniform());
    const Reports rs = check_parallelism(u, lambda * u);
    EXPECT_TRUE(all_hold(rs));
    EXPECT_LT(find(rs, "par-iff-wAstarB")->lhs, 1e-8);
  }
  EXPECT_THROW(check_parallelism(ComplexMatrix::Zero(2, 2), ComplexMatrix::Identity(2, 2)), Error);
}

TEST(ScalarLemmas, MixedSchwarzRandom) {
  Rng rng(85);
  for (int k = 0; k < 30; ++k) {
    const ComplexMatrix a = gen_ginibre(4, rng);
    const ComplexVector x = gen_unit_vector(4, rng), y = gen_unit_vector(4, rng);
    for (double alpha : {0.0, 0.25, 0.5, 1.0}) EXPECT_TRUE(check_mixed_schwarz(a, x, y, alpha).holds);
  }
}

TEST(ScalarLemmas, McCarthyEigenvectorEquality) {
  Rng rng(86);
  const ComplexMatrix p = gen_psd(4, rng);
  const HermitianEigen e = hermitian_eig(p, true);
  const ComplexVector x = e.vectors->col(0);
  const BoundReport r = check_mccarthy(p, x, 3.0);
  EXPECT_NEAR(r.lhs, r.rhs, 1e-9 * r.rhs);
  for (int k = 0; k < 20; ++k) {
    EXPECT_TRUE(check_mccarthy(gen_psd(3, rng), gen_unit_vector(3, rng), 1.0 + 3.0 * rng.uniform()).holds);
  }
  EXPECT_THROW(check_mccarthy(p, x, 0.5), Error);
  EXPECT_THROW(check_mccarthy(p, 2.0 * x, 2.0), Error);
}

TEST(ScalarLemmas, BuzanoEqualityAndRandom) {
  Rng rng(87);
  const ComplexVector e = gen_unit_vector(3, rng);
  const BoundReport r = check_buzano(e, e, e);
  EXPECT_NEAR(r.lhs, 1.0, 1e-12);
  EXPECT_NEAR(r.rhs, 1.0, 1e-12);
  for (int k = 0; k < 30; ++k) {
    EXPECT_TRUE(check_buzano(gen_complex_vector(3, rng), gen_complex_vector(3, rng), gen_unit_vector(3, rng)).holds);
  }
}

TEST(Catalog, EveryEmittedIdIsListed) {
  Rng rng(88);
  const ComplexMatrix a = gen_ginibre(3, rng);
  std::vector<std::string> ids;
  for (const Reports& rs : {check_square_bounds(a, SchattenP(2.0)), check_numrad_bounds(a, 0.5, 0.5),
                            check_triangle_refined(a, gen_ginibre(3, rng)), check_weyl_chain(a, 2.0),
                            check_sandwich(a), check_rank_schatten(a, 2.0, 2.0)}) {
    for (const BoundReport& r : rs) ids.push_back(r.check_id);
  }
  for (const std::string& id : ids) {
    bool listed = false;
    for (const CatalogEntry& c : check_catalog()) listed = listed || c.check_id == id;
    EXPECT_TRUE(listed) << id;
  }
}
