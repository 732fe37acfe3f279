#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "opineq/apps.hpp"
#include "opineq/generators.hpp"
#include "opineq/norms.hpp"
#include "opineq/report.hpp"

using namespace opineq;

namespace {

Polynomial random_polynomial(int n, Rng& rng) {
  std::vector<Complex> c(static_cast<std::size_t>(n));
  const double scale = std::exp(rng.uniform(-2.0, 2.0));
  for (Complex& v : c) v = scale * Complex(rng.normal(), rng.normal());
  return Polynomial(c);
}

Graph random_graph(int n, double prob, Rng& rng) {
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform() < prob) add_edge(g, u, v);
    }
  }
  return g;
}

Graph star(int k) {
  Graph g;
  g.n = k + 1;
  for (int v = 1; v <= k; ++v) add_edge(g, 0, v);
  return g;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::IoError;
}

}  // namespace

TEST(Polynomial, RejectsDegenerateInput) {
  EXPECT_EQ(kind_of([] { Polynomial({Complex(1.0)}); }), ErrorKind::BadPolynomial);
  EXPECT_EQ(kind_of([] { Polynomial({Complex(0.0), Complex(1.0)}); }), ErrorKind::BadPolynomial);
  EXPECT_EQ(kind_of([] { Polynomial({Complex(1.0), Complex(NAN)}); }), ErrorKind::BadPolynomial);
}

TEST(Polynomial, NormalizeDividesByLeading) {
  const Polynomial p = normalize_polynomial({Complex(2.0), Complex(8.0), Complex(2.0)});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.a(1), Complex(1.0));
  EXPECT_EQ(p.a(2), Complex(4.0));
}

TEST(Polynomial, ParseJsonForms) {
  const Polynomial a = parse_polynomial_json("[[1, 0], [0, 0]]");
  EXPECT_EQ(a.degree(), 2);
  EXPECT_EQ(a.a(1), Complex(1.0));
  const Polynomial b = parse_polynomial_json(R"({"coeffs": [[-1, 0], [0, 0], [0, 0]], "degree": 3})");
  EXPECT_EQ(b.degree(), 3);
  EXPECT_EQ(b.a(1), Complex(-1.0));
  EXPECT_THROW(parse_polynomial_json(R"({"coeffs": [[1, 0], [0, 0]], "degree": 3})"), Error);
  EXPECT_THROW(parse_polynomial_json("[[1, 0"), Error);
}

TEST(Companion, ShapeAndExample) {
  const Polynomial p({Complex(1.0), Complex(0.0)});
  ComplexMatrix want(2, 2);
  want << 0.0, -1.0, 1.0, 0.0;
  EXPECT_EQ(companion_matrix(p), want);
  Rng rng(101);
  for (int n = 2; n <= 8; ++n) {
    const ComplexMatrix c = companion_matrix(random_polynomial(n, rng));
    int below = 0;
    for (int i = 1; i < n; ++i) {
      for (int j = 0; j < n; ++j) below += c(i, j) != Complex(0.0);
    }
    EXPECT_EQ(below, n - 1);
  }
}

TEST(Companion, EigenvaluesAreZeros) {
  const ComplexVector cube = schur_eigenvalues(companion_matrix(Polynomial({Complex(-1.0), 0.0, 0.0}))).values;
  for (int k = 0; k < 3; ++k) EXPECT_LT(std::abs(std::pow(cube(k), 3) - 1.0), 1e-10);
  Rng rng(102);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 9;
    const Polynomial p = random_polynomial(n, rng);
    for (const Complex& l : zero_sum_bound(p).zeros) {
      EXPECT_LE(std::abs(p.evaluate(l)), 1e-6 * std::pow(1.0 + std::abs(l), n));
    }
  }
}

TEST(ZeroSumBound, Anchors) {
  const ZeroSumBound a = zero_sum_bound(Polynomial({Complex(1.0), 0.0}));
  EXPECT_NEAR(a.zero_sum, 2.0, 1e-10);
  EXPECT_NEAR(a.bound, 2.0, 1e-12);
  const ZeroSumBound b = zero_sum_bound(Polynomial({Complex(-1.0), 0.0, 0.0}));
  EXPECT_NEAR(b.zero_sum, 3.0, 1e-10);
  EXPECT_NEAR(b.bound, 3.0, 1e-12);
}

TEST(ZeroSumBound, QuadraticFormulaOracle) {
  Rng rng(103);
  for (int k = 0; k < 50; ++k) {
    const Complex a1(rng.normal(), rng.normal()), a2(rng.normal(), rng.normal());
    // z^2 + a2 z + a1
    const Complex d = std::sqrt(a2 * a2 - 4.0 * a1);
    const Complex r1 = (-a2 + d) / 2.0, r2 = (-a2 - d) / 2.0;
    const Polynomial p({a1, a2});
    const ZeroSumBound z = zero_sum_bound(p);
    EXPECT_NEAR(z.zero_sum, std::abs(r1) + std::abs(r2), 1e-9 * z.zero_sum);
    EXPECT_NEAR(z.bound, std::sqrt(2.0 * (1.0 + std::norm(a1) + std::norm(a2))), 1e-12 * z.bound);
    EXPECT_NEAR(smallest_zero_bound(p), z.bound / 2.0, 1e-15 * z.bound);
  }
  const Polynomial q({Complex(1.0), Complex(4.0)});
  EXPECT_NEAR(zero_sum_bound(q).zero_sum, 4.0, 1e-10);
  EXPECT_NEAR(zero_sum_bound(q).bound, 6.0, 1e-12);
  EXPECT_NEAR(smallest_zero_bound(q), 3.0, 1e-12);
  double smallest = INFINITY;
  for (const Complex& l : zero_sum_bound(q).zeros) smallest = std::min(smallest, std::abs(l));
  EXPECT_NEAR(smallest, 2.0 - std::sqrt(3.0), 1e-10);
}

TEST(ZeroSumBound, RandomPolynomials) {
  Rng rng(104);
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = random_polynomial(2 + k % 9, rng);
    const ZeroSumBound z = zero_sum_bound(p);
    const double tau = kDefaultTolRel * std::max(1.0, z.bound);
    EXPECT_LE(z.zero_sum, z.bound + tau);
    double smallest = INFINITY;
    for (const Complex& l : z.zeros) smallest = std::min(smallest, std::abs(l));
    EXPECT_LE(smallest, smallest_zero_bound(p) + tau);
  }
}

TEST(Graph, ParseExamples) {
  const Graph k2 = parse_graph("2\n0 1\n");
  EXPECT_EQ(k2.n, 2);
  EXPECT_EQ(k2.m(), 1);
  const Graph s = parse_graph("# star\n4\n0 1\n0 2\n\n3 0\n");
  EXPECT_EQ(s.n, 4);
  EXPECT_EQ(s.m(), 3);
  EXPECT_TRUE(s.edges.count({0, 3}));
}

TEST(Graph, ParseErrors) {
  EXPECT_EQ(kind_of([] { parse_graph("3\n0 1\n0 1\n"); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { parse_graph("3\n1 1\n"); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { parse_graph("3\n0 3\n"); }), ErrorKind::VertexOutOfRange);
  try {
    parse_graph("3\n0 1\n0 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    parse_graph("3\n0 1\n1 0\n");
    FAIL() << "expected DuplicateEdge";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Graph, AdjacencyShape) {
  EXPECT_EQ(adjacency(parse_graph("5\n")), ComplexMatrix::Zero(5, 5));
  ComplexMatrix k2(2, 2);
  k2 << 0.0, 1.0, 1.0, 0.0;
  EXPECT_EQ(adjacency(parse_graph("2\n0 1\n")), k2);
  Rng rng(105);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = adjacency(random_graph(3 + k % 8, 0.4, rng));
    EXPECT_EQ(a, a.adjoint());
    EXPECT_EQ(a.diagonal().norm(), 0.0);
  }
}

TEST(Energy, CompleteGraphsAndStars) {
  const EnergyReport k2 = energy_report(parse_graph("2\n0 1\n"));
  EXPECT_NEAR(k2.energy, 2.0, 1e-12);
  EXPECT_EQ(k2.rank, 2);
  EXPECT_NEAR(k2.bound_rank, 2.0, 1e-12);
  for (int k = 2; k <= 6; ++k) {
    const EnergyReport s = energy_report(star(k));
    EXPECT_NEAR(s.energy, 2.0 * std::sqrt(k), 1e-10);
    EXPECT_EQ(s.rank, 2);
    EXPECT_NEAR(s.bound_rank, std::sqrt(2.0 * k * 2.0), 1e-12);
    EXPECT_NEAR(s.bound_mcclelland, std::sqrt(2.0 * k * (k + 1)), 1e-12);
  }
  const EnergyReport k4 = energy_report(parse_graph("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"));
  EXPECT_NEAR(k4.energy, 6.0, 1e-10);
  EXPECT_EQ(k4.rank, 4);
  EXPECT_NEAR(k4.bound_rank, std::sqrt(48.0), 1e-12);
  EXPECT_NEAR(k4.bound_rank, k4.bound_mcclelland, 1e-12);
  ASSERT_EQ(k4.eigenvalues.size(), 4u);
  EXPECT_NEAR(k4.eigenvalues.front(), 3.0, 1e-10);
}

TEST(Energy, RandomGraphs) {
  Rng rng(106);
  for (int k = 0; k < 200; ++k) {
    const Graph g = random_graph(2 + k % 11, rng.uniform(0.1, 0.9), rng);
    const EnergyReport r = energy_report(g);
    const double tau = kDefaultTolRel * std::max(1.0, r.bound_mcclelland);
    EXPECT_LE(r.energy, r.bound_rank + tau);
    EXPECT_LE(r.bound_rank, r.bound_mcclelland + tau);
    if (r.rank < r.n && r.m > 0) EXPECT_LT(r.bound_rank, r.bound_mcclelland);
    double abs_sum = 0.0;
    for (double e : r.eigenvalues) abs_sum += std::abs(e);
    EXPECT_NEAR(abs_sum, r.energy, 1e-10 * std::max(1.0, r.energy));
    EXPECT_NEAR(r.energy, schatten_norm(adjacency(g), SchattenP(1.0)), 1e-9 * std::max(1.0, r.energy));
  }
}
