#pragma once

#include <istream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opineq/linalg.hpp"

namespace opineq {

/// Monic p(z) = z^n + a_n z^{n-1} + ... + a_2 z + a_1, stored as (a_1, ..., a_n).
class Polynomial {
 public:
  explicit Polynomial(std::vector<Complex> coeffs);
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  /// a_k for k in 1..n
  Complex a(int k) const { return coeffs_.at(static_cast<std::size_t>(k - 1)); }
  Complex evaluate(Complex z) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Divides c_0 + c_1 z + ... + c_n z^n by its leading coefficient.
Polynomial normalize_polynomial(const std::vector<Complex>& ascending);

/// JSON text: either [[re, im], ...] or {"coeffs": [[re, im], ...], "degree": n}, ordered a_1..a_n.
Polynomial parse_polynomial_json(const std::string& text);

ComplexMatrix companion_matrix(const Polynomial& poly);

struct ZeroSumBound {
  double bound = 0.0;
  double zero_sum = 0.0;
  std::vector<Complex> zeros;
};

ZeroSumBound zero_sum_bound(const Polynomial& poly);
double smallest_zero_bound(const Polynomial& poly);

struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // u < v
  int m() const { return static_cast<int>(edges.size()); }
};

Graph load_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);
/// Adds an edge, enforcing the simple-graph invariants.
void add_edge(Graph& g, int u, int v);

ComplexMatrix adjacency(const Graph& g);

struct EnergyReport {
  double energy = 0.0;
  int rank = 0;
  int m = 0;
  int n = 0;
  double bound_rank = 0.0;
  double bound_mcclelland = 0.0;
  std::vector<double> eigenvalues;
};

EnergyReport energy_report(const Graph& g);

}  // namespace opineq
