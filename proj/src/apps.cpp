#include "opineq/apps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opineq/norms.hpp"

namespace opineq {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) raise(ErrorKind::BadPolynomial, "degree must be at least 2");
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) raise(ErrorKind::BadPolynomial, "non-finite coefficient");
  }
  if (coeffs_.front() == Complex(0.0, 0.0)) raise(ErrorKind::BadPolynomial, "a_1 must be nonzero");
}

Complex Polynomial::evaluate(Complex z) const {
  Complex acc(1.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial normalize_polynomial(const std::vector<Complex>& ascending) {
  if (ascending.empty() || ascending.back() == Complex(0.0, 0.0)) {
    raise(ErrorKind::BadPolynomial, "leading coefficient must be nonzero");
  }
  const Complex lead = ascending.back();
  std::vector<Complex> c(ascending.begin(), ascending.end() - 1);
  for (Complex& v : c) v /= lead;
  return Polynomial(std::move(c));
}

Polynomial parse_polynomial_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorKind::ParseError, std::string("polynomial json: ") + e.what());
  }
  const nlohmann::json* arr = &j;
  long declared = -1;
  if (j.is_object()) {
    if (!j.contains("coeffs")) raise(ErrorKind::ParseError, "polynomial json: missing \"coeffs\"");
    arr = &j.at("coeffs");
    if (j.contains("degree")) {
      if (!j.at("degree").is_number_integer()) raise(ErrorKind::ParseError, "polynomial json: degree must be an integer");
      declared = j.at("degree").get<long>();
    }
  }
  if (!arr->is_array()) raise(ErrorKind::ParseError, "polynomial json: expected an array of [re, im] pairs");
  std::vector<Complex> coeffs;
  for (const auto& pair : *arr) {
    if (pair.is_number()) {
      coeffs.emplace_back(pair.get<double>(), 0.0);
      continue;
    }
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      raise(ErrorKind::ParseError, "polynomial json: each coefficient must be [re, im]");
    }
    coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  if (declared >= 0 && static_cast<std::size_t>(declared) != coeffs.size()) {
    raise(ErrorKind::BadPolynomial, "degree " + std::to_string(declared) + " does not match " +
                                        std::to_string(coeffs.size()) + " coefficients");
  }
  return Polynomial(std::move(coeffs));
}

ComplexMatrix companion_matrix(const Polynomial& poly) {
  const int n = poly.degree();
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) c(0, j) = -poly.a(n - j);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  return c;
}

ZeroSumBound zero_sum_bound(const Polynomial& poly) {
  const int n = poly.degree();
  double sq = 0.0;
  for (const Complex& c : poly.coeffs()) sq += std::norm(c);
  ZeroSumBound out;
  out.bound = std::sqrt(n * (n - 1 + sq));
  const ComplexVector z = schur_eigenvalues(companion_matrix(poly)).values;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    out.zeros.push_back(z(i));
    out.zero_sum += std::abs(z(i));
  }
  return out;
}

double smallest_zero_bound(const Polynomial& poly) { return zero_sum_bound(poly).bound / poly.degree(); }

namespace {

void insert_edge(Graph& g, int u, int v, const std::string& where) {
  if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
    raise(ErrorKind::VertexOutOfRange, where + "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                           ") outside 0.." + std::to_string(g.n - 1));
  }
  if (u == v) raise(ErrorKind::SelfLoop, where + "self-loop at vertex " + std::to_string(u));
  if (!g.edges.emplace(std::min(u, v), std::max(u, v)).second) {
    raise(ErrorKind::DuplicateEdge, where + "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
}

}  // namespace

void add_edge(Graph& g, int u, int v) { insert_edge(g, u, v, ""); }

Graph load_graph(std::istream& in) {
  Graph g;
  bool have_header = false;
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& msg) -> void { throw ParseError(lineno, msg); };
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string extra;
    if (!have_header) {
      long n = 0;
      if (!(ls >> n) || (ls >> extra)) bad("expected a vertex count");
      if (n < 1 || n > 1000000) bad("vertex count must be positive");
      g.n = static_cast<int>(n);
      have_header = true;
      continue;
    }
    long u = 0, v = 0;
    if (!(ls >> u >> v) || (ls >> extra)) bad("expected 'u v'");
    if (u < INT32_MIN || u > INT32_MAX || v < INT32_MIN || v > INT32_MAX) bad("vertex index overflows");
    insert_edge(g, static_cast<int>(u), static_cast<int>(v), "line " + std::to_string(lineno) + ": ");
  }
  if (!have_header) throw ParseError(lineno, "missing vertex count header");
  return g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open " + path);
  return load_graph(in);
}

ComplexMatrix adjacency(const Graph& g) {
  ComplexMatrix a = ComplexMatrix::Zero(g.n, g.n);
  for (const auto& [u, v] : g.edges) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

EnergyReport energy_report(const Graph& g) {
  const ComplexMatrix adj = adjacency(g);
  EnergyReport r;
  r.n = g.n;
  r.m = g.m();
  const RealVector ev = hermitian_eig(adj).values;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    r.eigenvalues.push_back(ev(i));
    r.energy += std::abs(ev(i));
  }
  r.rank = numeric_rank(adj);
  r.bound_rank = std::sqrt(2.0 * r.m * r.rank);
  r.bound_mcclelland = std::sqrt(2.0 * r.m * r.n);
  return r;
}

}  // namespace opineq
