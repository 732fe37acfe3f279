#include "opineq/selfcheck.hpp"

#include <cmath>
#include <sstream>

#include "opineq/apps.hpp"
#include "opineq/generators.hpp"
#include "opineq/ineq.hpp"

namespace opineq {

namespace {

class Suite {
 public:
  void near(const std::string& name, double got, double want, double tol) {
    std::ostringstream os;
    os << "got " << format_double(got) << ", want " << format_double(want);
    items_.push_back({name, std::abs(got - want) <= tol, os.str()});
  }
  void truth(const std::string& name, bool ok, const std::string& detail = "") {
    items_.push_back({name, ok, detail});
  }
  void holds(const std::string& name, const Reports& rs) {
    for (const BoundReport& r : rs) {
      std::ostringstream os;
      os << r.check_id << ": lhs " << format_double(r.lhs) << ", rhs " << format_double(r.rhs);
      items_.push_back({name + " " + r.check_id, r.holds && !r.indeterminate, os.str()});
    }
  }
  template <class F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      items_.push_back({name, false, e.what()});
    }
  }
  std::vector<SelfCheckItem> take() { return std::move(items_); }

 private:
  std::vector<SelfCheckItem> items_;
};

ComplexMatrix diag(std::initializer_list<Complex> d) {
  ComplexMatrix m = ComplexMatrix::Zero(d.size(), d.size());
  int i = 0;
  for (const Complex& v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

}  // namespace

std::vector<SelfCheckItem> run_selfcheck() {
  Suite s;
  const double pi = std::acos(-1.0);

  s.guarded("linalg", [&] {
    ComplexMatrix i1(1, 1);
    i1(0, 0) = Complex(0, 1);
    s.near("adjoint [[i]]", std::abs(adjoint(i1)(0, 0) - Complex(0, -1)), 0.0, 0.0);
    s.near("|diag(-3,4)|", (abs_operator(diag({-3.0, 4.0})) - diag({3.0, 4.0})).norm(), 0.0, 1e-12);
    ComplexMatrix j2 = shift_matrix(2);
    s.near("|J2| = diag(0,1)", (abs_operator(j2) - diag({0.0, 1.0})).norm(), 0.0, 1e-12);
    const RealVector ev = hermitian_eig(diag({1.0, 5.0, 3.0})).values;
    s.truth("hermitian_eig diag(1,5,3) descending", ev(0) == 5.0 && ev(1) == 3.0 && ev(2) == 1.0);
    ComplexMatrix swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    const RealVector es = hermitian_eig(swap).values;
    s.near("eig [[0,1],[1,0]] top", es(0), 1.0, 1e-14);
    s.near("eig [[0,1],[1,0]] bottom", es(1), -1.0, 1e-14);
    const RealVector sv = svd(diag({3.0, -4.0})).singular_values;
    s.truth("svd diag(3,-4) = (4,3)", std::abs(sv(0) - 4.0) < 1e-14 && std::abs(sv(1) - 3.0) < 1e-14);
    ComplexMatrix rot(2, 2);
    rot << 0.0, 1.0, -1.0, 0.0;
    const ComplexVector re = schur_eigenvalues(rot).values;
    s.near("schur [[0,1],[-1,0]] -> {i,-i}", std::abs(re(0) - Complex(0, 1)) + std::abs(re(1) - Complex(0, -1)), 0.0, 1e-12);
    s.near("pinv diag(2,0)", (pseudoinverse(diag({2.0, 0.0})) - diag({0.5, 0.0})).norm(), 0.0, 1e-14);
    s.truth("rank zero matrix = 0", numeric_rank(ComplexMatrix::Zero(3, 3)) == 0);
    s.truth("rank diag(1,1e-20) = 1", numeric_rank(diag({1.0, 1e-20})) == 1);
    s.near("diag(4,9)^(1/2)", (psd_power(diag({4.0, 9.0}), 0.5) - diag({2.0, 3.0})).norm(), 0.0, 1e-12);
    s.near("diag(8)^(2/3)", psd_power(diag({8.0}), 2.0 / 3.0)(0, 0).real(), 4.0, 1e-12);
    s.truth("direct_sum with empty block", direct_sum(j2, ComplexMatrix(0, 0)) == j2);
  });

  s.guarded("norms", [&] {
    const ComplexMatrix d34 = diag({3.0, 4.0});
    s.near("||diag(3,4)||_2", schatten_norm(d34, SchattenP(2.0)), 5.0, 1e-12);
    s.near("||diag(3,4)||_1", schatten_norm(d34, SchattenP(1.0)), 7.0, 1e-12);
    s.near("||diag(3,4)||_inf", operator_norm(d34), 4.0, 1e-12);
    s.near("||J2||", operator_norm(shift_matrix(2)), 1.0, 1e-14);
    s.near("r(J4)", spectral_radius(shift_matrix(4)), 0.0, 1e-12);
    s.near("r(diag(2,-3))", spectral_radius(diag({2.0, -3.0})), 3.0, 1e-12);
    s.near("w(diag(1,-2))", numerical_radius(diag({1.0, -2.0})).value, 2.0, 1e-8);
    s.near("w(J2) = 1/2", numerical_radius(shift_matrix(2)).value, 0.5, 1e-9);
    for (int n = 2; n <= 8; ++n) {
      s.near("w(J" + std::to_string(n) + ") = cos(pi/(n+1))", numerical_radius(shift_matrix(n)).value,
             std::cos(pi / (n + 1)), 1e-8);
    }
    s.near("direct_sum_schatten(3,4,2)", direct_sum_schatten(3.0, 4.0, SchattenP(2.0)), 5.0, 1e-12);
    s.near("direct_sum_schatten(x,0,inf)", direct_sum_schatten(2.5, 0.0, SchattenP::inf()), 2.5, 0.0);
    const ComplexMatrix j3 = shift_matrix(3);
    s.near("max |J3 + l J3*| = 2 cos(pi/4)", max_unimodular_norm(j3, j3.adjoint()).value, 2.0 * std::cos(pi / 4.0),
           1e-8);
    s.near("max |A + l 0| = ||A||", max_unimodular_norm(d34, ComplexMatrix::Zero(2, 2)).value, 4.0, 1e-8);
  });

  s.guarded("ineq", [&] {
    const ComplexMatrix j2 = shift_matrix(2);
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    s.holds("unitary moore-penrose", check_moore_penrose(id2, SchattenP::inf()));
    s.holds("X=Y=I positive split", check_positive_sum_split(id2, id2, 0.5, 0.5, SchattenP::inf()));
    s.holds("X=Y=I positive norm", check_positive_sum_norm(id2, id2, 0.5, 0.5));
    s.holds("J2 numerical radius bounds", check_numrad_bounds(j2, 0.0, 0.0));
    const Reports nr = check_numrad_bounds(j2, 0.0, 0.0);
    for (const BoundReport& r : nr) {
      if (r.check_id == "nr-kit3") s.near("J2 kit3 equality", r.slack, 0.0, 1e-9);
    }
    Rng rng(7);
    const ComplexMatrix a = gen_ginibre(3, rng);
    s.holds("B=A triangle", check_triangle_refined(a, a));
    s.holds("normal weyl chain", check_weyl_chain(diag({1.0, Complex(0, 2), -3.0}), 2.0));
    const Reports w = check_weyl_chain(diag({1.0, Complex(0, 2), -3.0}), 2.0);
    s.near("diag(1,2i,-3) weyl lhs", w.front().lhs, 14.0, 1e-10);
    const ComplexMatrix r1 = gen_fixed_rank(4, 1, rng);
    for (const BoundReport& r : check_rank_schatten(r1, 2.0, 2.0)) {
      if (r.check_id == "rank-pp") s.near("rank-1 rank-pp equality", r.slack, 0.0, 1e-10 * operator_norm(r1));
    }
    const ComplexMatrix j3 = shift_matrix(3);
    const Reports par = check_parallelism(j3, j3.adjoint());
    s.truth("shift/adjoint not parallel", !par.empty() && par.front().lhs > 1e-6 && par.front().holds);
    s.near("shift/adjoint ||A*A+B*B|| = 2", operator_norm(j3.adjoint() * j3 + j3 * j3.adjoint()), 2.0, 1e-12);
    s.holds("B = 2A parallel", check_parallelism(a, 2.0 * a));
  });

  s.guarded("apps", [&] {
    const Polynomial z2p1({Complex(1.0), Complex(0.0)});
    const ComplexMatrix c = companion_matrix(z2p1);
    ComplexMatrix want(2, 2);
    want << 0.0, -1.0, 1.0, 0.0;
    s.truth("companion z^2+1", c == want);
    const ZeroSumBound b1 = zero_sum_bound(z2p1);
    s.near("z^2+1 zero sum", b1.zero_sum, 2.0, 1e-10);
    s.near("z^2+1 bound", b1.bound, 2.0, 1e-12);
    s.near("z^2+1 smallest bound", smallest_zero_bound(z2p1), 1.0, 1e-12);
    const Polynomial z3m1({Complex(-1.0), Complex(0.0), Complex(0.0)});
    const ZeroSumBound b2 = zero_sum_bound(z3m1);
    s.near("z^3-1 zero sum", b2.zero_sum, 3.0, 1e-10);
    s.near("z^3-1 bound", b2.bound, 3.0, 1e-12);
    const Polynomial q({Complex(1.0), Complex(4.0)});
    const ZeroSumBound b3 = zero_sum_bound(q);
    s.near("z^2+4z+1 zero sum", b3.zero_sum, 4.0, 1e-10);
    s.near("z^2+4z+1 bound", b3.bound, 6.0, 1e-12);
    s.near("z^2+4z+1 smallest bound", smallest_zero_bound(q), 3.0, 1e-12);

    const EnergyReport k2 = energy_report(parse_graph("2\n0 1\n"));
    s.near("K2 energy", k2.energy, 2.0, 1e-12);
    s.near("K2 rank bound", k2.bound_rank, 2.0, 1e-12);
    const EnergyReport star = energy_report(parse_graph("4\n0 1\n0 2\n0 3\n"));
    s.near("K13 energy", star.energy, 2.0 * std::sqrt(3.0), 1e-12);
    s.truth("K13 rank 2", star.rank == 2);
    s.near("K13 rank bound", star.bound_rank, 2.0 * std::sqrt(3.0), 1e-12);
    s.near("K13 McClelland", star.bound_mcclelland, std::sqrt(24.0), 1e-12);
    const EnergyReport k4 = energy_report(parse_graph("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"));
    s.near("K4 energy", k4.energy, 6.0, 1e-12);
    s.near("K4 rank bound = McClelland", k4.bound_rank, k4.bound_mcclelland, 1e-12);
    bool dup = false;
    try {
      parse_graph("3\n0 1\n0 1\n");
    } catch (const Error& e) {
      dup = e.kind() == ErrorKind::DuplicateEdge;
    }
    s.truth("duplicate edge rejected", dup);
  });

  return s.take();
}

}  // namespace opineq
