#include <algorithm>
#include <cmath>

#include "ineq_common.hpp"

namespace opineq {

using namespace detail;

namespace {

Params alpha_t(double alpha, double t) { return {{"alpha", format_double(alpha)}, {"t", format_double(t)}}; }

double block_norm_radius(double a, double x, double b, double y) {
  const double h = 0.5 * (a - y);
  return 0.5 * (a + y) + std::sqrt(h * h + x * b);
}

}  // namespace

Reports check_positive_sum_norm(const ComplexMatrix& x, const ComplexMatrix& y, double alpha, double t) {
  require_square(x, "check_positive_sum_norm");
  require_same_shape(x, y, "check_positive_sum_norm");
  require_unit_interval(alpha, "alpha");
  require_unit_interval(t, "t");
  const PsdFactor fx(x), fy(y);
  const Params params = alpha_t(alpha, t);
  const std::uint64_t dig = digest_of({&x, &y}, params);
  const double lhs = opnorm(x + y);
  const double nx = opnorm(x), ny = opnorm(y);

  const ComplexMatrix upper = fx.power(1.0 - t) * fy.power(1.0 - alpha);
  const ComplexMatrix lower = fy.power(alpha) * fx.power(t);
  const ComplexMatrix zero = ComplexMatrix::Zero(x.rows(), x.cols());
  const double w = check_radius(block2x2(zero, upper, lower, zero));

  Reports out;
  out.push_back(make_report("pn-w-mediated", lhs, std::max(nx, ny) + w, params, dig));
  out.push_back(make_report("pn-closed-form", lhs, block_norm_radius(nx, opnorm(upper), opnorm(lower), ny), params,
                            dig));
  const double c = opnorm(fx.power(0.5) * fy.power(0.5));
  const double half = block_norm_radius(nx, c, c, ny);
  out.push_back(make_report("pn-half", lhs, half, params, dig));
  out.push_back(make_report("pn-half-vs-max", half, std::max(nx, ny) + c, params, dig));
  return out;
}

BoundReport check_block_radius_lemma(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& b,
                                     const ComplexMatrix& y) {
  require_square(a, "check_block_radius_lemma");
  require_square(y, "check_block_radius_lemma");
  const ComplexMatrix m = block2x2(a, x, b, y);
  const double rhs = block_norm_radius(opnorm(a), opnorm(x), opnorm(b), opnorm(y));
  return make_report("block-radius", spectral_radius(m), rhs, {}, digest_of({&a, &x, &b, &y}, {}));
}

Reports check_numrad_grid(const ComplexMatrix& a, const std::vector<std::pair<double, double>>& grid) {
  require_square(a, "check_numrad_bounds");
  for (const auto& [alpha, t] : grid) {
    require_unit_interval(alpha, "alpha");
    require_unit_interval(t, "t");
  }
  const AbsFactors fa(a);
  const double na = fa.singular_values().size() ? fa.singular_values()(0) : 0.0;
  const double w = check_radius(a);
  // r(|A|^{2t}|A*|^{2a}) = || |A|^t |A*|^a ||^2
  auto quarter_root = [&](double t, double alpha) {
    return std::sqrt(opnorm(fa.abs_power(t) * fa.abs_adjoint_power(alpha)));
  };

  Reports out;
  for (const auto& [alpha, t] : grid) {
    const Params params = alpha_t(alpha, t);
    const std::uint64_t dig = digest_of({&a}, params);
    const double rhs = 0.5 * na + 0.5 * quarter_root(t, alpha) * quarter_root(1.0 - t, 1.0 - alpha);
    out.push_back(make_report("nr-general", w, rhs, params, dig));
    out.push_back(make_report("nr-general-vs-norm", rhs, na, params, dig));
  }
  const std::uint64_t dig = digest_of({&a}, {});
  out.push_back(make_report("nr-pintu", w, 0.5 * na + 0.5 * quarter_root(0.5, 0.5) * quarter_root(0.5, 0.5), {}, dig));
  out.push_back(make_report("nr-kit3", w, 0.5 * na + 0.5 * std::sqrt(opnorm(a * a)), {}, dig));
  out.push_back(make_report("nr-abs-sum", w, 0.5 * opnorm(fa.abs_power(1.0) + fa.abs_adjoint_power(1.0)), {}, dig));
  return out;
}

Reports check_numrad_bounds(const ComplexMatrix& a, double alpha, double t) {
  return check_numrad_grid(a, {{alpha, t}});
}

Reports check_sandwich(const ComplexMatrix& a) {
  require_square(a, "check_sandwich");
  const std::uint64_t dig = digest_of({&a}, {});
  const double na = opnorm(a);
  const double r = spectral_radius(a);
  const double w = check_radius(a);
  const double mid = std::max(0.5 * na, r);

  Reports out;
  out.push_back(make_report("sw-lower", 0.5 * na, mid, {}, dig));
  out.push_back(make_report("sw-mid", mid, w, {}, dig));
  out.push_back(make_report("sw-upper", w, na, {}, dig));
  const ComplexMatrix as = a.adjoint();
  const double fro = a.norm();
  if ((a * as - as * a).norm() <= 1e-10 * std::max(1.0, fro * fro)) {
    out.push_back(make_report("sw-normal-r", w, r, {}, dig, Relation::Equal));
    out.push_back(make_report("sw-normal-norm", w, na, {}, dig, Relation::Equal));
  }
  return out;
}

Reports check_triangle_refined(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "check_triangle_refined");
  const std::uint64_t dig = digest_of({&a, &b}, {});
  const ComplexMatrix as = a.adjoint(), bs = b.adjoint();
  const double na = opnorm(a), nb = opnorm(b);
  const double w_ab = check_radius(as * b);
  const double w_abs = check_radius(a * bs);
  const double r1 = std::sqrt(opnorm(as * a + bs * b) + 2.0 * w_ab);
  const double r2 = std::sqrt(opnorm(a * as + b * bs) + 2.0 * w_abs);
  const double c1 = std::sqrt(na * na + nb * nb + 2.0 * opnorm(as * b));
  const double c2 = std::sqrt(na * na + nb * nb + 2.0 * opnorm(a * bs));

  Reports out;
  for (int sign : {1, -1}) {
    const Params params{{"sign", sign > 0 ? "+" : "-"}};
    const std::uint64_t sd = digest_of({&a, &b}, params);
    const double lhs = opnorm(a + double(sign) * b);
    out.push_back(make_report("tri-astar-b", lhs, r1, params, sd));
    out.push_back(make_report("tri-a-bstar", lhs, r2, params, sd));
  }
  out.push_back(make_report("tri-chain-1", r1, c1, {{"form", "astar-b"}}, dig));
  out.push_back(make_report("tri-chain-1", r2, c2, {{"form", "a-bstar"}}, dig));
  out.push_back(make_report("tri-chain-2", c1, na + nb, {{"form", "astar-b"}}, dig));
  out.push_back(make_report("tri-chain-2", c2, na + nb, {{"form", "a-bstar"}}, dig));
  out.push_back(make_report("tri-min", std::min(r1, r2),
                            std::sqrt(na * na + nb * nb + na * nb + std::min(w_ab, w_abs)), {}, dig));

  // Re(A) Im(A) = 0 forces ||A||^2 = ||A*A + AA*|| / 2
  for (const ComplexMatrix* m : {&a, &b}) {
    const ComplexMatrix prod = real_part(*m) * imag_part(*m);
    const double fro = m->norm();
    if (prod.norm() <= 1e-10 * std::max(1.0, fro * fro)) {
      const ComplexMatrix ms = m->adjoint();
      const Params params{{"operand", m == &a ? "A" : "B"}};
      out.push_back(make_report("tri-normeq", opnorm(*m), std::sqrt(0.5 * opnorm(ms * *m + *m * ms)), params,
                                digest_of({m}, params), Relation::Equal));
    }
  }
  return out;
}

Reports check_parallelism(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "check_parallelism");
  if (is_zero(a) || is_zero(b)) raise(ErrorKind::ZeroOperand, "check_parallelism needs nonzero operands");
  const std::uint64_t dig = digest_of({&a, &b}, {});
  const ComplexMatrix as = a.adjoint(), bs = b.adjoint();
  const double na = opnorm(a), nb = opnorm(b);
  const double sum = na + nb, prod = na * nb;
  const double m = max_unimodular_norm(a, b, kCheckRadiusTol * std::max({1.0, na, nb})).value;
  const double gap_u = (sum - m) / sum;
  const double gap_1 = (prod - check_radius(as * b)) / prod;
  const double gap_2 = (prod - check_radius(a * bs)) / prod;

  Reports out;
  out.push_back(make_report("par-iff-wAstarB", gap_u, gap_1, {}, dig, Relation::Agree));
  out.push_back(make_report("par-iff-wABstar", gap_u, gap_2, {}, dig, Relation::Agree));
  if (gap_u <= kDefaultTolRel) {
    const double target = na * na + nb * nb;
    out.push_back(make_report("par-necessary-1", opnorm(as * a + bs * b), target, {}, dig, Relation::Equal));
    out.push_back(make_report("par-necessary-2", opnorm(a * as + b * bs), target, {}, dig, Relation::Equal));
  }
  return out;
}

}  // namespace opineq
