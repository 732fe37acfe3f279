#include <algorithm>
#include <cmath>

#include "ineq_common.hpp"

namespace opineq {

using namespace detail;

namespace {

void require_order_at_least(double p, double lo, const char* name) {
  if (!(p >= lo) || !std::isfinite(p)) {
    raise(ErrorKind::BadExponents, std::string(name) + " must be finite and at least " + format_double(lo));
  }
}

double norm_sv(const RealVector& s, double p) { return schatten_from_singular_values(s, SchattenP(p)); }

}  // namespace

Reports check_rank_schatten(const ComplexMatrix& a, double p, double q) {
  require_order_at_least(p, 1.0, "p");
  require_order_at_least(q, 1.0, "q");
  const Params params{{"p", format_double(p)}, {"q", format_double(q)}};
  const std::uint64_t dig = digest_of({&a}, params);
  const RealVector s = svd(a).singular_values;
  const double k = numeric_rank(s, a.rows(), a.cols());
  const double r = p * q / (p + q);

  Reports out;
  out.push_back(make_report("rank-general", norm_sv(s, 2.0 * r), std::pow(k, 1.0 / (2.0 * q)) * norm_sv(s, 2.0 * p),
                            params, dig));
  out.push_back(make_report("rank-pp", norm_sv(s, p), std::pow(k, 1.0 / (2.0 * p)) * norm_sv(s, 2.0 * p), params, dig));
  out.push_back(make_report("rank-general-2", norm_sv(s, 2.0 * p * r),
                            std::pow(k, 1.0 / (2.0 * p * q)) * norm_sv(s, 2.0 * p * p), params, dig));
  out.push_back(make_report("rank-pp0", norm_sv(s, 2.0 * p),
                            std::pow(k, (p - 1.0) / (2.0 * p * p)) * norm_sv(s, 2.0 * p * p), params, dig));
  out.push_back(make_report("rank-chain", std::pow(k, 1.0 / (2.0 * p)) * norm_sv(s, 2.0 * p),
                            std::pow(k, (2.0 * p - 1.0) / (2.0 * p * p)) * norm_sv(s, 2.0 * p * p), params, dig));
  return out;
}

Reports check_orthonormal_sums(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& y,
                               double alpha, double p, double q) {
  require_square(a, "check_orthonormal_sums");
  require_order_at_least(p, 1.0, "p");
  require_order_at_least(q, 1.0, "q");
  require_unit_interval(alpha, "alpha");
  if (x.rows() != a.rows() || y.rows() != a.rows() || x.cols() != y.cols()) {
    raise(ErrorKind::DimensionMismatch, "check_orthonormal_sums: orthonormal sets do not fit A");
  }
  require_orthonormal(x);
  require_orthonormal(y);
  const Params params{{"p", format_double(p)}, {"q", format_double(q)}, {"alpha", format_double(alpha)}};
  const std::uint64_t dig = digest_of({&a, &x, &y}, params);
  const double r = p * q / (p + q);
  const ComplexMatrix ax = a * x;
  RealVector diag(x.cols()), pair(x.cols());
  for (Eigen::Index k = 0; k < x.cols(); ++k) {
    diag(k) = std::abs(x.col(k).dot(ax.col(k)));
    pair(k) = std::abs(y.col(k).dot(ax.col(k)));
  }
  auto power_sum = [](const RealVector& v, double e) {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < v.size(); ++k) acc += std::pow(v(k), e);
    return acc;
  };
  const AbsFactors fa(a);
  const RealVector& s = fa.singular_values();

  Reports out;
  if (p >= 2.0 && q >= 2.0) {
    const ComplexMatrix f = fa.abs_power(alpha);
    const ComplexMatrix g = fa.abs_adjoint_power(1.0 - alpha);
    const ComplexMatrix f2g2 = fa.abs_power(2.0 * alpha) * fa.abs_adjoint_power(2.0 * (1.0 - alpha));
    const double rhs_general = 0.5 * std::pow(snorm(f, SchattenP(2.0 * p)), 2.0 * r) *
                                   std::pow(snorm(g, SchattenP(2.0 * q)), 2.0 * r) +
                               0.5 * std::pow(snorm(f2g2, SchattenP(r)), r);
    out.push_back(make_report("on-general", power_sum(diag, 2.0 * r), rhs_general, params, dig));

    const double lhs_p = power_sum(diag, p);
    const double rhs_pq = 0.5 * std::pow(snorm(f, SchattenP(2.0 * p)), p) * std::pow(snorm(g, SchattenP(2.0 * p)), p) +
                          0.5 * std::pow(snorm(f2g2, SchattenP(0.5 * p)), 0.5 * p);
    out.push_back(make_report("on-pq", lhs_p, rhs_pq, params, dig));

    const ComplexMatrix a2 = a * a;
    const double np = norm_sv(s, p);
    const double n2 = snorm(a2, SchattenP(0.5 * p));
    out.push_back(make_report("on-half", lhs_p, 0.5 * std::pow(np, p) + 0.5 * std::pow(n2, 0.5 * p), params, dig));
    out.push_back(make_report("on-half-root", std::pow(lhs_p, 1.0 / p),
                              std::pow(2.0, -1.0 / p) * (np + std::sqrt(n2)), params, dig));
  }
  const double k = numeric_rank(s, a.rows(), a.cols());
  const double n2p = norm_sv(s, 2.0 * p);
  out.push_back(make_report("on-pair-rank", power_sum(pair, 2.0 * r), std::pow(k, r / q) * std::pow(n2p, 2.0 * r),
                            params, dig));
  out.push_back(make_report("on-pair-rank-pp", power_sum(pair, p), std::sqrt(k) * std::pow(n2p, p), params, dig));
  return out;
}

Reports check_weyl_chain(const ComplexMatrix& a, double p) {
  require_square(a, "check_weyl_chain");
  require_order_at_least(p, 1.0, "p");
  const Params params{{"p", format_double(p)}};
  const std::uint64_t dig = digest_of({&a}, params);
  const SchurEigen se = schur_eigenvalues(a);
  double eig_sum = 0.0;
  for (Eigen::Index j = 0; j < se.values.size(); ++j) eig_sum += std::pow(std::abs(se.values(j)), p);
  const AbsFactors fa(a);
  const RealVector& s = fa.singular_values();
  const double np_p = schatten_power_from_singular_values(s, p);

  Reports out;
  if (p >= 2.0) {
    const double sq = schatten_power(a * a, 0.5 * p);
    const double middle = 0.5 * np_p + 0.5 * sq;
    out.push_back(make_report("weyl-refined", eig_sum, middle, params, dig));
    out.push_back(make_report("weyl-refined-link", middle, np_p, params, dig));
    out.push_back(make_report("weyl-square-power", sq, np_p, params, dig));
  }
  out.push_back(make_report("weyl-classic", eig_sum, np_p, params, dig));
  for (double alpha : {0.25, 0.5, 0.75}) {
    Params pp = params;
    pp.emplace_back("alpha", format_double(alpha));
    const double rhs = 0.5 * schatten_power(fa.abs_power(2.0 * alpha), p) +
                       0.5 * schatten_power(fa.abs_adjoint_power(2.0 * (1.0 - alpha)), p);
    out.push_back(make_report("weyl-power-pair", eig_sum, rhs, pp, dig));
  }
  const double k = numeric_rank(s, a.rows(), a.cols());
  out.push_back(make_report("weyl-rank", eig_sum, std::sqrt(k) * std::pow(norm_sv(s, 2.0 * p), p), params, dig));
  return out;
}

Reports check_schatten_monotone(const ComplexMatrix& a, SchattenP p, SchattenP q,
                                const std::vector<SchattenP>& grid) {
  if (p.is_inf() || p.finite() < 1.0 || !(p.value() < q.value())) {
    raise(ErrorKind::BadExponents, "check_schatten_monotone needs 1 <= p < q");
  }
  Params params{{"p", p.label()}, {"q", q.label()}};
  const std::uint64_t dig = digest_of({&a}, params);
  const RealVector s = svd(a).singular_values;
  const double np = schatten_from_singular_values(s, p);
  const double nq = schatten_from_singular_values(s, q);
  const double n = static_cast<double>(std::min(a.rows(), a.cols()));

  Reports out;
  out.push_back(make_report("mono-decreasing", nq, np, params, dig));
  if (!q.is_inf()) {
    const double e = (q.finite() - p.finite()) / (p.finite() * q.finite());
    out.push_back(make_report("mono-reverse", np, std::pow(n, e) * nq, params, dig));
  }
  std::vector<SchattenP> g;
  for (const SchattenP& x : grid) {
    if (x.is_inf() || x.finite() >= 1.0) g.push_back(x);
  }
  std::sort(g.begin(), g.end(), [](const SchattenP& l, const SchattenP& r) { return l.value() < r.value(); });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  auto normalized = [&](const SchattenP& x) {
    const double scale = x.is_inf() ? 1.0 : std::pow(n, -1.0 / x.finite());
    return scale * schatten_from_singular_values(s, x);
  };
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const Params gp{{"p", g[i].label()}, {"q", g[i + 1].label()}};
    out.push_back(make_report("mono-normalized", normalized(g[i]), normalized(g[i + 1]), gp,
                              digest_of({&a}, gp)));
  }
  return out;
}

}  // namespace opineq
