#include <algorithm>
#include <cmath>

#include "ineq_common.hpp"

namespace opineq {

using namespace detail;

namespace detail {

std::uint64_t digest_of(std::initializer_list<const ComplexMatrix*> mats, const Params& params) {
  Digest d;
  for (const ComplexMatrix* m : mats) d.add(*m);
  for (const auto& [k, v] : params) d.add(k).add(v);
  return d.value();
}

}  // namespace detail

double check_radius(const ComplexMatrix& a) {
  return numerical_radius(a, kCheckRadiusTol * std::max(1.0, operator_norm(a))).value;
}

PowerPair::PowerPair(double a) : alpha(a) { require_unit_interval(a, "alpha"); }

BoundReport check_agm(const ComplexMatrix& a, const ComplexMatrix& b, SchattenP p) {
  require_same_shape(a, b, "check_agm");
  const Params params = with_p(p);
  const double lhs = snorm(a * b.adjoint(), p);
  const double rhs = 0.5 * snorm(a.adjoint() * a + b.adjoint() * b, p);
  return make_report("agm", lhs, rhs, params, digest_of({&a, &b}, params));
}

Reports check_sum_product(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                          const ComplexMatrix& y, SchattenP p) {
  for (const ComplexMatrix* m : {&a, &b, &x, &y}) {
    require_square(*m, "check_sum_product");
    require_same_shape(a, *m, "check_sum_product");
  }
  require_norm_order(p, "check_sum_product");
  const Params params = with_p(p);
  const std::uint64_t dig = digest_of({&a, &b, &x, &y}, params);
  const ComplexMatrix as = a.adjoint(), bs = b.adjoint(), xs = x.adjoint(), ys = y.adjoint();
  const double lhs = snorm(a * x * b + b * y * a, p);

  Reports out;
  {
    const double t1 = snorm(as * a + x * b * bs * xs, p);
    const double t2 = snorm(bs * b + y * a * as * ys, p);
    const double c = snorm(as * b + x * b * as * ys, p);
    out.push_back(make_report("sum-product-a", lhs, 0.5 * direct_sum_schatten(t1, t2, p) + 0.5 * doubled(c, p),
                              params, dig));
  }
  {
    const double t1 = snorm(xs * as * a * x + b * bs, p);
    const double t2 = snorm(y * a * as * ys + bs * b, p);
    const double c = snorm(xs * as * b + b * as * ys, p);
    out.push_back(make_report("sum-product-b", lhs, 0.5 * direct_sum_schatten(t1, t2, p) + 0.5 * doubled(c, p),
                              params, dig));
  }
  return out;
}

Reports check_commutator_family(const ComplexMatrix& a, const ComplexMatrix& b, int sign, SchattenP p) {
  require_square(a, "check_commutator_family");
  require_same_shape(a, b, "check_commutator_family");
  require_norm_order(p, "check_commutator_family");
  if (sign != 1 && sign != -1) raise(ErrorKind::BadConfig, "check_commutator_family: sign must be +1 or -1");
  Params params = with_p(p);
  params.emplace_back("sign", sign > 0 ? "+" : "-");
  const std::uint64_t dig = digest_of({&a, &b}, params);
  const double s = static_cast<double>(sign);
  const ComplexMatrix as = a.adjoint(), bs = b.adjoint();
  const ComplexMatrix c = a * b + s * (b * a);
  const ComplexMatrix d = as * b + s * (b * as);
  const ComplexMatrix g1 = as * a + b * bs;
  const ComplexMatrix g2 = a * as + bs * b;
  const double lhs = snorm(c, p);
  const double nd = snorm(d, p);
  const double n1 = snorm(g1, p), n2 = snorm(g2, p);

  Reports out;
  out.push_back(make_report("comm-block", lhs, 0.5 * direct_sum_schatten(n1, n2, p) + 0.5 * doubled(nd, p),
                            params, dig));
  if (!p.is_inf()) {
    const double q = p.finite();
    const double rhs = 0.5 * std::pow(std::pow(n1, q) + std::pow(n2, q), 1.0 / q) +
                       std::pow(2.0, (1.0 - q) / q) * nd;
    out.push_back(make_report("comm-schatten", lhs, rhs, params, dig));
    return out;
  }
  out.push_back(make_report("comm-op-max", lhs, 0.5 * std::max(n1, n2) + 0.5 * nd, params, dig));
  const double na = opnorm(a), nb = opnorm(b);
  const double normprod = na * nb + 0.5 * nd;
  out.push_back(make_report("comm-normprod", lhs, normprod, params, dig));
  if (na == 0.0 || nb == 0.0) raise(ErrorKind::ZeroOperand, "check_commutator_family: scaled form needs nonzero operands");
  const double u = nb / na, v = na / nb;
  const double scaled = 0.5 * std::max(opnorm(u * (as * a) + v * (b * bs)), opnorm(u * (a * as) + v * (bs * b))) + 0.5 * nd;
  out.push_back(make_report("comm-scaled", lhs, scaled, params, dig));
  out.push_back(make_report("comm-scaled-order", scaled, normprod, params, dig));
  return out;
}

Reports check_square_bounds(const ComplexMatrix& a, SchattenP p) {
  require_square(a, "check_square_bounds");
  require_norm_order(p, "check_square_bounds");
  const Params params = with_p(p);
  const std::uint64_t dig = digest_of({&a}, params);
  const ComplexMatrix as = a.adjoint();
  const ComplexMatrix ata = as * a, aat = a * as;
  const double sq = snorm(a * a, p);
  const double sum = snorm(ata + aat, p);
  const double diff = snorm(ata - aat, p);
  const double pair = direct_sum_schatten(snorm(ata, p), snorm(aat, p), p);

  Reports out;
  out.push_back(make_report("square-a2", sq, 0.5 * doubled(sum, p), params, dig));
  out.push_back(make_report("square-sum", sum, pair + doubled(sq, p), params, dig));
  out.push_back(make_report("square-diff", diff, pair, params, dig));
  if (p.is_inf()) {
    const double na = opnorm(a);
    out.push_back(make_report("square-op-lower", 2.0 * sq, sum, params, dig));
    out.push_back(make_report("square-op-upper", sum, sq + na * na, params, dig));
    out.push_back(make_report("square-op-diff", diff, na * na, params, dig));
  } else {
    const double q = p.finite();
    const double c = std::pow(2.0, (1.0 - q) / q);
    const double r = std::pow(2.0, 1.0 / q);
    const double n2p = snorm(a, SchattenP(2.0 * q));
    out.push_back(make_report("square-chain-1", sq, c * sum, params, dig));
    out.push_back(make_report("square-chain-2", c * sum, r * n2p * n2p, params, dig));
    out.push_back(make_report("square-schatten-sum", sum, r * (n2p * n2p + sq), params, dig));
    out.push_back(make_report("square-schatten-diff", diff, r * n2p * n2p, params, dig));
  }
  return out;
}

Reports check_moore_penrose(const ComplexMatrix& a, SchattenP p) {
  require_norm_order(p, "check_moore_penrose");
  const Params params = with_p(p);
  const std::uint64_t dig = digest_of({&a}, params);
  const ComplexMatrix ad = pseudoinverse(a);
  const ComplexMatrix as = a.adjoint();
  const ComplexMatrix right = as * a + ad * a;
  const ComplexMatrix left = a * as + a * ad;
  const double na = snorm(a, p);
  const double nr = snorm(right, p), nl = snorm(left, p);

  Reports out;
  out.push_back(make_report("mp-block-1", na, 0.5 * doubled(nr, p), params, dig));
  out.push_back(make_report("mp-block-2", na, 0.25 * direct_sum_schatten(nl, nr, p) + 0.5 * doubled(na, p),
                            params, dig));
  out.push_back(make_report("mp-right", na, 0.5 * nr, params, dig));
  out.push_back(make_report("mp-left", na, 0.5 * nl, params, dig));
  const double pr = snorm(as * a + range_projector(as), p);
  const double pl = snorm(a * as + range_projector(a), p);
  out.push_back(make_report("mp-min-projector", na, 0.5 * std::min(pr, pl), params, dig));
  return out;
}

Reports check_positive_sum_split(const ComplexMatrix& x, const ComplexMatrix& y, double alpha, double t,
                                 SchattenP p) {
  require_square(x, "check_positive_sum_split");
  require_same_shape(x, y, "check_positive_sum_split");
  require_unit_interval(alpha, "alpha");
  require_unit_interval(t, "t");
  require_norm_order(p, "check_positive_sum_split");
  const PsdFactor fx(x), fy(y);
  Params params = with_p(p);
  params.emplace_back("alpha", format_double(alpha));
  params.emplace_back("t", format_double(t));
  const std::uint64_t dig = digest_of({&x, &y}, params);
  const double lhs = snorm(x + y, p);

  Reports out;
  const double first = direct_sum_schatten(snorm(fx.power(2.0 * t), p), snorm(fy.power(2.0 * alpha), p), p);
  const double second =
      direct_sum_schatten(snorm(fx.power(2.0 * (1.0 - t)), p), snorm(fy.power(2.0 * (1.0 - alpha)), p), p);
  const ComplexMatrix cross = fx.power(t) * fy.power(alpha) + fx.power(1.0 - t) * fy.power(1.0 - alpha);
  out.push_back(make_report("psplit-general", lhs, 0.5 * first + 0.5 * second + 0.5 * doubled(snorm(cross, p), p),
                            params, dig));
  const double half = direct_sum_schatten(snorm(x, p), snorm(y, p), p) + doubled(snorm(fx.power(0.5) * fy.power(0.5), p), p);
  out.push_back(make_report("psplit-half", lhs, half, params, dig));
  return out;
}

Reports check_weighted_product(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                               const ComplexMatrix& y, SchattenP p) {
  for (const ComplexMatrix* m : {&a, &b, &x, &y}) {
    require_square(*m, "check_weighted_product");
    require_same_shape(a, *m, "check_weighted_product");
  }
  require_norm_order(p, "check_weighted_product");
  const PsdFactor fx(x), fy(y);
  const Params params = with_p(p);
  const std::uint64_t dig = digest_of({&a, &b, &x, &y}, params);
  const ComplexMatrix as = a.adjoint(), bs = b.adjoint();
  const ComplexMatrix xh = fx.power(0.5), yh = fy.power(0.5);
  const ComplexMatrix wa = x * (as * a + b * bs);
  const ComplexMatrix wb = y * (bs * b + a * as);
  const ComplexMatrix axb = a * x * b;

  Reports out;
  {
    const double lhs = snorm(axb + b * y * a, p);
    const double rhs = 0.5 * direct_sum_schatten(snorm(real_part(wa), p), snorm(real_part(wb), p), p) +
                       0.5 * doubled(snorm(xh * (as * b + b * as) * yh, p), p);
    out.push_back(make_report("wp-two-term", lhs, rhs, params, dig));
  }
  const double n_axb = snorm(axb, p);
  out.push_back(make_report("wp-y0", n_axb, 0.5 * snorm(real_part(wa), p), params, dig));
  if (!p.is_inf()) return out;

  out.push_back(make_report("wp-w-mediated", n_axb, 0.5 * check_radius(wa), params, dig));
  out.push_back(make_report("wp-w-product", n_axb * n_axb,
                            check_radius(x * as * a) * check_radius(x * b * bs), params, dig));
  // |A| and |B| stand in for the positive operands; they equal A and B when those are PSD
  const AbsFactors fa(a), fb(b);
  const ComplexMatrix pa = fa.abs_power(1.0), qb = fb.abs_power(1.0);
  const ComplexMatrix ph = fa.abs_power(0.5), qh = fb.abs_power(0.5);
  const double w_px = check_radius(pa * x);
  const double w_xq = check_radius(x * qb);
  out.push_back(make_report("wp-sqrt-w", opnorm(ph * xh), std::sqrt(w_px), params, dig));
  const double two_sided = opnorm(ph * x * qh);
  out.push_back(make_report("wp-two-sided", two_sided, std::sqrt(w_px) * std::sqrt(w_xq), params, dig));
  out.push_back(make_report("wp-half-w", two_sided, 0.5 * check_radius(x * pa + x * qb), params, dig));
  return out;
}

BoundReport check_selfadjoint_product_lemma(const ComplexMatrix& a, const ComplexMatrix& b, SchattenP p) {
  require_square(a, "check_selfadjoint_product_lemma");
  require_same_shape(a, b, "check_selfadjoint_product_lemma");
  require_norm_order(p, "check_selfadjoint_product_lemma");
  const ComplexMatrix ab = a * b;
  const double skew = (ab - ab.adjoint()).norm();
  if (skew > kHermTol * ab.norm() && skew > 0.0) {
    raise(ErrorKind::NotSelfadjointProduct, "AB deviates from selfadjoint by " + std::to_string(skew));
  }
  const Params params = with_p(p);
  return make_report("selfadjoint-lemma", snorm(ab, p), snorm(real_part(b * a), p), params,
                     digest_of({&a, &b}, params));
}

}  // namespace opineq
