#include "opineq/registry.hpp"

#include <algorithm>
#include <cmath>

#include "opineq/generators.hpp"

namespace opineq {

const ComplexMatrix& TrialInputs::get(const std::string& name) const {
  for (const auto& [k, m] : matrices) {
    if (k == name) return m;
  }
  raise(ErrorKind::BadConfig, "trial inputs lack operand '" + name + "'");
}

std::vector<double> GridSpec::finite_orders() const {
  std::vector<double> out;
  for (const SchattenP& p : p_grid) {
    if (!p.is_inf() && p.finite() >= 1.0) out.push_back(p.finite());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SchattenP> GridSpec::norm_orders() const {
  std::vector<SchattenP> out;
  for (const SchattenP& p : p_grid) {
    if (p.is_inf() || p.finite() >= 1.0) out.push_back(p);
  }
  return out;
}

std::vector<double> GridSpec::alphas() const {
  std::vector<double> out;
  for (const auto& at : alpha_t_grid) out.push_back(at.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void append(Reports& out, Reports more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

ComplexVector as_vector(const ComplexMatrix& m) { return m.col(0); }

// PSD with rank r, r < n gives a singular operand
ComplexMatrix gen_psd_rank(int n, int r, Rng& rng) {
  const ComplexMatrix g = gen_ginibre(r, n, rng);
  return g.adjoint() * g;
}

ComplexMatrix projector(int n, Rng& rng) {
  const int k = rng.uniform_int(1, n);
  const ComplexMatrix q = gen_orthonormal_set(n, k, rng);
  return q * q.adjoint();
}

/// A general square operand drawn from one of several structural classes.
ComplexMatrix structured(int n, int variant, Rng& rng, std::string& kind) {
  switch (variant % 5) {
    case 0: kind = "ginibre"; return gen_ginibre(n, rng);
    case 1: kind = "normal"; return gen_normal(n, rng);
    case 2: kind = "rank-deficient"; return gen_fixed_rank(n, std::max(1, n / 2), rng);
    case 3: kind = "hermitian"; return gen_hermitian(n, rng);
    default: kind = "nilpotent"; return gen_nilpotent(n);
  }
}

TrialInputs single(int n, int trial, Rng& rng) {
  TrialInputs in;
  in.put("A", structured(n, trial, rng, in.kind));
  return in;
}

TrialInputs pair_ab(int n, int trial, Rng& rng) {
  TrialInputs in;
  const ComplexMatrix a = gen_ginibre(n, rng);
  in.put("A", a);
  switch (trial % 5) {
    case 0:
    case 1: in.kind = "ginibre"; in.put("B", gen_ginibre(n, rng)); break;
    case 2: in.kind = "b-equals-a"; in.put("B", a); break;
    case 3: in.kind = "b-adjoint"; in.put("B", a.adjoint()); break;
    default: in.kind = "b-normal"; in.put("B", gen_normal(n, rng)); break;
  }
  return in;
}

TrialInputs psd_pair(int n, int trial, Rng& rng) {
  TrialInputs in;
  in.put("X", gen_psd(n, rng));
  switch (trial % 4) {
    case 0:
    case 1: in.kind = "psd"; in.put("Y", gen_psd(n, rng)); break;
    case 2: in.kind = "psd-singular"; in.put("Y", gen_psd_rank(n, std::max(1, n / 2), rng)); break;
    default: in.kind = "psd-equal"; in.put("Y", in.get("X")); break;
  }
  return in;
}

Registry build() {
  Registry reg;

  reg.push_back({"agm", pair_ab, [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (const SchattenP& p : g.p_grid) out.push_back(check_agm(in.get("A"), in.get("B"), p));
                   return out;
                 }});

  reg.push_back({"sum-product",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   in.kind = trial % 3 == 2 ? "identity-weights" : "ginibre";
                   in.put("A", gen_ginibre(n, rng));
                   in.put("B", gen_ginibre(n, rng));
                   if (trial % 3 == 2) {
                     in.put("X", ComplexMatrix::Identity(n, n));
                     in.put("Y", ComplexMatrix::Identity(n, n));
                   } else {
                     in.put("X", gen_ginibre(n, rng));
                     in.put("Y", gen_ginibre(n, rng));
                   }
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (const SchattenP& p : g.norm_orders()) {
                     append(out, check_sum_product(in.get("A"), in.get("B"), in.get("X"), in.get("Y"), p));
                   }
                   return out;
                 }});

  reg.push_back({"commutator", pair_ab, [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (int sign : {1, -1}) {
                     for (const SchattenP& p : g.norm_orders()) {
                       append(out, check_commutator_family(in.get("A"), in.get("B"), sign, p));
                     }
                   }
                   return out;
                 }});

  reg.push_back({"square", single, [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (const SchattenP& p : g.norm_orders()) append(out, check_square_bounds(in.get("A"), p));
                   return out;
                 }});

  reg.push_back({"moore-penrose",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   switch (trial % 4) {
                     case 0: in.kind = "ginibre"; in.put("A", gen_ginibre(n, rng)); break;
                     case 1: in.kind = "rank-deficient"; in.put("A", gen_fixed_rank(n, std::max(1, n / 2), rng)); break;
                     case 2: in.kind = "rectangular"; in.put("A", gen_ginibre(n, n + 1, rng)); break;
                     default: in.kind = "unitary"; in.put("A", gen_unitary(n, rng)); break;
                   }
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (const SchattenP& p : g.norm_orders()) append(out, check_moore_penrose(in.get("A"), p));
                   return out;
                 }});

  reg.push_back({"positive-split", psd_pair, [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (const SchattenP& p : g.norm_orders()) {
                     for (const auto& [alpha, t] : g.alpha_t_grid) {
                       append(out, check_positive_sum_split(in.get("X"), in.get("Y"), alpha, t, p));
                     }
                   }
                   return out;
                 }});

  reg.push_back({"weighted-product",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   in.kind = trial % 3 == 2 ? "psd-operands" : "ginibre";
                   if (trial % 3 == 2) {
                     in.put("A", gen_psd(n, rng));
                     in.put("B", gen_psd(n, rng));
                   } else {
                     in.put("A", gen_ginibre(n, rng));
                     in.put("B", gen_ginibre(n, rng));
                   }
                   in.put("X", gen_psd(n, rng));
                   in.put("Y", gen_psd(n, rng));
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (const SchattenP& p : g.norm_orders()) {
                     append(out, check_weighted_product(in.get("A"), in.get("B"), in.get("X"), in.get("Y"), p));
                   }
                   return out;
                 }});

  reg.push_back({"selfadjoint-lemma",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   switch (trial % 4) {
                     case 0: {
                       in.kind = "projector";
                       const ComplexMatrix p = projector(n, rng);
                       in.put("A", p);
                       in.put("B", p);
                       break;
                     }
                     case 1: {
                       in.kind = "commuting-hermitian";
                       const ComplexMatrix u = gen_unitary(n, rng);
                       RealVector d1(n), d2(n);
                       for (int i = 0; i < n; ++i) {
                         d1(i) = rng.normal();
                         d2(i) = rng.normal();
                       }
                       in.put("A", u * d1.cast<Complex>().asDiagonal() * u.adjoint());
                       in.put("B", u * d2.cast<Complex>().asDiagonal() * u.adjoint());
                       break;
                     }
                     case 2: {
                       in.kind = "adjoint-pair";
                       const ComplexMatrix a = gen_ginibre(n, rng);
                       in.put("A", a);
                       in.put("B", a.adjoint());
                       break;
                     }
                     default: {
                       // A = S, B = S^{-1} H with S well conditioned, so AB = H up to roundoff
                       in.kind = "similarity";
                       const ComplexMatrix u = gen_unitary(n, rng);
                       RealVector d(n);
                       for (int i = 0; i < n; ++i) d(i) = rng.uniform(1.0, 2.0);
                       const ComplexMatrix h = gen_hermitian(n, rng);
                       const ComplexMatrix s = u * d.cast<Complex>().asDiagonal();
                       const ComplexMatrix s_inv = d.cwiseInverse().cast<Complex>().asDiagonal() * u.adjoint();
                       in.put("A", s);
                       in.put("B", s_inv * h);
                       break;
                     }
                   }
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (const SchattenP& p : g.norm_orders()) {
                     out.push_back(check_selfadjoint_product_lemma(in.get("A"), in.get("B"), p));
                   }
                   return out;
                 }});

  reg.push_back({"rank-schatten",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   const int r = trial % 4 == 0 ? 1 : rng.uniform_int(1, n);
                   in.kind = "rank-" + std::to_string(r);
                   in.put("A", gen_fixed_rank(n, r, rng));
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   const std::vector<double> orders = g.finite_orders();
                   for (double p : orders) {
                     for (double q : orders) append(out, check_rank_schatten(in.get("A"), p, q));
                   }
                   return out;
                 }});

  reg.push_back({"orthonormal-sums",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   in.put("A", structured(n, trial, rng, in.kind));
                   const int k = rng.uniform_int(1, n);
                   in.put("X", gen_orthonormal_set(n, k, rng));
                   in.put("Y", gen_orthonormal_set(n, k, rng));
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   const std::vector<double> orders = g.finite_orders();
                   for (double alpha : g.alphas()) {
                     for (double p : orders) {
                       for (double q : orders) {
                         append(out, check_orthonormal_sums(in.get("A"), in.get("X"), in.get("Y"), alpha, p, q));
                       }
                     }
                   }
                   return out;
                 }});

  reg.push_back({"weyl", single, [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (double p : g.finite_orders()) append(out, check_weyl_chain(in.get("A"), p));
                   return out;
                 }});

  reg.push_back({"monotone",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   switch (trial % 4) {
                     case 0: in.kind = "rank-1"; in.put("A", gen_fixed_rank(n, 1, rng)); break;
                     case 1: in.kind = "identity"; in.put("A", ComplexMatrix::Identity(n, n)); break;
                     default: in.kind = "ginibre"; in.put("A", gen_ginibre(n, rng)); break;
                   }
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   std::vector<SchattenP> orders = g.norm_orders();
                   std::sort(orders.begin(), orders.end(),
                             [](const SchattenP& l, const SchattenP& r) { return l.value() < r.value(); });
                   orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
                   bool first = true;
                   for (std::size_t i = 0; i < orders.size(); ++i) {
                     for (std::size_t j = i + 1; j < orders.size(); ++j) {
                       append(out, check_schatten_monotone(in.get("A"), orders[i], orders[j],
                                                           first ? orders : std::vector<SchattenP>{}));
                       first = false;
                     }
                   }
                   return out;
                 }});

  reg.push_back({"positive-norm", psd_pair, [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (const auto& [alpha, t] : g.alpha_t_grid) {
                     append(out, check_positive_sum_norm(in.get("X"), in.get("Y"), alpha, t));
                   }
                   return out;
                 }});

  reg.push_back({"block-radius",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   in.kind = trial % 3 == 2 ? "psd-blocks" : "ginibre";
                   for (const char* name : {"A", "X", "B", "Y"}) {
                     in.put(name, trial % 3 == 2 ? gen_psd(n, rng) : gen_ginibre(n, rng));
                   }
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec&) {
                   return Reports{check_block_radius_lemma(in.get("A"), in.get("X"), in.get("B"), in.get("Y"))};
                 }});

  reg.push_back({"numrad", single, [](const TrialInputs& in, const GridSpec& g) {
                   return check_numrad_grid(in.get("A"), g.alpha_t_grid);
                 }});

  reg.push_back({"sandwich", single,
                 [](const TrialInputs& in, const GridSpec&) { return check_sandwich(in.get("A")); }});

  reg.push_back({"triangle",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   if (trial % 5 == 4) {
                     in.kind = "hermitian";
                     in.put("A", gen_hermitian(n, rng));
                     in.put("B", gen_hermitian(n, rng) * Complex(0.0, 1.0));
                     return in;
                   }
                   return pair_ab(n, trial, rng);
                 },
                 [](const TrialInputs& in, const GridSpec&) {
                   return check_triangle_refined(in.get("A"), in.get("B"));
                 }});

  reg.push_back({"parallelism",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   const double phase = rng.uniform(0.0, 2.0 * M_PI);
                   const Complex mu = std::polar(1.0, phase);
                   switch (trial % 4) {
                     case 0: {
                       in.kind = "scalar-multiple";
                       const ComplexMatrix a = gen_ginibre(n, rng);
                       in.put("A", a);
                       in.put("B", rng.uniform(0.25, 4.0) * mu * a);
                       break;
                     }
                     case 1: {
                       // common top singular pair
                       in.kind = "shared-maximizer";
                       const ComplexMatrix u = gen_unitary(n, rng), v = gen_unitary(n, rng);
                       RealVector s(n), t(n);
                       s(0) = 2.0;
                       t(0) = rng.uniform(1.0, 3.0);
                       for (int i = 1; i < n; ++i) {
                         s(i) = rng.uniform(0.0, 1.5);
                         t(i) = rng.uniform(0.0, 0.9 * t(0));
                       }
                       in.put("A", u * s.cast<Complex>().asDiagonal() * v.adjoint());
                       in.put("B", mu * u * t.cast<Complex>().asDiagonal() * v.adjoint());
                       break;
                     }
                     default: {
                       in.kind = "ginibre";
                       in.put("A", gen_ginibre(n, rng));
                       in.put("B", gen_ginibre(n, rng));
                       break;
                     }
                   }
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec&) { return check_parallelism(in.get("A"), in.get("B")); }});

  reg.push_back({"mixed-schwarz",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   in.put("A", structured(n, trial, rng, in.kind));
                   in.put("x", gen_complex_vector(n, rng));
                   in.put("y", gen_complex_vector(n, rng));
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (double alpha : g.alphas()) {
                     out.push_back(
                         check_mixed_schwarz(in.get("A"), as_vector(in.get("x")), as_vector(in.get("y")), alpha));
                   }
                   return out;
                 }});

  reg.push_back({"mccarthy",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   in.kind = trial % 2 ? "psd-singular" : "psd";
                   in.put("P", trial % 2 ? gen_psd_rank(n, std::max(1, n / 2), rng) : gen_psd(n, rng));
                   in.put("x", gen_unit_vector(n, rng));
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec& g) {
                   Reports out;
                   for (double p : g.finite_orders()) out.push_back(check_mccarthy(in.get("P"), as_vector(in.get("x")), p));
                   return out;
                 }});

  reg.push_back({"buzano",
                 [](int n, int trial, Rng& rng) {
                   TrialInputs in;
                   const ComplexVector x = gen_complex_vector(n, rng);
                   in.put("x", x);
                   in.put("y", gen_complex_vector(n, rng));
                   if (trial % 3 == 2) {
                     in.kind = "e-along-x";
                     in.put("e", x / x.norm());
                   } else {
                     in.kind = "random";
                     in.put("e", gen_unit_vector(n, rng));
                   }
                   return in;
                 },
                 [](const TrialInputs& in, const GridSpec&) {
                   return Reports{
                       check_buzano(as_vector(in.get("x")), as_vector(in.get("y")), as_vector(in.get("e")))};
                 }});

  return reg;
}

}  // namespace

const Registry& default_registry() {
  static const Registry reg = build();
  return reg;
}

const CheckFamily* find_family(const Registry& reg, const std::string& name) {
  for (const CheckFamily& f : reg) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

}  // namespace opineq
