#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "opineq/ineq.hpp"
#include "opineq/rng.hpp"

namespace opineq {

/// Named operands of one trial. Vectors are stored as single-column matrices.
struct TrialInputs {
  std::string kind;  // which generator variant produced them
  std::vector<std::pair<std::string, ComplexMatrix>> matrices;

  const ComplexMatrix& get(const std::string& name) const;
  void put(std::string name, ComplexMatrix m) { matrices.emplace_back(std::move(name), std::move(m)); }
};

/// Parameter grids shared by every family.
struct GridSpec {
  std::vector<SchattenP> p_grid;
  std::vector<std::pair<double, double>> alpha_t_grid;

  /// Finite orders >= 1 from p_grid, ascending.
  std::vector<double> finite_orders() const;
  /// Orders usable by norm-based checks (p >= 1 or inf).
  std::vector<SchattenP> norm_orders() const;
  /// Distinct alpha values of alpha_t_grid, ascending.
  std::vector<double> alphas() const;
};

struct CheckFamily {
  std::string name;
  std::function<TrialInputs(int n, int trial, Rng& rng)> generate;
  std::function<Reports(const TrialInputs& in, const GridSpec& grid)> evaluate;
};

using Registry = std::vector<CheckFamily>;

/// Every inequality family, in a fixed order.
const Registry& default_registry();
const CheckFamily* find_family(const Registry& reg, const std::string& name);

}  // namespace opineq
