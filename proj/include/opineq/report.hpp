#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "opineq/linalg.hpp"

namespace opineq {

inline constexpr double kDefaultTolRel = 1e-8;
/// Normalized gaps above this value count as clearly non-parallel.
inline constexpr double kParallelIndeterminateCeiling = 1e-6;

enum class Relation {
  LessEqual,  // lhs <= rhs + tau
  Equal,      // |lhs - rhs| <= tau
  Agree,      // lhs, rhs are normalized gaps of two parallelism criteria
};

std::string to_string(Relation r);
Relation parse_relation(const std::string& s);

using Params = std::vector<std::pair<std::string, std::string>>;

struct BoundReport {
  std::string check_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = true;
  bool indeterminate = false;
  Relation relation = Relation::LessEqual;
  Params params;
  std::uint64_t input_digest = 0;

  const std::string* param(const std::string& key) const;
};

using Reports = std::vector<BoundReport>;

/// tau = tol_rel * max(1, |lhs|, |rhs|)
double tolerance(double lhs, double rhs, double tol_rel);

/// Recomputes slack, holds and indeterminate from lhs, rhs and the relation.
void judge(BoundReport& r, double tol_rel = kDefaultTolRel);

BoundReport make_report(std::string check_id, double lhs, double rhs, Params params,
                        std::uint64_t digest, Relation relation = Relation::LessEqual);

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// FNV-1a over shapes, entry bits and strings.
class Digest {
 public:
  Digest& add(const ComplexMatrix& a);
  Digest& add(double v);
  Digest& add(std::int64_t v);
  Digest& add(const std::string& s);
  std::uint64_t value() const { return h_; }

 private:
  void bytes(const void* p, std::size_t n);
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string digest_hex(std::uint64_t d);

}  // namespace opineq
