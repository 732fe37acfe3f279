#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace opineq {

/// mt19937_64 with hand-written uniform and normal transforms, so a seed gives the
/// same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Standard normal by the Marsaglia polar method.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a(std::string_view s);

/// Seed for one trial, independent of execution order.
std::uint64_t trial_seed(std::uint64_t master, std::string_view family, int dim, int trial);

}  // namespace opineq
