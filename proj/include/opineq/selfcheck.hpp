#pragma once

#include <string>
#include <vector>

namespace opineq {

struct SelfCheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fixed anchor cases with known values across every module.
std::vector<SelfCheckItem> run_selfcheck();

}  // namespace opineq
