#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace circlespace {

struct CheckRow {
  std::string name;
  bool passed = false;
  // Worst observed value and the bound it is compared with.
  double value = 0.0;
  double bound = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  // Multiplies every sample count (1.0 = full size).
  double scale = 0.1;
};

std::vector<CheckRow> invariant_suite(const SuiteOptions& options = {});

}  // namespace circlespace
