#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rquant::testing {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool passes() const { return failures == 0; }
};

/// Every randomized property, `cases` instances each, deterministic in seed.
std::vector<PropertyResult> run_property_suite(int cases, std::uint32_t seed);

}  // namespace rquant::testing
