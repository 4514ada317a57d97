#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coherent::verify {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long long checked = 0;
  std::string detail;  // first failure, empty on success
};

/// phi under random compositions of row/column slicings, k in {2..5}.
SuiteResult slicing(int trials = 1000, std::uint64_t seed = 1);

/// is_bigraphic against brute-force realization over every 0-1 matrix, n <= n_max.
SuiteResult gale_ryser(int n_max = 4);

/// Chord-sum identity on random sphere configurations plus the equality configurations.
SuiteResult chord(int trials = 1000, std::uint64_t seed = 1);

/// Max M1 per edge count equals m1_upper and extremal_b1; n M1 <= n^4/4 + 2e^2.
SuiteResult zagreb(int n_max = 4);

/// Names accepted by run_suite, in "all" order.
const std::vector<std::string>& suite_names();

/// "all" runs every suite.  Throws ValidationError on an unknown name.
std::vector<SuiteResult> run_suite(const std::string& name);

}  // namespace coherent::verify
