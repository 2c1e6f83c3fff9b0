#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dmod::verify {

struct Options {
  std::uint64_t seed = 1;
  // Perturb Q in the annihilator suite (negative control).
  bool corrupt_q = false;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string witness;  // first failing instance
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws dmod::PreconditionError for an unknown name.
SuiteResult run_suite(const std::string& name, const Options& options);

}  // namespace dmod::verify
