#pragma once

#include <iosfwd>

#include "pencil/eigen.hpp"

namespace pencil {

/// Named randomized invariant suites backing the `check` command.
/// Names: oracle-equivalence, canonical, realization, reflection.
struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t count = 0;  // 0 = suite default
  EnumOptions enums;
};

struct SuiteResult {
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

std::vector<std::string> suite_names();

/// Runs one suite, logging deterministic progress lines (independent of the
/// worker count). Throws errc::invalid_parameter for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts, std::ostream& log);

}  // namespace pencil
