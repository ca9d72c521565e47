#pragma once

// Registry of property suites run by `hkmod verify-all`.

#include <functional>
#include <string>
#include <vector>

#include "hkmod/fujiki.hpp"

namespace hkmod {

struct PropertyResult {
  std::string suite;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct VerifyOptions {
  /// Runs only suites whose name equals the filter, or properties whose
  /// "suite.name" contains it. Empty runs everything.
  std::string filter;
  /// Fujiki constant table under test; defaults to the built-in table.
  std::function<Rational(HkType, int)> fujiki_table = builtin_fujiki_constant;
  /// Scales randomized case counts.
  int effort = 1;
};

std::vector<std::string> suite_names();

/// Runs the selected suites concurrently; results are ordered by suite name
/// and then by registration order.
std::vector<PropertyResult> verify_all(const VerifyOptions& options = {});

}  // namespace hkmod
