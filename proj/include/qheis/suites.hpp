#pragma once

#include "qheis/coeff.hpp"
#include "qheis/report.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qheis {

/// Bad suite name, bound name or bound value.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::string suite;
  QValue q = QValue::symbolic();
  /// Overrides of the suite's default bounds.
  std::map<std::string, long> bounds;
  unsigned jobs = 1;
};

/// The fixed catalog, in documentation order.
const std::vector<std::string> &suite_names();
/// Throws UsageError for an unknown suite.
std::map<std::string, long> default_bounds(const std::string &suite);

/// Runs every check of the suite. Entries come out in generation order
/// whatever the number of jobs. A q outside the suite's hypotheses yields
/// skipped-degenerate entries; an exception inside a check yields a failure.
Report run_suite(const SuiteConfig &cfg);

} // namespace qheis
