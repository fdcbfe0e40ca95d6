#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace arbor {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int count = 25;
};

struct InstanceResult {
  std::string descriptor;
  std::string lhs;
  std::string rhs;
  bool pass = true;
  std::string replay;  // graph/partition dump, filled on failure
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<InstanceResult> instances;

  bool all_pass() const;
  int failures() const;
};

/// Names of the identity suites, in display order.
const std::vector<std::string>& suite_names();

/// Runs the named suite: a fixed fixture prelude plus `count` seeded random
/// instances, every check an exact equality. Unknown names throw
/// UnknownSuite.
VerificationReport run_suite(const std::string& name, const VerifyOptions& options);

void render_text(const VerificationReport& report, std::ostream& out);

}  // namespace arbor
