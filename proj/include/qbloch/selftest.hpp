#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qbloch {

struct SelftestResult {
  std::string name;
  bool pass = false;
  long long checks = 0;    // individual assertions or samples examined
  long long failures = 0;  // checks that missed their tolerance
  std::string detail;
  double seconds = 0.0;
};

struct SelftestOptions {
  std::uint64_t seed = 20250810;
};

// "<PASS|FAIL> name  checks=N failures=M (detail) [t s]"
void print_result_line(std::ostream& os, const SelftestResult& r);

// The full verification suite: constraint/oracle equivalence, the closed-form
// determinant, the operator algebra, pure-state geometry, the radius/gamma
// identities, sampler soundness, the dynamics laws, orthogonality criteria,
// eigenvalue interlacing, the qudit minor conditions, and the worked example
// through the CLI. When `progress` is given, one line is printed as each
// suite finishes.
std::vector<SelftestResult> run_selftest(const SelftestOptions& options = {},
                                         std::ostream* progress = nullptr);

}  // namespace qbloch
