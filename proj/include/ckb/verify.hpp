#pragma once

#include <string>
#include <vector>

#include "ckb/numeric.hpp"

namespace ckb {

enum class CheckStatus { Pass, Fail, Skip };

struct Check {
  std::string name;
  std::string params;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  double ms = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

struct VerifyOptions {
  int d_max = 4;
  int n_max = 40;    // d = 2 table depth
  int order = 20;    // series order for d >= 3
  Int guard = Int(50000000);
  bool long_run = false;
};

std::vector<std::string> suite_names();
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt);

// Deterministic report text (stdout material, no timings).
std::string report_text(const VerifyReport& rep);
// Timing side channel (stderr material).
std::string report_timings(const VerifyReport& rep);

}  // namespace ckb
