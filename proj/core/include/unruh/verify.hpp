// Copyright 2026 The unruhcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unruh/optimizer.hpp"

namespace unruh {

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Soft checks are reported but never fail the run.
  bool soft = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_hard_passed() const;
};

inline constexpr int kMinVerifyGridSteps = 10;
/// Side length of the brute-force angle grid used as the optimizer oracle.
inline constexpr int kOracleGrid = 720;

/// Limit values, closed-form cross-checks, monotonicity and ordering claims
/// for the three reduced states. The r grid for the ordering checks is
/// r_k = k (pi/4) / grid_steps, k = 1..grid_steps. Throws InvalidArgument
/// when grid_steps < kMinVerifyGridSteps.
VerificationReport run_verification(int grid_steps, const OptimizerConfig& cfg = {});

/// One line per check: PASS/FAIL/SOFT, id, title, measured values.
void print_report(std::ostream& out, const VerificationReport& report);

}  // namespace unruh
