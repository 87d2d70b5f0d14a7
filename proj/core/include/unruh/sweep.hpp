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
#include <optional>
#include <string>
#include <vector>

#include "unruh/error.hpp"
#include "unruh/measures.hpp"
#include "unruh/optimizer.hpp"
#include "unruh/rindler.hpp"

namespace unruh {

struct SweepConfig {
  std::optional<RindlerPair> pair;  ///< empty means all three pairs
  double r_min = 0.0;
  double r_max = UnruhParameter::kMax;
  int steps = 101;
  OptimizerConfig optimizer;

  /// Throws InvalidArgument.
  void validate() const;
};

/// One row of figure data.
struct CorrelationRecord {
  double r = 0.0;
  RindlerPair pair = RindlerPair::AI;
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double quantum_discord = 0.0;
  double log_negativity = 0.0;
  double theta_opt = 0.0;
  double phi_opt = 0.0;
  double min_conditional_entropy = 0.0;
};

/// A numerical error raised while evaluating a particular r.
class NumericFailure : public Error {
 public:
  NumericFailure(double r, RindlerPair pair, const std::string& what);
  double r() const { return r_; }

 private:
  double r_;
};

/// Values this close below zero are roundoff and are reported as 0.
inline constexpr double kReportClampTol = 1e-9;

/// Evaluate every measure for one reduced state. Throws NumericFailure.
CorrelationRecord evaluate_record(UnruhParameter r, RindlerPair pair,
                                  const OptimizerConfig& cfg = {});

/// Inclusive linear grid; the last point is exactly r_max.
std::vector<double> r_grid(double r_min, double r_max, int steps);

/// Rows grouped by pair (AI, AII, III), r ascending within each group.
std::vector<CorrelationRecord> run_sweep(const SweepConfig& cfg);

inline constexpr const char* kCsvHeader =
    "r,pair,mutual_information,classical_correlation,quantum_discord,log_negativity,"
    "theta_opt,phi_opt,min_conditional_entropy";

/// 12 significant digits in positional notation, trailing zeros trimmed;
/// zero prints as "0".
std::string format_number(double x);

std::string csv_row(const CorrelationRecord& rec);
void write_csv(std::ostream& out, const std::vector<CorrelationRecord>& records);

}  // namespace unruh
