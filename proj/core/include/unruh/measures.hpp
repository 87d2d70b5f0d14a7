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

// Bipartite two-qubit correlation measures. Every measurement acts on the
// first (left) subsystem; callers order subsystems accordingly.

#include <array>
#include <optional>
#include <utility>

#include "unruh/angles.hpp"
#include "unruh/optimizer.hpp"
#include "unruh/qmat.hpp"

namespace unruh {

/// Outcomes at or below this probability are left out of conditional
/// entropy averages and carry no post-measurement state.
inline constexpr double kNegligibleProbability = 1e-12;

struct MeasurementOutcome {
  double probability = 0.0;
  /// State of the unmeasured subsystem; empty when the outcome is negligible.
  std::optional<DensityMatrix> post_state;
};

struct ClassicalCorrelation {
  double value = 0.0;  ///< bits
  MeasurementAngles angles;
  double min_conditional_entropy = 0.0;
};

struct CorrelationResult {
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double quantum_discord = 0.0;
  double log_negativity = 0.0;
  MeasurementAngles optimal_angles;
  double min_conditional_entropy = 0.0;
};

/// S(A) + S(B) - S(AB).
double mutual_information(const DensityMatrix& rho);

/// (I + n.sigma)/2 (x) I and (I - n.sigma)/2 (x) I.
std::pair<ComplexMatrix, ComplexMatrix> projectors(const MeasurementAngles& angles);

/// {+, -} outcomes of measuring the first qubit along `angles`.
std::array<MeasurementOutcome, 2> measure_first(const DensityMatrix& rho,
                                                const MeasurementAngles& angles);

/// sum_j p_j S(rho_{B|j}).
double measured_conditional_entropy(const DensityMatrix& rho, const MeasurementAngles& angles);

/// S(B) minus the minimized measured conditional entropy.
ClassicalCorrelation classical_correlation(const DensityMatrix& rho,
                                           const OptimizerConfig& cfg = {});

double quantum_discord(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

/// log2 of the trace norm of the partial transpose on the first subsystem.
double log_negativity(const DensityMatrix& rho);

/// All measures from one optimizer run, so I = C + D holds to roundoff.
CorrelationResult correlations(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

}  // namespace unruh
