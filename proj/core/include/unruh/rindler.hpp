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

// Tripartite state of an inertial qubit A and the two Rindler-wedge modes
// I and II of a uniformly accelerated Dirac-field observer, plus the
// closed-form expressions used to cross-check the numerics.

#include <array>
#include <numbers>
#include <optional>
#include <string_view>
#include <utility>

#include "unruh/angles.hpp"
#include "unruh/qmat.hpp"

namespace unruh {

/// Acceleration parameter r in [0, pi/4], with cos r = (exp(-2 pi w / a) + 1)^(-1/2).
/// r = pi/4 is the infinite-acceleration limit.
class UnruhParameter {
 public:
  static constexpr double kMax = std::numbers::pi / 4.0;

  UnruhParameter() = default;
  /// Throws InvalidArgument outside [0, pi/4]. Values within 1e-15 of an
  /// endpoint snap to it.
  explicit UnruhParameter(double r);

  /// Mode frequency and proper acceleration in natural units. Throws
  /// NonPositiveInput unless both are positive.
  static UnruhParameter from_acceleration(double omega, double acceleration);

  double value() const { return r_; }

 private:
  double r_ = 0.0;
};

/// r for a mode of frequency `omega` seen by an observer with proper
/// acceleration `acceleration`. Results below 1e-100 are reported as 0.
UnruhParameter acceleration_to_r(double omega, double acceleration);

/// Fermi-Dirac occupation 1 / (exp(2 pi w / a) + 1) = sin^2 r.
double thermal_occupation(double omega, double acceleration);

/// Bipartite reductions of the tripartite state. The first label is the
/// measured subsystem.
enum class RindlerPair { AI, AII, III };

inline constexpr std::array<RindlerPair, 3> kAllPairs = {RindlerPair::AI, RindlerPair::AII,
                                                         RindlerPair::III};

std::string_view to_string(RindlerPair pair);
std::optional<RindlerPair> parse_pair(std::string_view text);

struct PairLabels {
  std::string_view measured;
  std::string_view unmeasured;
};
PairLabels labels(RindlerPair pair);

/// (cos r |000> + sin r |011> + |110>) / sqrt 2 over |A, I, II>, A most
/// significant.
StateVector tripartite_state(UnruhParameter r);

/// The tripartite projector with subsystem dims (2, 2, 2).
DensityMatrix tripartite_density(UnruhParameter r);

/// The 4x4 reduced state written out explicitly, subsystem dims (2, 2).
DensityMatrix reduced_state(UnruhParameter r, RindlerPair pair);

/// Analytic von Neumann entropy of reduced_state(r, pair).
double closed_form_entropy(UnruhParameter r, RindlerPair pair);

enum class Side { Measured, Unmeasured };

/// Analytic entropy of one single-mode marginal of the pair.
double closed_form_marginal_entropy(UnruhParameter r, RindlerPair pair, Side side);

/// Conditional state of mode I after measuring A in the AI pair, written
/// out analytically. `plus` selects the outcome.
ComplexMatrix closed_form_conditional_state(UnruhParameter r, const MeasurementAngles& angles,
                                            bool plus);

struct ConditionalEigenvalues {
  std::array<double, 2> plus;   ///< 1/2 (1 +- sqrt(1 - sin^2 2r cos^4 (theta/2)))
  std::array<double, 2> minus;  ///< 1/2 (1 +- sqrt(1 - sin^2 2r sin^4 (theta/2)))
};

/// Spectra of the two AI conditional states.
ConditionalEigenvalues closed_form_conditional_eigenvalues(UnruhParameter r, double theta);

/// Outcome probabilities {p+, p-} of measuring the first subsystem.
/// 1/2 each for AI and AII, 1/2 (1 -+ cos theta sin^2 r) for III.
std::pair<double, double> closed_form_probabilities(UnruhParameter r, RindlerPair pair,
                                                    double theta);

/// Binary entropy in bits, 0 log 0 = 0.
double binary_entropy(double p);

}  // namespace unruh
