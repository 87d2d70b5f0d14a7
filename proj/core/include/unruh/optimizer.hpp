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

#include <functional>

#include "unruh/angles.hpp"

namespace unruh {

/// Coarse grid followed by coordinate-wise golden-section refinement.
struct OptimizerConfig {
  int theta_grid = 64;            ///< points on [0, pi], endpoints included
  int phi_grid = 32;              ///< points on [0, 2 pi), endpoint excluded
  double refine_tolerance = 1e-8; ///< final bracket width per coordinate, radians
  int max_refine_iters = 200;     ///< golden-section steps allowed per pass
  int refine_rounds = 3;          ///< alternating theta/phi passes

  /// Throws InvalidArgument if any field is out of range.
  void validate() const;
};

struct OptimumReport {
  MeasurementAngles angles;
  double value = 0.0;
  double grid_value = 0.0;  ///< best coarse-grid sample
  double refinement_gain = 0.0;
};

using AngleObjective = std::function<double(const MeasurementAngles&)>;

/// Minimize `objective` over theta in [0, pi], phi in [0, 2 pi).
///
/// The coarse grid is scanned theta-major; ties keep the earliest point, so
/// the smallest (theta, phi) wins. Refinement starts from the best grid point
/// and runs `refine_rounds` alternating golden-section passes, each confined
/// to one grid spacing on either side of the current point. A pass only
/// replaces the incumbent when it improves on it by more than 1e-14, so the
/// reported value never exceeds the grid value.
///
/// Throws OptimizerFailure when a pass uses up max_refine_iters before its
/// bracket shrinks below refine_tolerance, or when the objective returns a
/// non-finite value.
OptimumReport minimize(const AngleObjective& objective, const OptimizerConfig& cfg = {});

}  // namespace unruh
