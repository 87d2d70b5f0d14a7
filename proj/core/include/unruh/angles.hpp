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

#include <numbers>

namespace unruh {

/// Polar and azimuthal angle of the Bloch direction
/// n = (sin t cos p, sin t sin p, cos t) that defines a projective qubit
/// measurement.
struct MeasurementAngles {
  double theta = 0.0;  ///< [0, pi]
  double phi = 0.0;    ///< [0, 2 pi)

  /// Fold theta into [0, pi] and phi into [0, 2 pi). A theta outside
  /// [0, pi] is reflected, which flips the direction's azimuth by pi.
  MeasurementAngles normalized() const;

  friend bool operator==(const MeasurementAngles&, const MeasurementAngles&) = default;
};

}  // namespace unruh
