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

#include "unruh/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "unruh/error.hpp"

namespace unruh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phi(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double checked(double value, const MeasurementAngles& at) {
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "objective is not finite at theta=" << at.theta << " phi=" << at.phi;
    throw OptimizerFailure(msg.str());
  }
  return value;
}

// Refinement must beat the incumbent by more than roundoff; otherwise flat
// directions would drift on noise in the last bits.
constexpr double kMinImprovement = 1e-14;

struct Incumbent {
  MeasurementAngles angles;
  double value;
};

// Golden-section search of `f` on [lo, hi]. Returns the best point it
// evaluated; the caller decides whether it beats the incumbent.
template <typename F>
std::pair<double, double> golden_section(F&& f, double lo, double hi, const OptimizerConfig& cfg,
                                         const char* coordinate) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  double best_x = f1 <= f2 ? x1 : x2;
  double best_f = std::min(f1, f2);
  int iters = 0;
  while (hi - lo > cfg.refine_tolerance) {
    if (++iters > cfg.max_refine_iters) {
      std::ostringstream msg;
      msg << "golden-section refinement of " << coordinate << " exhausted "
          << cfg.max_refine_iters << " iterations with bracket width " << (hi - lo);
      throw OptimizerFailure(msg.str());
    }
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
      if (f1 < best_f) {
        best_f = f1;
        best_x = x1;
      }
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
      if (f2 < best_f) {
        best_f = f2;
        best_x = x2;
      }
    }
  }
  return {best_x, best_f};
}

}  // namespace

MeasurementAngles MeasurementAngles::normalized() const {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  double p = phi;
  if (t > kPi) {
    t = kTwoPi - t;
    p += kPi;
  }
  return {t, wrap_phi(p)};
}

void OptimizerConfig::validate() const {
  if (theta_grid < 8) throw InvalidArgument("theta_grid must be >= 8");
  if (phi_grid < 8) throw InvalidArgument("phi_grid must be >= 8");
  if (!(refine_tolerance > 0.0) || !std::isfinite(refine_tolerance))
    throw InvalidArgument("refine_tolerance must be positive");
  if (max_refine_iters < 1) throw InvalidArgument("max_refine_iters must be >= 1");
  if (refine_rounds < 0) throw InvalidArgument("refine_rounds must be >= 0");
}

OptimumReport minimize(const AngleObjective& objective, const OptimizerConfig& cfg) {
  cfg.validate();
  const double dtheta = kPi / (cfg.theta_grid - 1);
  const double dphi = kTwoPi / cfg.phi_grid;

  Incumbent best{{0.0, 0.0}, 0.0};
  bool first = true;
  for (int i = 0; i < cfg.theta_grid; ++i) {
    const double theta = i == cfg.theta_grid - 1 ? kPi : i * dtheta;
    for (int j = 0; j < cfg.phi_grid; ++j) {
      const MeasurementAngles at{theta, j * dphi};
      const double v = checked(objective(at), at);
      if (first || v < best.value) {
        best = {at, v};
        first = false;
      }
    }
  }
  const double grid_value = best.value;

  for (int round = 0; round < cfg.refine_rounds; ++round) {
    {
      const double phi = best.angles.phi;
      auto f = [&](double theta) {
        const MeasurementAngles at{theta, phi};
        return checked(objective(at), at);
      };
      const double lo = std::max(0.0, best.angles.theta - dtheta);
      const double hi = std::min(kPi, best.angles.theta + dtheta);
      const auto [x, v] = golden_section(f, lo, hi, cfg, "theta");
      if (v < best.value - kMinImprovement) best = {{x, phi}, v};
    }
    {
      const double theta = best.angles.theta;
      auto f = [&](double phi) {
        const MeasurementAngles at{theta, wrap_phi(phi)};
        return checked(objective(at), at);
      };
      const double centre = best.angles.phi;
      const auto [x, v] = golden_section(f, centre - dphi, centre + dphi, cfg, "phi");
      if (v < best.value - kMinImprovement) best = {{theta, wrap_phi(x)}, v};
    }
  }

  return {best.angles, best.value, grid_value, grid_value - best.value};
}

}  // namespace unruh
