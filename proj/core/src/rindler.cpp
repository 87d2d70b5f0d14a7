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

#include "unruh/rindler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "unruh/error.hpp"

namespace unruh {

namespace {

constexpr double kSnap = 1e-15;
constexpr double kZeroR = 1e-100;

double cos2(UnruhParameter r) {
  const double c = std::cos(r.value());
  return c * c;
}

}  // namespace

UnruhParameter::UnruhParameter(double r) {
  if (!std::isfinite(r) || r < -kSnap || r > kMax + kSnap) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "acceleration parameter r=" << r << " outside [0, pi/4]";
    throw InvalidArgument(msg.str());
  }
  r_ = std::clamp(r, 0.0, kMax);
}

UnruhParameter UnruhParameter::from_acceleration(double omega, double acceleration) {
  return acceleration_to_r(omega, acceleration);
}

UnruhParameter acceleration_to_r(double omega, double acceleration) {
  if (!(omega > 0.0) || !(acceleration > 0.0)) {
    throw NonPositiveInput("frequency and acceleration must both be positive");
  }
  // tan^2 r = exp(-2 pi w / a); the arctangent form stays accurate as r -> 0.
  const double x = 2.0 * std::numbers::pi * omega / acceleration;
  const double r = std::atan(std::exp(-0.5 * x));
  return UnruhParameter(r < kZeroR ? 0.0 : r);
}

double thermal_occupation(double omega, double acceleration) {
  if (!(omega > 0.0) || !(acceleration > 0.0)) {
    throw NonPositiveInput("frequency and acceleration must both be positive");
  }
  const double x = 2.0 * std::numbers::pi * omega / acceleration;
  return 1.0 / (std::exp(x) + 1.0);
}

std::string_view to_string(RindlerPair pair) {
  switch (pair) {
    case RindlerPair::AI:
      return "AI";
    case RindlerPair::AII:
      return "AII";
    case RindlerPair::III:
      return "III";
  }
  return "?";
}

std::optional<RindlerPair> parse_pair(std::string_view text) {
  for (auto pair : kAllPairs)
    if (text == to_string(pair)) return pair;
  return std::nullopt;
}

PairLabels labels(RindlerPair pair) {
  switch (pair) {
    case RindlerPair::AI:
      return {"A", "I"};
    case RindlerPair::AII:
      return {"A", "II"};
    case RindlerPair::III:
      return {"I", "II"};
  }
  return {"?", "?"};
}

StateVector tripartite_state(UnruhParameter r) {
  const double h = std::numbers::sqrt2 / 2.0;
  std::vector<Complex> amps(8);
  amps[0b000] = h * std::cos(r.value());
  amps[0b011] = h * std::sin(r.value());
  amps[0b110] = h;
  return StateVector(std::move(amps));
}

DensityMatrix tripartite_density(UnruhParameter r) {
  return DensityMatrix::from_pure(tripartite_state(r), {2, 2, 2});
}

DensityMatrix reduced_state(UnruhParameter r, RindlerPair pair) {
  const double c = std::cos(r.value()), s = std::sin(r.value());
  ComplexMatrix m(4);
  // Basis |00>, |01>, |10>, |11> of (measured, unmeasured).
  switch (pair) {
    case RindlerPair::AI:
      m(0, 0) = 0.5 * c * c;
      m(0, 3) = m(3, 0) = 0.5 * c;
      m(1, 1) = 0.5 * s * s;
      m(3, 3) = 0.5;
      break;
    case RindlerPair::AII:
      m(0, 0) = 0.5 * c * c;
      m(1, 2) = m(2, 1) = 0.5 * s;
      m(1, 1) = 0.5 * s * s;
      m(2, 2) = 0.5;
      break;
    case RindlerPair::III:
      m(0, 0) = 0.5 * c * c;
      m(0, 3) = m(3, 0) = 0.5 * s * c;
      m(2, 2) = 0.5;
      m(3, 3) = 0.5 * s * s;
      break;
  }
  return DensityMatrix(std::move(m), {2, 2});
}

double binary_entropy(double p) {
  const double q = 1.0 - p;
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (q > 0.0) h -= q * std::log2(q);
  return h;
}

double closed_form_entropy(UnruhParameter r, RindlerPair pair) {
  switch (pair) {
    case RindlerPair::AI:
      return binary_entropy(0.5 * (1.0 + cos2(r)));
    case RindlerPair::AII:
      return binary_entropy(0.5 * cos2(r));
    case RindlerPair::III:
      // The tripartite state is pure, so S(I, II) = S(A) = 1 for every r.
      return 1.0;
  }
  return 0.0;
}

double closed_form_marginal_entropy(UnruhParameter r, RindlerPair pair, Side side) {
  // S(A) = 1, S(I) = h(cos^2 r / 2), S(II) = h((1 + cos^2 r) / 2).
  const double s_a = 1.0;
  const double s_i = binary_entropy(0.5 * cos2(r));
  const double s_ii = binary_entropy(0.5 * (1.0 + cos2(r)));
  const bool measured = side == Side::Measured;
  switch (pair) {
    case RindlerPair::AI:
      return measured ? s_a : s_i;
    case RindlerPair::AII:
      return measured ? s_a : s_ii;
    case RindlerPair::III:
      return measured ? s_i : s_ii;
  }
  return 0.0;
}

ComplexMatrix closed_form_conditional_state(UnruhParameter r, const MeasurementAngles& angles,
                                            bool plus) {
  const double c = std::cos(r.value()), s = std::sin(r.value());
  const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
  const Complex e = std::polar(1.0, angles.phi);
  const double sign = plus ? 1.0 : -1.0;
  ComplexMatrix m(2);
  m(0, 0) = 0.5 * (1.0 + sign * ct) * c * c;
  m(0, 1) = 0.5 * sign * e * c * st;
  m(1, 0) = 0.5 * sign * std::conj(e) * c * st;
  m(1, 1) = 0.5 * (1.0 - sign * ct + (1.0 + sign * ct) * s * s);
  return m;
}

ConditionalEigenvalues closed_form_conditional_eigenvalues(UnruhParameter r, double theta) {
  const double s2r = std::sin(2.0 * r.value());
  const double ch = std::cos(0.5 * theta), sh = std::sin(0.5 * theta);
  auto pair_for = [&](double weight) {
    const double root = std::sqrt(std::max(0.0, 1.0 - s2r * s2r * weight));
    return std::array<double, 2>{0.5 * (1.0 + root), 0.5 * (1.0 - root)};
  };
  return {pair_for(std::pow(ch, 4)), pair_for(std::pow(sh, 4))};
}

std::pair<double, double> closed_form_probabilities(UnruhParameter r, RindlerPair pair,
                                                    double theta) {
  if (pair != RindlerPair::III) return {0.5, 0.5};
  const double s = std::sin(r.value());
  const double shift = std::cos(theta) * s * s;
  return {0.5 * (1.0 - shift), 0.5 * (1.0 + shift)};
}

}  // namespace unruh
