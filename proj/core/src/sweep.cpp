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

#include "unruh/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

namespace unruh {

namespace {

std::string describe(double r, RindlerPair pair, const std::string& what) {
  return "numeric failure at r=" + format_number(r) + " (pair " + std::string(to_string(pair)) +
         "): " + what;
}

double clamp_roundoff(double x) { return (x < 0.0 && x >= -kReportClampTol) ? 0.0 : x; }

}  // namespace

NumericFailure::NumericFailure(double r, RindlerPair pair, const std::string& what)
    : Error(describe(r, pair, what)), r_(r) {}

void SweepConfig::validate() const {
  if (!(r_min >= 0.0) || !(r_max <= UnruhParameter::kMax) || !(r_min <= r_max)) {
    throw InvalidArgument("sweep range must satisfy 0 <= r_min <= r_max <= pi/4");
  }
  if (steps < 2) throw InvalidArgument("steps must be >= 2");
  optimizer.validate();
}

CorrelationRecord evaluate_record(UnruhParameter r, RindlerPair pair, const OptimizerConfig& cfg) {
  try {
    const auto res = correlations(reduced_state(r, pair), cfg);
    CorrelationRecord rec;
    rec.r = r.value();
    rec.pair = pair;
    rec.mutual_information = clamp_roundoff(res.mutual_information);
    rec.classical_correlation = clamp_roundoff(res.classical_correlation);
    rec.quantum_discord = clamp_roundoff(res.quantum_discord);
    rec.log_negativity = clamp_roundoff(res.log_negativity);
    rec.theta_opt = res.optimal_angles.theta;
    rec.phi_opt = res.optimal_angles.phi;
    rec.min_conditional_entropy = clamp_roundoff(res.min_conditional_entropy);
    return rec;
  } catch (const NumericFailure&) {
    throw;
  } catch (const Error& e) {
    throw NumericFailure(r.value(), pair, e.what());
  }
}

std::vector<double> r_grid(double r_min, double r_max, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double step = (r_max - r_min) / (steps - 1);
  for (int k = 0; k < steps; ++k) grid[k] = r_min + k * step;
  grid.back() = r_max;
  return grid;
}

std::vector<CorrelationRecord> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<RindlerPair> pairs;
  if (cfg.pair) {
    pairs.push_back(*cfg.pair);
  } else {
    pairs.assign(kAllPairs.begin(), kAllPairs.end());
  }
  const auto grid = r_grid(cfg.r_min, cfg.r_max, cfg.steps);
  std::vector<CorrelationRecord> rows;
  rows.reserve(pairs.size() * grid.size());
  for (auto pair : pairs)
    for (double r : grid) rows.push_back(evaluate_record(UnruhParameter(r), pair, cfg.optimizer));
  return rows;
}

std::string format_number(double x) {
  if (x == 0.0) return "0";
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
  const int decimals = std::max(0, 11 - exponent);
  char buf[512];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, decimals);
  if (ec != std::errc{}) return "nan";
  std::string s(buf, end);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string csv_row(const CorrelationRecord& rec) {
  std::string row = format_number(rec.r);
  row += ',';
  row += to_string(rec.pair);
  for (double v : {rec.mutual_information, rec.classical_correlation, rec.quantum_discord,
                   rec.log_negativity, rec.theta_opt, rec.phi_opt, rec.min_conditional_entropy}) {
    row += ',';
    row += format_number(v);
  }
  return row;
}

void write_csv(std::ostream& out, const std::vector<CorrelationRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& rec : records) out << csv_row(rec) << '\n';
}

}  // namespace unruh
