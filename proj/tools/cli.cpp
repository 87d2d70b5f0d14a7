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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "unruh/error.hpp"
#include "unruh/rindler.hpp"
#include "unruh/sweep.hpp"
#include "unruh/verify.hpp"

namespace unruh::cli {

namespace {

void add_optimizer_flags(CLI::App* cmd, OptimizerConfig& cfg) {
  cmd->add_option("--theta-grid", cfg.theta_grid, "coarse grid points on [0, pi]")
      ->capture_default_str();
  cmd->add_option("--phi-grid", cfg.phi_grid, "coarse grid points on [0, 2 pi)")
      ->capture_default_str();
  cmd->add_option("--refine-tol", cfg.refine_tolerance, "refinement bracket width, radians")
      ->capture_default_str();
}

void print_point(std::ostream& out, const CorrelationRecord& rec,
                 std::optional<std::pair<double, double>> physical) {
  const auto names = labels(rec.pair);
  out << "pair: " << to_string(rec.pair) << " (measured " << names.measured << ", unmeasured "
      << names.unmeasured << ")\n";
  out << "r = " << format_number(rec.r) << '\n';
  if (physical) {
    out << "omega = " << format_number(physical->first)
        << ", a = " << format_number(physical->second) << '\n';
  }
  out << "mutual_information      = " << format_number(rec.mutual_information) << '\n'
      << "classical_correlation   = " << format_number(rec.classical_correlation) << '\n'
      << "quantum_discord         = " << format_number(rec.quantum_discord) << '\n'
      << "log_negativity          = " << format_number(rec.log_negativity) << '\n'
      << "theta_opt               = " << format_number(rec.theta_opt) << '\n'
      << "phi_opt                 = " << format_number(rec.phi_opt) << '\n'
      << "min_conditional_entropy = " << format_number(rec.min_conditional_entropy) << "\n\n";
  write_csv(out, {rec});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical correlation, discord and negativity of Unruh-degraded Dirac states",
               "unruhcorr"};
  app.require_subcommand(1);

  SweepConfig sweep_cfg;
  std::string sweep_pair = "ALL";
  std::string out_path = "-";
  auto* sweep = app.add_subcommand("sweep", "write CSV figure data over an r grid");
  sweep->add_option("--pair", sweep_pair, "AI, AII, III or ALL")
      ->check(CLI::IsMember({"AI", "AII", "III", "ALL"}))
      ->capture_default_str();
  sweep->add_option("--r-min", sweep_cfg.r_min)->capture_default_str();
  sweep->add_option("--r-max", sweep_cfg.r_max)->capture_default_str();
  sweep->add_option("--steps", sweep_cfg.steps)->capture_default_str();
  sweep->add_option("--out", out_path, "output file, '-' for stdout")->capture_default_str();
  add_optimizer_flags(sweep, sweep_cfg.optimizer);

  OptimizerConfig point_opt;
  std::string point_pair;
  std::optional<double> point_r, omega, accel;
  auto* point = app.add_subcommand("point", "evaluate a single r or (omega, a)");
  point->add_option("--pair", point_pair, "AI, AII or III")
      ->required()
      ->check(CLI::IsMember({"AI", "AII", "III"}));
  point->add_option("--r", point_r, "acceleration parameter in [0, pi/4]");
  point->add_option("--omega", omega, "mode frequency");
  point->add_option("--a", accel, "proper acceleration");
  add_optimizer_flags(point, point_opt);

  OptimizerConfig verify_opt;
  int grid_steps = 50;
  auto* verify = app.add_subcommand("verify", "check limits, closed forms and ordering claims");
  verify->add_option("--grid-steps", grid_steps)->capture_default_str();
  add_optimizer_flags(verify, verify_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*sweep) {
      if (sweep_pair != "ALL") sweep_cfg.pair = parse_pair(sweep_pair);
      sweep_cfg.validate();
      const auto rows = run_sweep(sweep_cfg);
      if (out_path == "-") {
        write_csv(out, rows);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
          err << "error: cannot open " << out_path << " for writing\n";
          return kUsageError;
        }
        write_csv(file, rows);
      }
      return kOk;
    }
    if (*point) {
      const bool have_r = point_r.has_value();
      const bool have_physical = omega.has_value() || accel.has_value();
      if (have_r == have_physical || (have_physical && !(omega && accel))) {
        err << "error: give either --r or both --omega and --a\n";
        return kUsageError;
      }
      point_opt.validate();
      const auto pair = *parse_pair(point_pair);
      std::optional<std::pair<double, double>> physical;
      UnruhParameter r;
      if (have_r) {
        r = UnruhParameter(*point_r);
      } else {
        r = acceleration_to_r(*omega, *accel);
        physical = std::make_pair(*omega, *accel);
      }
      print_point(out, evaluate_record(r, pair, point_opt), physical);
      return kOk;
    }
    if (*verify) {
      const auto report = run_verification(grid_steps, verify_opt);
      print_report(out, report);
      return report.all_hard_passed() ? kOk : kVerificationFailed;
    }
  } catch (const NumericFailure& e) {
    err << "error: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NonPositiveInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kUsageError;
}

}  // namespace unruh::cli
