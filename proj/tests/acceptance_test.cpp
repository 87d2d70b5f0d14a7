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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// non-zero when any hard criterion fails; soft criteria only report.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "unruh/measures.hpp"
#include "unruh/rindler.hpp"
#include "unruh/sweep.hpp"

namespace {

using namespace unruh;
using unruh::testing::kPi;

constexpr double kQuarterPi = kPi / 4;
constexpr int kGridSteps = 50;
constexpr int kOracleSide = 720;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  bool soft;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

const std::map<RindlerPair, std::vector<CorrelationRecord>>& grid_rows() {
  static const auto rows = [] {
    std::map<RindlerPair, std::vector<CorrelationRecord>> out;
    for (auto pair : kAllPairs)
      for (int k = 1; k <= kGridSteps; ++k)
        out[pair].push_back(evaluate_record(UnruhParameter(kQuarterPi * k / kGridSteps), pair));
    return out;
  }();
  return rows;
}

// Every successive difference of `field`, times `direction`, must exceed 1e-9.
Outcome strictly_monotone(RindlerPair pair, double CorrelationRecord::*field, double direction,
                          const char* label) {
  const auto& v = grid_rows().at(pair);
  double weakest = INFINITY;
  double first_bad = -1.0;
  for (std::size_t k = 1; k < v.size(); ++k) {
    const double step = direction * (v[k].*field - v[k - 1].*field);
    weakest = std::min(weakest, step);
    if (step <= 1e-9 && first_bad < 0) first_bad = v[k].r;
  }
  std::string detail = std::string(label) + "(" + std::string(to_string(pair)) +
                       ") weakest step " + fmt(direction * weakest);
  if (first_bad >= 0) detail += ", breaks at r=" + fmt(first_bad);
  return {first_bad < 0, detail};
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  Outcome out{true, ""};
  for (const auto& p : parts) {
    out.pass = out.pass && p.pass;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string(p.pass ? "" : "[x] ") + p.detail;
  }
  return out;
}

std::vector<Criterion> criteria() {
  return {
      {1, "Bell endpoint: AI at r=0 gives I=2, C=1, D=1, E_N=1 (1e-6)", false,
       [] {
         const auto r = evaluate_record(UnruhParameter(0.0), RindlerPair::AI);
         const bool ok = std::abs(r.mutual_information - 2) <= 1e-6 &&
                         std::abs(r.classical_correlation - 1) <= 1e-6 &&
                         std::abs(r.quantum_discord - 1) <= 1e-6 &&
                         std::abs(r.log_negativity - 1) <= 1e-6;
         return Outcome{ok, "I=" + fmt(r.mutual_information) + " C=" +
                                fmt(r.classical_correlation) + " D=" + fmt(r.quantum_discord) +
                                " E_N=" + fmt(r.log_negativity)};
       }},
      {2, "Zero endpoint: AII and III at r=0 give I=C=D=E_N=0 (1e-6)", false,
       [] {
         double worst = 0.0;
         for (auto pair : {RindlerPair::AII, RindlerPair::III}) {
           const auto r = evaluate_record(UnruhParameter(0.0), pair);
           for (double v : {r.mutual_information, r.classical_correlation, r.quantum_discord,
                            r.log_negativity})
             worst = std::max(worst, std::abs(v));
         }
         return Outcome{worst <= 1e-6, "max |value|=" + fmt(worst)};
       }},
      {3, "AI: C and D strictly decrease on the 50-point grid", false,
       [] {
         return all_of({strictly_monotone(RindlerPair::AI, &CorrelationRecord::classical_correlation, -1, "C"),
                        strictly_monotone(RindlerPair::AI, &CorrelationRecord::quantum_discord, -1, "D")});
       }},
      {4, "AII, III: C and D strictly increase on the 50-point grid", false,
       [] {
         return all_of({strictly_monotone(RindlerPair::AII, &CorrelationRecord::classical_correlation, 1, "C"),
                        strictly_monotone(RindlerPair::AII, &CorrelationRecord::quantum_discord, 1, "D"),
                        strictly_monotone(RindlerPair::III, &CorrelationRecord::classical_correlation, 1, "C"),
                        strictly_monotone(RindlerPair::III, &CorrelationRecord::quantum_discord, 1, "D")});
       }},
      {5, "AI: E_N >= D - 1e-9 for every r > 0", false,
       [] {
         double worst = INFINITY;
         for (const auto& r : grid_rows().at(RindlerPair::AI))
           worst = std::min(worst, r.log_negativity - r.quantum_discord);
         return Outcome{worst >= -1e-9, "min(E_N - D)=" + fmt(worst)};
       }},
      {6, "III: D >= E_N - 1e-9 everywhere", false,
       [] {
         double worst = INFINITY;
         for (const auto& r : grid_rows().at(RindlerPair::III))
           worst = std::min(worst, r.quantum_discord - r.log_negativity);
         return Outcome{worst >= -1e-9, "min(D - E_N)=" + fmt(worst)};
       }},
      {7, "AII: D - E_N changes sign exactly once, positive to negative", false,
       [] {
         const auto& v = grid_rows().at(RindlerPair::AII);
         auto gap = [](const CorrelationRecord& r) { return r.quantum_discord - r.log_negativity; };
         int changes = 0;
         std::string bracket = "none";
         for (std::size_t k = 1; k < v.size(); ++k)
           if ((gap(v[k - 1]) > 0) != (gap(v[k]) > 0)) {
             ++changes;
             bracket = "[" + fmt(v[k - 1].r) + ", " + fmt(v[k].r) + "]";
           }
         const bool ok = changes == 1 && gap(v.front()) > 0 && gap(v.back()) < 0;
         return Outcome{ok, "sign changes=" + std::to_string(changes) + " bracket r in " + bracket};
       }},
      {8, "r=pi/4: D and C of AI equal those of AII (1e-6)", false,
       [] {
         const auto a = evaluate_record(UnruhParameter(kQuarterPi), RindlerPair::AI);
         const auto b = evaluate_record(UnruhParameter(kQuarterPi), RindlerPair::AII);
         const double dd = std::abs(a.quantum_discord - b.quantum_discord);
         const double dc = std::abs(a.classical_correlation - b.classical_correlation);
         return Outcome{dd <= 1e-6 && dc <= 1e-6, "|dD|=" + fmt(dd) + " |dC|=" + fmt(dc)};
       }},
      {9, "closed forms: entropies (1e-10), conditional spectra (1e-10), probabilities (1e-12)",
       false,
       [] {
         double e_err = 0, l_err = 0, p_err = 0;
         for (int k = 0; k <= 100; ++k) {
           const UnruhParameter r(kQuarterPi * k / 100);
           for (auto pair : kAllPairs)
             e_err = std::max(e_err, std::abs(closed_form_entropy(r, pair) -
                                              von_neumann_entropy(reduced_state(r, pair))));
         }
         for (int i = 0; i < 20; ++i) {
           const UnruhParameter r(kQuarterPi * i / 19);
           for (int j = 0; j < 20; ++j) {
             const double theta = kPi * j / 19;
             const auto want = closed_form_conditional_eigenvalues(r, theta);
             for (bool plus : {true, false}) {
               const auto got =
                   eig_hermitian(closed_form_conditional_state(r, {theta, 1.1}, plus)).values;
               const auto& w = plus ? want.plus : want.minus;
               l_err = std::max({l_err, std::abs(got[0] - w[0]), std::abs(got[1] - w[1])});
             }
             for (auto pair : kAllPairs) {
               const auto o = measure_first(reduced_state(r, pair), {theta, 1.1});
               const double shift = std::cos(theta) * std::pow(std::sin(r.value()), 2);
               const double pp = pair == RindlerPair::III ? 0.5 * (1 - shift) : 0.5;
               p_err = std::max({p_err, std::abs(o[0].probability - pp),
                                 std::abs(o[1].probability - (1 - pp))});
             }
           }
         }
         return Outcome{e_err <= 1e-10 && l_err <= 1e-10 && p_err <= 1e-12,
                        "entropy err=" + fmt(e_err) + " eigenvalue err=" + fmt(l_err) +
                            " probability err=" + fmt(p_err)};
       }},
      {10, "AI: E_N(pi/4) = log2(3/2) (1e-9)", false,
       [] {
         const auto rho = reduced_state(UnruhParameter(kQuarterPi), RindlerPair::AI);
         // Oracle: the partial-transpose spectrum has a single negative eigenvalue -1/4.
         const auto pt = eig_hermitian(partial_transpose(rho, 0)).values;
         const double oracle = std::log2(1.0 + 2.0 * std::abs(pt.back()));
         const double en = log_negativity(rho);
         return Outcome{std::abs(en - std::log2(1.5)) <= 1e-9 && std::abs(pt.back() + 0.25) <= 1e-12,
                        "E_N=" + fmt(en) + " oracle=" + fmt(oracle) + " min PT eig=" + fmt(pt.back())};
       }},
      {11, "AI, AII: theta* in pi/2 +- 1e-3; phi spread <= 1e-10", false,
       [] {
         double worst_theta = 0, worst_spread = 0;
         for (auto pair : {RindlerPair::AI, RindlerPair::AII})
           for (double r : {0.2, 0.5, kQuarterPi}) {
             const auto rho = reduced_state(UnruhParameter(r), pair);
             worst_theta = std::max(worst_theta,
                                    std::abs(classical_correlation(rho).angles.theta - kPi / 2));
             for (double theta : {0.3, kPi / 2, 2.0}) {
               double lo = INFINITY, hi = -INFINITY;
               for (int j = 0; j < 64; ++j) {
                 const double s = measured_conditional_entropy(rho, {theta, 2 * kPi * j / 64});
                 lo = std::min(lo, s);
                 hi = std::max(hi, s);
               }
               worst_spread = std::max(worst_spread, hi - lo);
             }
           }
         return Outcome{worst_theta <= 1e-3 && worst_spread <= 1e-10,
                        "max |theta*-pi/2|=" + fmt(worst_theta) + " max spread=" + fmt(worst_spread)};
       }},
      {12, "optimizer minimum <= 720x720 grid oracle + 1e-6", false,
       [] {
         double worst = -INFINITY;
         for (auto pair : kAllPairs)
           for (double r : {0.1, 0.4, 0.7, kQuarterPi}) {
             const auto rho = reduced_state(UnruhParameter(r), pair);
             const auto oracle = unruh::testing::dense_grid_minimum(
                 unruh::testing::to_mat4(rho.matrix()), kOracleSide, kOracleSide);
             worst = std::max(worst,
                              classical_correlation(rho).min_conditional_entropy - oracle.value);
           }
         return Outcome{worst <= 1e-6, "max(optimized - oracle)=" + fmt(worst)};
       }},
      {13, "III: S(II|I) at theta=pi/4 vs optimized minimum", true,
       [] {
         double worst = 0;
         std::string detail;
         for (double r : {0.2, 0.5, kQuarterPi}) {
           const auto rho = reduced_state(UnruhParameter(r), RindlerPair::III);
           const auto cc = classical_correlation(rho);
           const double at = measured_conditional_entropy(rho, {kQuarterPi, 0.0});
           worst = std::max(worst, at - cc.min_conditional_entropy);
           detail += "r=" + fmt(r) + ": theta*=" + fmt(cc.angles.theta) + " gap=" +
                     fmt(at - cc.min_conditional_entropy) + "  ";
         }
         return Outcome{worst <= 1e-6, detail};
       }},
      {14, "AI: I(pi/4) = 1 (1e-9)", false,
       [] {
         const auto rho = reduced_state(UnruhParameter(kQuarterPi), RindlerPair::AI);
         const double info = mutual_information(rho);
         return Outcome{std::abs(info - 1) <= 1e-9, "I=" + fmt(info)};
       }},
  };
}

}  // namespace

int main() {
  int hard_failures = 0;
  for (const auto& c : criteria()) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const char* tag = o.pass ? "PASS" : (c.soft ? "SOFT" : "FAIL");
    std::printf("%s AC-%02d %s%s\n       %s\n", tag, c.id, c.title, c.soft ? " (soft)" : "",
                o.detail.c_str());
    if (!o.pass && !c.soft) ++hard_failures;
  }
  std::printf("%d hard criterion(s) failed\n", hard_failures);
  return hard_failures == 0 ? 0 : 1;
}
