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

#include "unruh/measures.hpp"

#include <algorithm>
#include <cmath>

#include "unruh/error.hpp"

namespace unruh {

namespace {

void require_two_qubits(const DensityMatrix& rho) {
  const auto dims = rho.subsystem_dims();
  if (dims.size() != 2 || dims[0] != 2 || dims[1] != 2) {
    throw BadSubsystemSpec("expected a two-qubit state with subsystem dims (2, 2)");
  }
}

// Dividing by a small outcome probability magnifies roundoff in the
// projected operator; take the Hermitian part, drop negative eigenvalues and
// renormalize before building the conditional state.
DensityMatrix conditional_state(const ComplexMatrix& unnormalized) {
  ComplexMatrix h = 0.5 * (unnormalized + unnormalized.adjoint());
  h *= 1.0 / h.trace().real();
  auto eig = eig_hermitian(h);
  if (eig.values.back() < 0.0) {
    double total = 0.0;
    for (double& v : eig.values) total += (v = std::max(v, 0.0));
    ComplexMatrix rebuilt(h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k)
      for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j)
          rebuilt(i, j) += eig.values[k] / total * eig.vectors(i, k) *
                           std::conj(eig.vectors(j, k));
    h = std::move(rebuilt);
  }
  const std::size_t dim = h.dim();
  return DensityMatrix(std::move(h), {dim});
}

}  // namespace

double mutual_information(const DensityMatrix& rho) {
  require_two_qubits(rho);
  return von_neumann_entropy(partial_trace(rho, {0})) +
         von_neumann_entropy(partial_trace(rho, {1})) - von_neumann_entropy(rho);
}

std::pair<ComplexMatrix, ComplexMatrix> projectors(const MeasurementAngles& angles) {
  const double n1 = std::sin(angles.theta) * std::cos(angles.phi);
  const double n2 = std::sin(angles.theta) * std::sin(angles.phi);
  const double n3 = std::cos(angles.theta);
  // n.sigma = [[n3, n1 - i n2], [n1 + i n2, -n3]]
  const Complex off(n1, -n2);
  ComplexMatrix plus(2, {0.5 * (1.0 + n3), 0.5 * off, 0.5 * std::conj(off), 0.5 * (1.0 - n3)});
  ComplexMatrix minus = ComplexMatrix::identity(2) - plus;
  const auto id = ComplexMatrix::identity(2);
  return {kron(plus, id), kron(minus, id)};
}

std::array<MeasurementOutcome, 2> measure_first(const DensityMatrix& rho,
                                                const MeasurementAngles& angles) {
  require_two_qubits(rho);
  const auto [plus, minus] = projectors(angles);
  std::array<MeasurementOutcome, 2> out;
  const ComplexMatrix* pis[2] = {&plus, &minus};
  for (int j = 0; j < 2; ++j) {
    const ComplexMatrix& pi = *pis[j];
    ComplexMatrix projected = pi * rho.matrix() * pi;
    const double p = std::clamp(projected.trace().real(), 0.0, 1.0);
    out[j].probability = p;
    if (p <= kNegligibleProbability) continue;
    ComplexMatrix reduced(2);
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t bp = 0; bp < 2; ++bp)
        reduced(b, bp) = projected(b, bp) + projected(2 + b, 2 + bp);
    out[j].post_state.emplace(conditional_state(reduced));
  }
  return out;
}

double measured_conditional_entropy(const DensityMatrix& rho, const MeasurementAngles& angles) {
  require_two_qubits(rho);
  // Hot path of the optimizer. Uses Tr_A((P x I) rho (P x I)) = Tr_A((P x I) rho)
  // and the analytic spectrum of a 2x2 Hermitian matrix instead of the
  // general route taken by measure_first.
  const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
  const Complex e = std::polar(st, -angles.phi);  // n1 - i n2
  const auto& m = rho.matrix();
  double s = 0.0;
  for (double sign : {1.0, -1.0}) {
    const Complex p00 = 0.5 * (1.0 + sign * ct), p11 = 0.5 * (1.0 - sign * ct);
    const Complex p01 = 0.5 * sign * e, p10 = std::conj(p01);
    // red(b, b') = sum_{a, a'} P(a, a') rho(2 a' + b, 2 a + b')
    auto red = [&](std::size_t b, std::size_t bp) {
      return p00 * m(b, bp) + p01 * m(2 + b, bp) + p10 * m(b, 2 + bp) + p11 * m(2 + b, 2 + bp);
    };
    const double r00 = red(0, 0).real(), r11 = red(1, 1).real();
    const Complex r01 = 0.5 * (red(0, 1) + std::conj(red(1, 0)));
    const double p = r00 + r11;
    if (p <= kNegligibleProbability) continue;
    const double half_gap = std::sqrt(0.25 * (r00 - r11) * (r00 - r11) + std::norm(r01));
    const double hi = std::clamp((0.5 * p + half_gap) / p, 0.0, 1.0);
    const double spectrum[2] = {hi, 1.0 - hi};
    s += p * shannon_entropy(spectrum);
  }
  return s;
}

ClassicalCorrelation classical_correlation(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_two_qubits(rho);
  const double s_b = von_neumann_entropy(partial_trace(rho, {1}));
  const auto report = minimize(
      [&rho](const MeasurementAngles& a) { return measured_conditional_entropy(rho, a); }, cfg);
  return {s_b - report.value, report.angles.normalized(), report.value};
}

double quantum_discord(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  return correlations(rho, cfg).quantum_discord;
}

double log_negativity(const DensityMatrix& rho) {
  require_two_qubits(rho);
  return std::log2(trace_norm(partial_transpose(rho, 0)));
}

CorrelationResult correlations(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  const double info = mutual_information(rho);
  const auto classical = classical_correlation(rho, cfg);
  CorrelationResult out;
  out.mutual_information = info;
  out.classical_correlation = classical.value;
  out.quantum_discord = info - classical.value;
  out.log_negativity = log_negativity(rho);
  out.optimal_angles = classical.angles;
  out.min_conditional_entropy = classical.min_conditional_entropy;
  return out;
}

}  // namespace unruh
