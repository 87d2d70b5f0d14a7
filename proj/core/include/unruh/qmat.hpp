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

// Dense complex linear algebra for the handful of qubits this library
// works with (matrices up to 8x8).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace unruh {

using Complex = std::complex<double>;

/// Tolerances shared by every validity check in the library.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kNormTol = 1e-12;
/// Eigenvalues in [-kPsdTol, 0) are roundoff and clamp to zero; anything
/// lower is a genuine PSD violation.
inline constexpr double kPsdTol = 1e-10;

/// Square dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  /// max_ij |M_ij - conj(M_ji)|
  double hermiticity_defect() const;
  /// max_ij |M_ij - other_ij|
  double max_abs_diff(const ComplexMatrix& other) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Tensor product, lhs is the more significant factor.
ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Pure state with amplitudes in the computational basis.
class StateVector {
 public:
  /// Throws InvalidState unless the squared norm is within kNormTol of 1.
  explicit StateVector(std::vector<Complex> amplitudes);

  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  /// |psi><psi|
  ComplexMatrix projector() const;

 private:
  std::vector<Complex> amplitudes_;
};

struct EigenDecomposition {
  std::vector<double> values;  ///< descending
  ComplexMatrix vectors;       ///< column k pairs with values[k]
};

/// Cyclic complex Jacobi eigensolver. Throws NotHermitian when the input's
/// hermiticity defect exceeds kHermitianTol and NoConvergence after
/// kMaxJacobiSweeps sweeps.
EigenDecomposition eig_hermitian(const ComplexMatrix& m);

/// Eigenvalues only, descending.
std::vector<double> eigvals_hermitian(const ComplexMatrix& m);

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiOffDiagTol = 1e-14;

/// Hermitian, unit-trace, positive-semidefinite matrix over a tensor product
/// of subsystems. Index 0 of subsystem_dims is the leftmost (most
/// significant) tensor factor. The spectrum is computed once at
/// construction.
class DensityMatrix {
 public:
  /// Validates all invariants; throws NotHermitian, InvalidState or
  /// BadSubsystemSpec.
  DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> subsystem_dims);

  static DensityMatrix from_pure(const StateVector& psi,
                                 std::vector<std::size_t> subsystem_dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }
  std::span<const std::size_t> subsystem_dims() const { return dims_; }
  std::size_t num_subsystems() const { return dims_.size(); }

  /// Eigenvalues, descending, with roundoff negatives clamped to zero.
  std::span<const double> spectrum() const { return spectrum_; }

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> dims_;
  std::vector<double> spectrum_;
};

/// -sum p log2 p over the clamped spectrum, 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy in bits of a probability vector (entries <= 0 skipped).
double shannon_entropy(std::span<const double> probabilities);

/// Reduce onto the subsystems listed in `keep` (strictly increasing, non-empty,
/// proper subset). Throws BadSubsystemSpec otherwise.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

/// Transpose the indices of one subsystem. The result is Hermitian with the
/// same trace but not necessarily positive.
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);
/// Same on a bare matrix whose tensor structure is given by `dims`.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t subsystem);

/// Sum of |eigenvalue| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

}  // namespace unruh
