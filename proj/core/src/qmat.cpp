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

#include "unruh/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "unruh/error.hpp"

namespace unruh {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw InvalidArgument("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim == 0) throw InvalidArgument("matrix dimension must be positive");
  if (data_.size() != dim * dim) {
    throw InvalidArgument("expected " + std::to_string(dim * dim) + " entries, got " +
                          std::to_string(data_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw InvalidArgument("dimension mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k)
    worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw InvalidArgument("dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw InvalidArgument("dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw InvalidArgument("dimension mismatch");
  const std::size_t n = lhs.dim_;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const std::size_t m = lhs.dim(), n = rhs.dim();
  ComplexMatrix out(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out(i * n + k, j * n + l) = lhs(i, j) * rhs(k, l);
  return out;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw InvalidState("state vector is empty");
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state vector squared norm " << norm2 << " differs from 1";
    throw InvalidState(msg.str());
  }
}

ComplexMatrix StateVector::projector() const {
  const std::size_t n = dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
  return out;
}

namespace {

double off_diagonal_max(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t q = p + 1; q < a.dim(); ++q) worst = std::max(worst, std::abs(a(p, q)));
  return worst;
}

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation is
// G = Phi * J where Phi rephases column q so that the pivot becomes real and
// J is the usual real Jacobi rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  const Complex phase = apq / mag;
  const double app = a(p, p).real(), aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp + gqp * akq;
    a(k, q) = s * akp + gqq * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + std::conj(gqp) * aqk;
    a(q, k) = s * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp + gqp * vkq;
    v(k, q) = s * vkp + gqq * vkq;
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  if (m.hermiticity_defect() > kHermitianTol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (defect " << m.hermiticity_defect() << ")";
    throw NotHermitian(msg.str());
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  // Symmetrize so the rotations see an exactly Hermitian input.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiOffDiagTol * std::max(1.0, frobenius(a));

  int sweep = 0;
  while (off_diagonal_max(a) > threshold) {
    if (++sweep > kMaxJacobiSweeps) {
      throw NoConvergence("Jacobi eigensolver did not converge in " +
                          std::to_string(kMaxJacobiSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 0.0) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& m) {
  return eig_hermitian(m).values;
}

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
}

// Row-major digit expansion of a flat index over `dims`.
std::vector<std::size_t> digits(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
  return out;
}

std::size_t flatten(std::span<const std::size_t> digit, std::span<const std::size_t> dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digit[k];
  return index;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> subsystem_dims)
    : matrix_(std::move(matrix)), dims_(std::move(subsystem_dims)) {
  if (dims_.empty() || std::find(dims_.begin(), dims_.end(), 0u) != dims_.end() ||
      product(dims_) != matrix_.dim()) {
    throw BadSubsystemSpec("subsystem dimensions do not factor the matrix dimension " +
                           std::to_string(matrix_.dim()));
  }
  const double defect = matrix_.hermiticity_defect();
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (defect " << defect << ")";
    throw NotHermitian(msg.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix trace " << tr.real() << " differs from 1";
    throw InvalidState(msg.str());
  }
  spectrum_ = eigvals_hermitian(matrix_);
  for (double& lambda : spectrum_) {
    if (lambda < -kPsdTol) {
      std::ostringstream msg;
      msg << "density matrix has negative eigenvalue " << lambda;
      throw InvalidState(msg.str());
    }
    if (lambda < 0.0) lambda = 0.0;
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi,
                                       std::vector<std::size_t> subsystem_dims) {
  return DensityMatrix(psi.projector(), std::move(subsystem_dims));
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities)
    if (p > 0.0) h -= p * std::log2(p);
  return std::max(0.0, h);
}

double von_neumann_entropy(const DensityMatrix& rho) { return shannon_entropy(rho.spectrum()); }

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const auto dims = rho.subsystem_dims();
  const std::size_t n_sub = dims.size();
  if (keep.empty() || keep.size() >= n_sub) {
    throw BadSubsystemSpec("kept subsystems must be a non-empty proper subset");
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= n_sub || (k > 0 && keep[k] <= keep[k - 1])) {
      throw BadSubsystemSpec("kept subsystem indices must be strictly increasing and < " +
                             std::to_string(n_sub));
    }
  }
  std::vector<std::size_t> traced;
  for (std::size_t s = 0; s < n_sub; ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

  std::vector<std::size_t> kept_dims, traced_dims;
  for (auto s : keep) kept_dims.push_back(dims[s]);
  for (auto s : traced) traced_dims.push_back(dims[s]);
  const std::size_t dk = product(kept_dims), dt = product(traced_dims);

  ComplexMatrix out(dk);
  std::vector<std::size_t> row(n_sub), col(n_sub);
  for (std::size_t i = 0; i < dk; ++i) {
    const auto di = digits(i, kept_dims);
    for (std::size_t j = 0; j < dk; ++j) {
      const auto dj = digits(j, kept_dims);
      Complex acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        const auto dtt = digits(t, traced_dims);
        for (std::size_t k = 0; k < keep.size(); ++k) {
          row[keep[k]] = di[k];
          col[keep[k]] = dj[k];
        }
        for (std::size_t k = 0; k < traced.size(); ++k) row[traced[k]] = col[traced[k]] = dtt[k];
        acc += rho.matrix()(flatten(row, dims), flatten(col, dims));
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix(std::move(out), std::move(kept_dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t subsystem) {
  if (subsystem >= dims.size()) {
    throw BadSubsystemSpec("subsystem index " + std::to_string(subsystem) + " out of range");
  }
  if (product(dims) != m.dim()) {
    throw BadSubsystemSpec("subsystem dimensions do not factor the matrix dimension");
  }
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto di = digits(i, dims);
      auto dj = digits(j, dims);
      std::swap(di[subsystem], dj[subsystem]);
      out(flatten(di, dims), flatten(dj, dims)) = m(i, j);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
  return partial_transpose(rho.matrix(), rho.subsystem_dims(), subsystem);
}

double trace_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (double lambda : eigvals_hermitian(m)) s += std::abs(lambda);
  return s;
}

}  // namespace unruh
