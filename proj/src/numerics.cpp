// Copyright 2026 The chansim Authors
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

#include "chansim/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace chansim {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Splits every full basis index into (kept index, traced index).
struct SubsystemSplit {
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  std::vector<std::size_t> kept_of;
  std::vector<std::size_t> traced_of;
};

SubsystemSplit split_subsystems(std::size_t total, std::span<const std::size_t> dims,
                                std::span<const std::size_t> keep) {
  std::size_t product = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw DimensionError("partial_trace: zero subsystem dimension");
    product *= d;
  }
  if (product != total) {
    std::ostringstream msg;
    msg << "partial_trace: subsystem dims multiply to " << product << " but state has dim " << total;
    throw DimensionError(msg.str());
  }
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw DimensionError("partial_trace: keep index out of range");
    if (kept[k]) throw DimensionError("partial_trace: duplicate keep index");
    kept[k] = true;
  }

  SubsystemSplit split;
  for (std::size_t s = 0; s < dims.size(); ++s) (kept[s] ? split.kept_dim : split.traced_dim) *= dims[s];
  split.kept_of.resize(total);
  split.traced_of.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rem = i;
    std::size_t k = 0, kstride = 1, t = 0, tstride = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
      const std::size_t digit = rem % dims[s];
      rem /= dims[s];
      if (kept[s]) {
        k += digit * kstride;
        kstride *= dims[s];
      } else {
        t += digit * tstride;
        tstride *= dims[s];
      }
    }
    split.kept_of[i] = k;
    split.traced_of[i] = t;
  }
  return split;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw StateError("PureState: empty amplitude vector");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol) {
    std::ostringstream msg;
    msg << "PureState: norm " << norm << " is not 1";
    throw StateError(msg.str());
  }
}

PureState PureState::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw StateError("PureState: cannot normalize a zero vector");
  return PureState(amplitudes / norm);
}

PureState PureState::from_bloch(double theta, double phi) {
  ComplexVector v(2);
  v << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  return PureState(std::move(v));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("PureState::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(idx(dim));
  v(idx(index)) = 1.0;
  return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : matrix_(std::move(m)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols())
    throw StateError("DensityMatrix: matrix must be square and nonempty");
  const double herm = hermiticity_residual(matrix_);
  if (herm > tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (residual " << herm << ")";
    throw StateError(msg.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << tr.real() << " is not 1";
    throw StateError(msg.str());
  }
  const ComplexMatrix h = (matrix_ + matrix_.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: negative eigenvalue " << min_eig;
    throw StateError(msg.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const ComplexVector& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw DimensionError("maximally_mixed: zero dimension");
  return DensityMatrix(ComplexMatrix::Identity(idx(dim), idx(dim)) / static_cast<double>(dim));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (rho.rows() != rho.cols()) throw DimensionError("partial_trace: matrix is not square");
  const auto total = static_cast<std::size_t>(rho.rows());
  const SubsystemSplit split = split_subsystems(total, dims, keep);

  std::vector<std::vector<std::size_t>> groups(split.traced_dim);
  for (std::size_t i = 0; i < total; ++i) groups[split.traced_of[i]].push_back(i);

  ComplexMatrix out = ComplexMatrix::Zero(idx(split.kept_dim), idx(split.kept_dim));
  for (const auto& group : groups)
    for (std::size_t i : group)
      for (std::size_t j : group) out(idx(split.kept_of[i]), idx(split.kept_of[j])) += rho(idx(i), idx(j));
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  return DensityMatrix(partial_trace(rho.matrix(), dims, keep));
}

ComplexMatrix partial_trace(const ComplexVector& psi, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  const auto total = static_cast<std::size_t>(psi.size());
  const SubsystemSplit split = split_subsystems(total, dims, keep);

  ComplexMatrix branches = ComplexMatrix::Zero(idx(split.kept_dim), idx(split.traced_dim));
  for (std::size_t i = 0; i < total; ++i) branches(idx(split.kept_of[i]), idx(split.traced_of[i])) = psi(idx(i));
  return branches * branches.adjoint();
}

EigenDecomposition herm_eig(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("herm_eig: matrix is not square");
  const double herm = hermiticity_residual(m);
  if (herm > tol) {
    std::ostringstream msg;
    msg << "herm_eig: input is not Hermitian (residual " << herm << ")";
    throw StateError(msg.str());
  }
  const ComplexMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("herm_eig: eigensolver did not converge");

  const Eigen::Index n = m.rows();
  EigenDecomposition out{RealVector(n), ComplexMatrix(n, n)};
  // Eigen returns ascending order.
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values(j) = solver.eigenvalues()(n - 1 - j);
    out.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
  }
  return out;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_distance: dimension mismatch");
  const ComplexMatrix diff = a.matrix() - b.matrix();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((diff + diff.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return std::min(1.0, 0.5 * solver.eigenvalues().cwiseAbs().sum());
}

double hermiticity_residual(const ComplexMatrix& m) { return max_abs(m - m.adjoint()); }

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

ComplexMatrix pauli_i() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace chansim
