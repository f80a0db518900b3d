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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace chansim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// Numeric thresholds shared by every validating routine in the library.
struct Tolerances {
  double validation = 1e-10;      // Hermiticity, trace, norm, CPTP.
  double eigen_residual = 1e-8;   // herm_eig reconstruction / Hermitian input.
  double rank = 1e-12;            // eigenvalues below this count as zero.
};

inline constexpr Tolerances kTolerances{};

/// Raised when operand shapes disagree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value violates a physical-state invariant.
class StateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PureState {
 public:
  /// Throws StateError unless | ||amplitudes|| - 1 | <= tol.
  explicit PureState(ComplexVector amplitudes, double tol = kTolerances.validation);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(ComplexVector amplitudes);
  /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
  static PureState from_bloch(double theta, double phi);
  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

 private:
  ComplexVector amplitudes_;
};

class DensityMatrix {
 public:
  /// Throws StateError unless the matrix is Hermitian, unit trace and PSD
  /// within tol.
  explicit DensityMatrix(ComplexMatrix m, double tol = kTolerances.validation);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return matrix_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

 private:
  ComplexMatrix matrix_;
};

struct EigenDecomposition {
  RealVector values;     // descending
  ComplexMatrix vectors; // column j pairs with values(j)
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Reduced state over the subsystems listed in `keep`, in their original
/// order. `dims` factorizes rho.dim() with subsystem 0 most significant.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
/// Same as tracing |psi><psi| but without forming the full outer product.
ComplexMatrix partial_trace(const ComplexVector& psi, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

EigenDecomposition herm_eig(const ComplexMatrix& m, double tol = kTolerances.eigen_residual);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Largest entry-wise modulus of a - a^dagger.
double hermiticity_residual(const ComplexMatrix& m);
/// Largest entry-wise modulus.
double max_abs(const ComplexMatrix& m);

/// Pauli matrices in the computational basis.
ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace chansim
