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

#include <optional>
#include <stdexcept>
#include <vector>

#include "chansim/channels.hpp"
#include "chansim/numerics.hpp"

namespace chansim {

/// Binary encoding of a product of qudit factors onto qubits. Factor f with
/// dimension d_f occupies ceil(log2 d_f) qubits; level l maps to the binary
/// digits of l, most significant first. Factors are laid out in order, the
/// first factor on the most significant qubits.
class QubitEmbedding {
 public:
  QubitEmbedding() = default;
  explicit QubitEmbedding(std::vector<std::size_t> factor_dims);

  const std::vector<std::size_t>& factor_dims() const { return dims_; }
  const std::vector<std::size_t>& qubit_counts() const { return qubits_; }
  std::size_t total_qubits() const { return total_qubits_; }
  std::size_t dense_dim() const { return dense_dim_; }

  /// Qubit-register index of dense product index `i`.
  std::size_t embedded_index(std::size_t i) const;
  /// First qubit of factor f.
  std::size_t first_qubit(std::size_t f) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> qubits_;
  std::size_t total_qubits_ = 0;
  std::size_t dense_dim_ = 1;
};

std::size_t qubits_for_levels(std::size_t d);

/// Pure state on system (x) ancilla_1 (x) ... with the system factor most
/// significant.
struct DilatedState {
  std::size_t system_dim = 0;
  std::vector<std::size_t> ancilla_dims;
  PureState amplitudes;
  QubitEmbedding embedding;

  DilatedState(std::size_t system_dim, std::vector<std::size_t> ancilla_dims, PureState amplitudes);

  std::vector<std::size_t> factor_dims() const;
  std::size_t ancilla_dim() const;
  /// Partial trace over every ancilla factor.
  DensityMatrix reduced_system() const;
};

/// sum_j (K_j|psi>) (x) |j>.
DilatedState dilate_pure(const KrausChannel& ch, const PureState& psi);

/// Qubit-register amplitudes of the dilated state; padding levels are zero.
PureState embed_qudits(const DilatedState& state);

/// Inverse of the embedding for amplitude vectors. Weight that sits on
/// padding basis states is discarded and reported through `leaked_weight`.
ComplexVector unembed(const QubitEmbedding& embedding, const ComplexVector& qubit_amplitudes,
                      double* leaked_weight = nullptr);

/// Raised when post-selecting an ancilla outcome that has zero probability.
class UnpostselectableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Postselection {
  double probability = 0.0;
  PureState conditional;
};

/// Conditions on ancilla outcome j (an index into the combined ancilla space).
Postselection postselect(const DilatedState& state, std::size_t j,
                         double zero_tol = kTolerances.rank);

/// Bloch-ball coordinates of a qubit state: rho = (I + r n.sigma)/2 with
/// n = (sin t cos f, sin t sin f, cos t).
struct BlochParameters {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

BlochParameters qubit_bloch_parameters(const DensityMatrix& rho);

/// Spectral data of a mixed input, restricted to nonzero eigenvalues.
struct SpectralInput {
  std::vector<double> eigenvalues;
  std::vector<PureState> eigenvectors;
  std::optional<BlochParameters> bloch;
};

SpectralInput spectral_input(const DensityMatrix& rho, double rank_tol = kTolerances.rank);

/// Qubit eigen-pair in Bloch form: r_0 = (1 + r)/2 with
/// |r_0> = cos(t/2)|0> + e^{if} sin(t/2)|1>, and r_1 = (1 - r)/2 with
/// |r_1> = sin(t/2)|0> - e^{if} cos(t/2)|1>.
SpectralInput spectral_input_from_bloch(double r, double theta, double phi);

/// Purifies V(rho (x) |0><0|)V^dagger. Ancilla dims are {#Kraus, d_A * #Kraus}.
DilatedState mixed_method_purify_evolved(const KrausChannel& ch, const DensityMatrix& rho);

/// One pure dilation per eigenvector, weighted by its eigenvalue.
struct ConvexBranch {
  double weight;
  DilatedState state;
};
std::vector<ConvexBranch> convex_branches(const KrausChannel& ch, const DensityMatrix& rho);
/// sum_k r_k Tr_B(dilate_pure(ch, |r_k>)).
DensityMatrix mixed_method_convex(const KrausChannel& ch, const DensityMatrix& rho);

/// sum_{j,l} sqrt(r_l) K_j|r_l> (x) |l>_B (x) |j>_C with dim B = rank(rho).
DilatedState mixed_method_double_purification(const KrausChannel& ch, const DensityMatrix& rho);
DilatedState mixed_method_double_purification(const KrausChannel& ch, const SpectralInput& spectrum);

}  // namespace chansim
