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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "chansim/numerics.hpp"

namespace chansim {

/// A quantum operation in operator-sum form.
///
/// The order of `kraus_ops` is significant: operator j is tagged by ancilla
/// basis state |j> when the channel is dilated, so catalog constructors keep
/// the order in which the operators are conventionally listed and never drop
/// zero operators. Completeness is not enforced here; use validate_cptp.
class KrausChannel {
 public:
  KrausChannel(std::vector<ComplexMatrix> kraus_ops, std::string label = "custom",
               std::map<std::string, double> params = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ops_.size(); }
  const std::vector<ComplexMatrix>& kraus_ops() const { return ops_; }
  const ComplexMatrix& op(std::size_t j) const { return ops_.at(j); }
  const std::string& label() const { return label_; }
  const std::map<std::string, double>& params() const { return params_; }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> ops_;
  std::string label_;
  std::map<std::string, double> params_;
};

struct CptpReport {
  bool pass = false;
  double residual = 0.0;  // max |(sum_j K_j^dagger K_j - I)_{rc}|
};

CptpReport validate_cptp(const KrausChannel& ch, double tol = kTolerances.validation);

/// Largest entry of |sum_j K_j K_j^dagger - I|; zero for unital channels.
double unitality_residual(const KrausChannel& ch);

/// sum_j K_j rho K_j^dagger.
DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);
ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho);

/// Drops Kraus operators whose entries are all below tol in modulus. At least
/// one operator is always kept.
KrausChannel prune(const KrausChannel& ch, double tol = 1e-14);

/// Kraus operators sqrt(p_P) P ordered (I, X, Z, Y).
KrausChannel pauli_channel(double p_i, double p_x, double p_z, double p_y);
/// {sqrt(1-p) I, sqrt(p) P} with P = X, Z and Y respectively.
KrausChannel bit_flip(double p);
KrausChannel phase_flip(double p);
KrausChannel bit_phase_flip(double p);
/// Pauli channel ((4 - 3p)/4, p/4, p/4, p/4).
KrausChannel depolarizing(double p);
KrausChannel identity_channel(std::size_t dim);

/// {|0><0| + sqrt(1-p)|1><1|, sqrt(p)|1><1|}.
KrausChannel phase_damping(double p);
/// Generalized amplitude damping, operators K0..K3 at damping p and
/// excited-state weight N.
KrausChannel gad(double p, double n);

/// Cyclic shift X(j) = sum_k |j+k mod d><k|.
ComplexMatrix hw_shift(std::size_t d, std::size_t j);
/// Clock Z(k) = sum_l exp(2 pi i k l / d)|l><l|.
ComplexMatrix hw_phase(std::size_t d, std::size_t k);

/// Operators sqrt(p_{j,k}) X(j) Z(k) in lexicographic (j, k) order.
/// `probs` is d x d and row j holds p_{j,.}.
KrausChannel heisenberg_weyl(std::size_t d, const Eigen::MatrixXd& probs);
/// Operators sqrt(p_j) Z(j) with p_0 = p0 and the rest (1 - p0)/(d - 1).
KrausChannel hw_dephasing(std::size_t d, double p0);
/// Zero-temperature amplitude damping on a qutrit.
KrausChannel qutrit_adc(double gamma);

using Vec3 = std::array<double, 3>;

/// Lorentz boost seen by a spin-1/2 particle whose momentum basis states all
/// share rapidity `momentum_rapidity` and point along `momentum_directions`.
struct WignerBoost {
  double rapidity = 0.0;          // omega = atanh(v)
  Vec3 boost_direction{0, 0, 1};
  double momentum_rapidity = 0.0; // cosh(alpha) = p0 / m
  std::vector<Vec3> momentum_directions;
};

struct WignerRotation {
  double angle = 0.0;
  Vec3 axis{0, 0, 1};

  /// cos(angle/2) I + i sin(angle/2) (sigma . axis).
  ComplexMatrix matrix() const;
};

/// Components of the Wigner rotation before the angle is extracted:
/// cos(theta/2) and the vector sin(theta/2) n.
struct WignerHalfAngle {
  double cos_half = 1.0;
  Vec3 sin_half_axis{0, 0, 0};
};

WignerHalfAngle wigner_half_angle(const WignerBoost& boost, std::size_t j);
WignerRotation wigner_rotation(const WignerBoost& boost, std::size_t j);

/// Operators D(W(boost, p_j)) / sqrt(d_p) on the spin qubit.
KrausChannel wigner_channel(const WignerBoost& boost);
/// Same construction from explicit rotations, one per momentum state.
KrausChannel wigner_channel(const std::vector<WignerRotation>& rotations);
/// Two momenta along +x and -x, boost along z, common Wigner angle theta.
KrausChannel lorentz_spin_channel(double theta);

/// sum_{j != k} |rho_{jk}|.
double l1_coherence(const ComplexMatrix& rho);
double l1_coherence(const DensityMatrix& rho);

}  // namespace chansim
