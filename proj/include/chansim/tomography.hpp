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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "chansim/circuit.hpp"
#include "chansim/numerics.hpp"
#include "chansim/simulator.hpp"

namespace chansim {

/// Pauli measurement settings over a set of system qubits: every word in
/// {X, Y, Z}^n in lexicographic order, the first letter belonging to
/// system_qubits[0].
struct TomographySettings {
  std::vector<std::size_t> system_qubits;
  std::vector<std::string> labels;
  /// Gates to append before a computational-basis measurement, per label.
  std::vector<std::vector<Gate>> rotations;

  std::size_t size() const { return labels.size(); }
};

/// X: Ry(-pi/2). Y: Rz(-pi/2) then Ry(-pi/2). Z: nothing.
std::vector<Gate> basis_change(char pauli, std::size_t qubit);

TomographySettings settings_for(std::span<const std::size_t> system_qubits);

/// Outcome distribution over the full measured register for one setting.
/// `shots` is zero for exact probabilities.
struct SettingData {
  std::map<std::string, double> probabilities;
  std::uint64_t shots = 0;
};

SettingData setting_data(const ShotCounts& counts);
SettingData setting_data(const std::map<std::string, double>& probabilities, std::uint64_t shots);

struct PauliExpectation {
  double value = 0.0;
  double std_error = 0.0;
};

/// Keyed by Pauli word over the system qubits, e.g. "IZ", including the
/// all-identity word.
using ExpectationSet = std::map<std::string, PauliExpectation>;

/// Pools every setting compatible with each Pauli word. Bits of qubits that
/// are not system qubits are summed over. Throws std::invalid_argument if
/// `data` does not cover every setting.
ExpectationSet expectations(const TomographySettings& settings, const std::vector<SettingData>& data);

/// Tr(rho P) for every Pauli word; rho must be 2^n x 2^n.
ExpectationSet exact_expectations(const ComplexMatrix& rho);

ComplexMatrix pauli_word_matrix(const std::string& word);

struct TomographyResult {
  ComplexMatrix raw;
  DensityMatrix projected;
  ExpectationSet expectations;
  std::uint64_t shots_per_setting = 0;
};

/// Linear inversion (1/2^n) sum_P <P> P, then projection onto the physical
/// states.
TomographyResult reconstruct(const ExpectationSet& expectations, std::uint64_t shots_per_setting = 0);

/// Clips negative eigenvalues to zero and removes the clipped mass from the
/// remaining eigenvalues in proportion to their size. Returns the Hermitian
/// part unchanged when it is already positive semidefinite.
DensityMatrix project_to_physical(const ComplexMatrix& raw);

/// Restriction of an embedded qudit state to its first `levels` basis
/// states, renormalized; `dropped_mass` is the weight on padding levels.
struct QuditExtraction {
  DensityMatrix state;
  double dropped_mass;
};

QuditExtraction extract_qudit(const DensityMatrix& embedded, std::size_t levels);

}  // namespace chansim
