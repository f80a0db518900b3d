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
#include <string>
#include <vector>

#include "chansim/circuit.hpp"
#include "chansim/numerics.hpp"

namespace chansim {

inline constexpr std::size_t kMaxSimulatorQubits = 20;

/// Statevector after applying `c` to |0...0>, including the global phase.
PureState run(const Circuit& c);
/// Applies `c` to an arbitrary initial vector of length 2^n.
ComplexVector run_from(const Circuit& c, ComplexVector state);
/// Dense unitary of `c` (column j is the image of basis state j).
ComplexMatrix unitary(const Circuit& c);

/// Outcome histogram. Bitstrings list qubit 0 first (most significant).
struct ShotCounts {
  std::size_t qubit_count = 0;
  std::uint64_t shots = 0;
  std::map<std::string, std::uint64_t> histogram;

  /// Throws std::invalid_argument unless counts sum to `shots` and every key
  /// has length `qubit_count` over {0, 1}.
  void validate() const;
  /// {"shots": n, "counts": {"01": k, ...}}
  std::string to_json() const;
  static ShotCounts from_json(const std::string& text);
};

std::string bitstring(std::size_t index, std::size_t qubit_count);

/// Multinomial draw of `shots` outcomes from |amplitude|^2.
ShotCounts sample(const PureState& state, std::uint64_t shots, std::uint64_t seed);

/// Per-qubit misclassification rates: e0 = P(read 1 | 0), e1 = P(read 0 | 1).
struct ReadoutError {
  double e0 = 0.0;
  double e1 = 0.0;
};

class ReadoutModel {
 public:
  explicit ReadoutModel(std::vector<ReadoutError> per_qubit);
  static ReadoutModel uniform(std::size_t qubits, double e0, double e1);
  static ReadoutModel ideal(std::size_t qubits) { return uniform(qubits, 0, 0); }

  std::size_t qubit_count() const { return errors_.size(); }
  const ReadoutError& operator[](std::size_t q) const { return errors_.at(q); }

 private:
  std::vector<ReadoutError> errors_;
};

/// Flips each recorded bit of each shot independently.
ShotCounts apply_readout_noise(const ShotCounts& counts, const ReadoutModel& model, std::uint64_t seed);

/// Empirical frequencies keyed by bitstring.
std::map<std::string, double> frequencies(const ShotCounts& counts);

/// Inverts the tensor product of per-qubit confusion matrices on the
/// empirical frequencies, clips negative quasi-probabilities to zero and
/// renormalizes. Throws std::domain_error for a singular confusion matrix.
std::map<std::string, double> mitigate(const ShotCounts& counts, const ReadoutModel& model);

}  // namespace chansim
