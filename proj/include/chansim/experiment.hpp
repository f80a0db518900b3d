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
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "chansim/circuit.hpp"
#include "chansim/config.hpp"
#include "chansim/dilation.hpp"
#include "chansim/qsp.hpp"

namespace chansim {

/// A synthesized circuit failed to reproduce its target state.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimum |<target|prepared>|^2 accepted for a lowered circuit.
inline constexpr double kPreparationFidelity = 1.0 - 1e-10;

/// One dilated pure state of a grid point with its preparation circuits.
/// Pure inputs and mixed methods 1 and 3 produce a single branch of weight
/// one; method 2 produces one branch per eigenvector.
struct PreparedBranch {
  double weight;
  DilatedState state;
  Synthesis synthesis;
  Circuit lowered;
};

DensityMatrix initial_density(const ExperimentConfig& cfg);

/// Operator-sum evolution of the initial state at grid point `index`.
DensityMatrix oracle_state(const ExperimentConfig& cfg, std::size_t index);

/// Dilates, embeds, synthesizes and lowers; throws VerificationError if a
/// lowered circuit misses its target.
std::vector<PreparedBranch> prepare_point(const ExperimentConfig& cfg, std::size_t index);

struct PointResult {
  double param_value = 0.0;
  double c_theory = std::numeric_limits<double>::quiet_NaN();
  double c_measured = std::numeric_limits<double>::quiet_NaN();
  double trace_distance = std::numeric_limits<double>::quiet_NaN();
  std::size_t synth_gate_count = 0;
  std::size_t lowered_gate_count = 0;
  /// Empty on success.
  std::string error;

  bool ok() const { return error.empty(); }
};

struct ExperimentResult {
  Mode mode = Mode::Exact;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<PointResult> rows;

  bool ok() const;
  /// Header plus one row per grid point, in grid order. Failed points carry
  /// "error" in the mode column.
  std::string to_csv() const;
};

/// Evaluates one grid point. Failures are recorded in the result instead
/// of thrown.
PointResult run_point(const ExperimentConfig& cfg, std::size_t index);

/// Validates `cfg` (throwing ConfigError) and evaluates every grid point,
/// using up to cfg.threads workers (0 = hardware concurrency). Sampling
/// seeds depend only on (cfg.seed, point, branch, setting).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct QasmProgram {
  std::string name;  // e.g. "ZZ", or "branch1_XY" for convex mixtures
  std::string text;
};

/// Lowered preparation circuits of grid point `index` as OpenQASM. Without
/// `all_settings` only the computational-basis program is produced.
std::vector<QasmProgram> export_qasm(const ExperimentConfig& cfg, std::size_t index, bool all_settings);

}  // namespace chansim
