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

#include <cstddef>
#include <string>
#include <vector>

#include "chansim/numerics.hpp"

namespace chansim {

enum class GateKind { PauliX, RotY, RotZ, Phase };

/// A control qubit and the bit value that activates the gate.
struct Control {
  std::size_t qubit;
  bool active = true;

  friend bool operator==(const Control&, const Control&) = default;
};

/// A single-qubit gate with optional (possibly negated) controls. Angles are
/// in radians; PauliX ignores `angle`.
///   RotY(t)  = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
///   RotZ(t)  = diag(e^{-i t/2}, e^{i t/2})
///   Phase(t) = diag(1, e^{i t})
struct Gate {
  GateKind kind;
  std::size_t target;
  double angle = 0.0;
  std::vector<Control> controls;

  bool is_cx() const { return kind == GateKind::PauliX && controls.size() == 1 && controls[0].active; }
  /// 2x2 matrix of the target action.
  ComplexMatrix matrix() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

Gate x_gate(std::size_t target);
Gate ry_gate(std::size_t target, double angle);
Gate rz_gate(std::size_t target, double angle);
Gate phase_gate(std::size_t target, double angle);
Gate cx_gate(std::size_t control, std::size_t target);
Gate controlled(Gate g, std::vector<Control> controls);

const char* gate_name(GateKind kind);

/// Ordered gate list on `qubit_count` qubits, applied first to last, plus a
/// global phase factor exp(i global_phase). Qubit 0 is the most significant
/// bit of basis-state labels.
class Circuit {
 public:
  explicit Circuit(std::size_t qubit_count = 0);

  std::size_t qubit_count() const { return qubit_count_; }
  const std::vector<Gate>& gates() const { return gates_; }
  double global_phase() const { return global_phase_; }
  std::size_t size() const { return gates_.size(); }

  /// Throws std::out_of_range / std::invalid_argument on bad indices.
  Circuit& add(Gate g);
  Circuit& append(const Circuit& other);
  void add_global_phase(double phase) { global_phase_ += phase; }

  std::size_t count_cx() const;
  std::size_t count_controlled() const;

  /// One gate per line: "<kind> <angle> controls=<q>:<bit>,... target=<q>".
  std::string dump() const;

 private:
  std::size_t qubit_count_;
  std::vector<Gate> gates_;
  double global_phase_ = 0.0;
};

}  // namespace chansim
