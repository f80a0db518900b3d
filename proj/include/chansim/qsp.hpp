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
#include <span>

#include "chansim/circuit.hpp"
#include "chansim/numerics.hpp"

namespace chansim {

inline constexpr std::size_t kMaxSynthesisQubits = 12;

/// Counts for a synthesized preparation circuit. The recursion allots one
/// (multi-)controlled single-qubit unitary per control pattern per layer, so
/// an n-qubit target has 2^n - 1 slots; slots whose branch has no weight, or
/// whose unitary is the identity, emit no gates and are counted as pruned.
struct SynthesisStats {
  std::size_t qubits = 0;
  std::size_t slots = 0;
  std::size_t pruned_slots = 0;
  std::size_t gate_count = 0;
};

struct Synthesis {
  Circuit circuit;
  SynthesisStats stats;
};

/// Prepares `target` from |0...0> by multiplexed rotations: qubits 0..n-2
/// first receive the real magnitude state r_s = sqrt(|c_s0|^2 + |c_s1|^2)
/// through Ry-only layers, then qubit n-1 receives, for every pattern s of
/// the other qubits, U_s = e^{i t_s/2} Rz(phi_s) Ry(theta_s) controlled on s.
/// Exact up to the tracked global phase.
Synthesis synthesize_with_stats(const PureState& target);
Circuit synthesize(const PureState& target);

/// Ry-only variant for real amplitude vectors (signs allowed).
Synthesis synthesize_real_with_stats(const PureState& target);
Circuit synthesize_real(const PureState& target);

/// Rewrites every controlled gate over {x, ry, rz, p, cx}. Runs of
/// controlled Ry/Rz/Phase sharing kind, target and control set are merged
/// into one multiplexor and emitted as a Gray-code sequence of 2^k rotations
/// and 2^k CX gates. Phase multiplexors additionally leave a diagonal on the
/// controls, which is peeled one qubit at a time into multiplexed Rz and
/// finally the global phase.
Circuit lower(const Circuit& c);

/// Appends the Gray-code decomposition of a uniformly controlled rotation.
/// `angles[s]` is applied when the controls read s, controls[0] being the
/// most significant bit. `axis` must be RotY or RotZ.
void append_multiplexed_rotation(Circuit& out, GateKind axis, std::size_t target,
                                 std::span<const std::size_t> controls, std::span<const double> angles);

/// |<target| run(c) |0...0>|^2.
double verify_preparation(const Circuit& c, const PureState& target);

}  // namespace chansim
