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

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

#include "chansim/qsp.hpp"

namespace chansim {

namespace {

std::size_t gray(std::size_t i) { return i ^ (i >> 1); }

// Diagonal exp(i phases[s]) on `qubits` (qubits[0] most significant).
void append_diagonal(Circuit& out, std::vector<std::size_t> qubits, std::vector<double> phases) {
  while (!qubits.empty()) {
    const std::size_t target = qubits.back();
    qubits.pop_back();
    const std::size_t half = phases.size() / 2;
    std::vector<double> rz(half), rest(half);
    for (std::size_t s = 0; s < half; ++s) {
      rz[s] = phases[2 * s + 1] - phases[2 * s];
      rest[s] = (phases[2 * s] + phases[2 * s + 1]) / 2;
    }
    append_multiplexed_rotation(out, GateKind::RotZ, target, qubits, rz);
    phases = std::move(rest);
  }
  out.add_global_phase(phases.front());
}

struct Multiplexor {
  GateKind kind;
  std::size_t target;
  std::vector<std::size_t> controls;  // sorted ascending
  std::vector<double> angles;
};

std::vector<std::size_t> sorted_controls(const Gate& g) {
  std::vector<std::size_t> qs;
  for (const auto& c : g.controls) qs.push_back(c.qubit);
  std::sort(qs.begin(), qs.end());
  return qs;
}

std::size_t pattern_index(const Gate& g, const std::vector<std::size_t>& controls) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < controls.size(); ++i) {
    auto it = std::find_if(g.controls.begin(), g.controls.end(),
                           [&](const Control& c) { return c.qubit == controls[i]; });
    if (it->active) s |= std::size_t{1} << (controls.size() - 1 - i);
  }
  return s;
}

void flush(Circuit& out, const Multiplexor& m) {
  if (m.kind == GateKind::Phase) {
    // diag(1, e^{i a}) = e^{i a/2} Rz(a) on the target, per control pattern.
    append_multiplexed_rotation(out, GateKind::RotZ, m.target, m.controls, m.angles);
    std::vector<double> half(m.angles.size());
    for (std::size_t s = 0; s < half.size(); ++s) half[s] = m.angles[s] / 2;
    append_diagonal(out, m.controls, std::move(half));
  } else {
    append_multiplexed_rotation(out, m.kind, m.target, m.controls, m.angles);
  }
}

void lower_controlled_x(Circuit& out, const Gate& g) {
  if (g.controls.size() == 1) {
    const Control& c = g.controls.front();
    if (!c.active) out.add(x_gate(c.qubit));
    out.add(cx_gate(c.qubit, g.target));
    if (!c.active) out.add(x_gate(c.qubit));
    return;
  }
  // Multi-controlled X = H (multi-controlled Z) H, with H = X Ry(pi/2).
  Multiplexor mz{GateKind::Phase, g.target, sorted_controls(g),
                 std::vector<double>(std::size_t{1} << g.controls.size(), 0.0)};
  mz.angles[pattern_index(g, mz.controls)] = kPi;
  out.add(ry_gate(g.target, kPi / 2));
  out.add(x_gate(g.target));
  flush(out, mz);
  out.add(ry_gate(g.target, kPi / 2));
  out.add(x_gate(g.target));
}

}  // namespace

void append_multiplexed_rotation(Circuit& out, GateKind axis, std::size_t target,
                                 std::span<const std::size_t> controls, std::span<const double> angles) {
  if (axis != GateKind::RotY && axis != GateKind::RotZ)
    throw std::invalid_argument("append_multiplexed_rotation: axis must be RotY or RotZ");
  const std::size_t k = controls.size();
  const std::size_t n = std::size_t{1} << k;
  if (angles.size() != n) throw std::invalid_argument("append_multiplexed_rotation: need 2^k angles");
  if (k == 0) {
    out.add(Gate{axis, target, angles[0], {}});
    return;
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double theta = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      theta += (std::popcount(j & gray(i)) % 2 ? -1.0 : 1.0) * angles[j];
    out.add(Gate{axis, target, theta * scale, {}});
    const std::size_t changed = gray(i) ^ gray((i + 1) % n);
    const auto bit = static_cast<std::size_t>(std::countr_zero(changed));
    out.add(cx_gate(controls[k - 1 - bit], target));
  }
}

Circuit lower(const Circuit& c) {
  Circuit out(c.qubit_count());
  out.add_global_phase(c.global_phase());

  std::optional<Multiplexor> pending;
  auto drain = [&] {
    if (pending) flush(out, *pending);
    pending.reset();
  };

  for (const Gate& g : c.gates()) {
    if (g.controls.empty() || g.is_cx()) {
      drain();
      out.add(g);
      continue;
    }
    if (g.kind == GateKind::PauliX) {
      drain();
      lower_controlled_x(out, g);
      continue;
    }
    const auto qs = sorted_controls(g);
    if (!pending || pending->kind != g.kind || pending->target != g.target || pending->controls != qs) {
      drain();
      pending = Multiplexor{g.kind, g.target, qs, std::vector<double>(std::size_t{1} << qs.size(), 0.0)};
    }
    pending->angles[pattern_index(g, qs)] += g.angle;
  }
  drain();
  return out;
}

}  // namespace chansim
