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

#include "chansim/qsp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chansim/simulator.hpp"

namespace chansim {

namespace {

// Branch weights below this are treated as empty subtrees.
constexpr double kZeroWeight = 1e-14;

std::size_t qubit_count_of(const PureState& target) {
  const std::size_t dim = target.dim();
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim) throw DimensionError("synthesize: amplitude count is not a power of two");
  if (n < 1 || n > kMaxSynthesisQubits) {
    std::ostringstream msg;
    msg << "synthesize: qubit count " << n << " outside [1, " << kMaxSynthesisQubits << "]";
    throw DimensionError(msg.str());
  }
  return n;
}

std::vector<Control> pattern_controls(std::size_t k, std::size_t s) {
  std::vector<Control> controls;
  controls.reserve(k);
  for (std::size_t q = 0; q < k; ++q) controls.push_back({q, ((s >> (k - 1 - q)) & 1U) != 0});
  return controls;
}

// magnitudes[k][s] is the norm of the subtree whose first k qubits read s.
std::vector<std::vector<double>> magnitude_tree(const PureState& target, std::size_t n) {
  std::vector<std::vector<double>> tree(n + 1);
  tree[n].resize(target.dim());
  for (std::size_t i = 0; i < target.dim(); ++i) tree[n][i] = std::abs(target[i]);
  for (std::size_t k = n; k-- > 0;) {
    tree[k].resize(std::size_t{1} << k);
    for (std::size_t s = 0; s < tree[k].size(); ++s)
      tree[k][s] = std::hypot(tree[k + 1][2 * s], tree[k + 1][2 * s + 1]);
  }
  return tree;
}

struct SlotAngles {
  double theta = 0.0;
  double phi = 0.0;
  double t = 0.0;
};

Synthesis synthesize_impl(const PureState& target, bool real_only) {
  const std::size_t n = qubit_count_of(target);
  const auto tree = magnitude_tree(target, n);

  Synthesis out{Circuit(n), {}};
  out.stats.qubits = n;
  Circuit& c = out.circuit;

  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t patterns = std::size_t{1} << k;
    const bool last = k + 1 == n;
    std::vector<SlotAngles> angles(patterns);
    std::vector<bool> active(patterns, false);

    for (std::size_t s = 0; s < patterns; ++s) {
      ++out.stats.slots;
      if (tree[k][s] <= kZeroWeight) continue;
      SlotAngles& a = angles[s];
      if (!last) {
        a.theta = 2 * std::atan2(tree[k + 1][2 * s + 1], tree[k + 1][2 * s]);
      } else if (real_only) {
        a.theta = 2 * std::atan2(target[2 * s + 1].real(), target[2 * s].real());
      } else {
        const Complex c0 = target[2 * s];
        const Complex c1 = target[2 * s + 1];
        const double phi0 = std::atan2(c0.imag(), c0.real());
        const double phi1 = std::atan2(c1.imag(), c1.real());
        a.theta = 2 * std::atan2(std::abs(c1), std::abs(c0));
        a.phi = phi1 - phi0;
        a.t = phi1 + phi0;
      }
      active[s] = a.theta != 0.0 || a.phi != 0.0 || a.t != 0.0;
    }
    for (std::size_t s = 0; s < patterns; ++s) out.stats.pruned_slots += active[s] ? 0 : 1;

    // Within a layer the controlled unitaries act on disjoint control
    // subspaces, so they are emitted grouped by gate type. The target qubit
    // is still |0> here, which lets X P(t/2) X realize the e^{it/2} factor.
    bool any_phase = false;
    for (std::size_t s = 0; s < patterns; ++s) any_phase |= active[s] && angles[s].t != 0.0;
    if (any_phase) {
      if (k == 0) {
        c.add_global_phase(angles[0].t / 2);
      } else {
        c.add(x_gate(k));
        for (std::size_t s = 0; s < patterns; ++s)
          if (active[s] && angles[s].t != 0.0)
            c.add(controlled(phase_gate(k, angles[s].t / 2), pattern_controls(k, s)));
        c.add(x_gate(k));
      }
    }
    for (std::size_t s = 0; s < patterns; ++s)
      if (active[s] && angles[s].theta != 0.0) c.add(controlled(ry_gate(k, angles[s].theta), pattern_controls(k, s)));
    for (std::size_t s = 0; s < patterns; ++s)
      if (active[s] && angles[s].phi != 0.0) c.add(controlled(rz_gate(k, angles[s].phi), pattern_controls(k, s)));
  }
  out.stats.gate_count = c.size();
  return out;
}

}  // namespace

Synthesis synthesize_with_stats(const PureState& target) { return synthesize_impl(target, false); }

Circuit synthesize(const PureState& target) { return synthesize_with_stats(target).circuit; }

Synthesis synthesize_real_with_stats(const PureState& target) {
  for (std::size_t i = 0; i < target.dim(); ++i)
    if (std::abs(target[i].imag()) > 1e-12) throw std::invalid_argument("synthesize_real: amplitudes must be real");
  return synthesize_impl(target, true);
}

Circuit synthesize_real(const PureState& target) { return synthesize_real_with_stats(target).circuit; }

double verify_preparation(const Circuit& c, const PureState& target) {
  if (target.dim() != (std::size_t{1} << c.qubit_count()))
    throw DimensionError("verify_preparation: target dimension does not match circuit width");
  const ComplexVector out = run(c).amplitudes();
  return std::min(1.0, std::norm(target.amplitudes().dot(out)));
}

}  // namespace chansim
