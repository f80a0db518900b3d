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

#include "chansim/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chansim {

ComplexMatrix Gate::matrix() const {
  ComplexMatrix m(2, 2);
  const double h = angle / 2;
  switch (kind) {
    case GateKind::PauliX:
      m << 0, 1, 1, 0;
      break;
    case GateKind::RotY:
      m << std::cos(h), -std::sin(h), std::sin(h), std::cos(h);
      break;
    case GateKind::RotZ:
      m << std::polar(1.0, -h), 0, 0, std::polar(1.0, h);
      break;
    case GateKind::Phase:
      m << 1, 0, 0, std::polar(1.0, angle);
      break;
  }
  return m;
}

Gate x_gate(std::size_t target) { return Gate{GateKind::PauliX, target, 0.0, {}}; }
Gate ry_gate(std::size_t target, double angle) { return Gate{GateKind::RotY, target, angle, {}}; }
Gate rz_gate(std::size_t target, double angle) { return Gate{GateKind::RotZ, target, angle, {}}; }
Gate phase_gate(std::size_t target, double angle) { return Gate{GateKind::Phase, target, angle, {}}; }
Gate cx_gate(std::size_t control, std::size_t target) { return Gate{GateKind::PauliX, target, 0.0, {{control, true}}}; }

Gate controlled(Gate g, std::vector<Control> controls) {
  g.controls = std::move(controls);
  return g;
}

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::PauliX: return "x";
    case GateKind::RotY: return "ry";
    case GateKind::RotZ: return "rz";
    case GateKind::Phase: return "p";
  }
  return "?";
}

Circuit::Circuit(std::size_t qubit_count) : qubit_count_(qubit_count) {}

Circuit& Circuit::add(Gate g) {
  if (g.target >= qubit_count_) throw std::out_of_range("Circuit::add: target qubit out of range");
  std::set<std::size_t> seen{g.target};
  for (const auto& c : g.controls) {
    if (c.qubit >= qubit_count_) throw std::out_of_range("Circuit::add: control qubit out of range");
    if (!seen.insert(c.qubit).second)
      throw std::invalid_argument("Circuit::add: control qubits must be distinct from each other and the target");
  }
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.qubit_count_ > qubit_count_) throw std::invalid_argument("Circuit::append: circuit is wider than target");
  for (const auto& g : other.gates_) add(g);
  global_phase_ += other.global_phase_;
  return *this;
}

std::size_t Circuit::count_cx() const {
  std::size_t n = 0;
  for (const auto& g : gates_) n += g.is_cx() ? 1 : 0;
  return n;
}

std::size_t Circuit::count_controlled() const {
  std::size_t n = 0;
  for (const auto& g : gates_) n += g.controls.empty() ? 0 : 1;
  return n;
}

std::string Circuit::dump() const {
  std::ostringstream out;
  char buf[64];
  out << "qubits " << qubit_count_ << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", global_phase_);
  out << "global_phase " << buf << "\n";
  for (const auto& g : gates_) {
    std::snprintf(buf, sizeof buf, "%.17g", g.angle);
    out << gate_name(g.kind) << ' ' << buf << " controls=";
    for (std::size_t i = 0; i < g.controls.size(); ++i)
      out << (i ? "," : "") << g.controls[i].qubit << ':' << (g.controls[i].active ? 1 : 0);
    out << " target=" << g.target << "\n";
  }
  return out.str();
}

}  // namespace chansim
