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

#include "chansim/qasm.hpp"

#include <cstdio>
#include <optional>
#include <regex>
#include <sstream>

namespace chansim {

namespace {

std::string fmt_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

void emit(std::ostringstream& out, const Gate& g) {
  if (g.is_cx()) {
    out << "cx q[" << g.controls[0].qubit << "],q[" << g.target << "];\n";
    return;
  }
  if (!g.controls.empty()) throw QasmError("to_qasm: circuit must be lowered before export");
  switch (g.kind) {
    case GateKind::PauliX: out << "x q[" << g.target << "];\n"; break;
    case GateKind::RotY: out << "ry(" << fmt_angle(g.angle) << ") q[" << g.target << "];\n"; break;
    case GateKind::RotZ: out << "rz(" << fmt_angle(g.angle) << ") q[" << g.target << "];\n"; break;
    case GateKind::Phase: out << "u1(" << fmt_angle(g.angle) << ") q[" << g.target << "];\n"; break;
  }
}

}  // namespace

std::string to_qasm(const Circuit& lowered, const std::vector<Gate>& basis_change, bool measure) {
  const std::size_t n = lowered.qubit_count();
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "// global_phase " << fmt_angle(lowered.global_phase()) << "\n";
  out << "qreg q[" << n << "];\n";
  if (measure) out << "creg c[" << n << "];\n";
  for (const Gate& g : lowered.gates()) emit(out, g);
  for (const Gate& g : basis_change) emit(out, g);
  if (measure) {
    out << "barrier q;\n";
    for (std::size_t q = 0; q < n; ++q) out << "measure q[" << q << "] -> c[" << q << "];\n";
  }
  return out.str();
}

Circuit parse_qasm(const std::string& text) {
  static const std::regex header(R"(OPENQASM\s+2\.0\s*;)");
  static const std::regex include(R"(include\s+"qelib1\.inc"\s*;)");
  static const std::regex phase_comment(R"(//\s*global_phase\s+(\S+))");
  static const std::regex qreg(R"(qreg\s+q\[(\d+)\]\s*;)");
  static const std::regex creg(R"(creg\s+c\[(\d+)\]\s*;)");
  static const std::regex one_qubit(R"((x|ry|rz|u1)(?:\(([^)]*)\))?\s+q\[(\d+)\]\s*;)");
  static const std::regex cx(R"(cx\s+q\[(\d+)\]\s*,\s*q\[(\d+)\]\s*;)");
  static const std::regex skip(R"((barrier\s+q\s*;|measure\s+q\[\d+\]\s*->\s*c\[\d+\]\s*;))");

  std::istringstream in(text);
  std::string line;
  std::optional<Circuit> circuit;
  double global_phase = 0.0;
  std::size_t lineno = 0;
  bool saw_header = false;
  auto fail = [&](const std::string& why) {
    throw QasmError("qasm line " + std::to_string(lineno) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    std::smatch m;
    if (std::regex_match(line, m, phase_comment)) {
      global_phase = std::stod(m[1]);
      continue;
    }
    if (line.rfind("//", 0) == 0) continue;
    if (std::regex_match(line, header)) {
      saw_header = true;
      continue;
    }
    if (!saw_header) fail("missing OPENQASM 2.0 header");
    if (std::regex_match(line, include) || std::regex_match(line, creg) || std::regex_match(line, skip)) continue;
    if (std::regex_match(line, m, qreg)) {
      if (circuit) fail("multiple qreg declarations");
      circuit.emplace(std::stoul(m[1]));
      continue;
    }
    if (!circuit) fail("gate before qreg declaration");
    try {
      if (std::regex_match(line, m, one_qubit)) {
        const std::string name = m[1];
        const std::size_t q = std::stoul(m[3]);
        const double angle = m[2].matched ? std::stod(m[2]) : 0.0;
        if (name == "x") circuit->add(x_gate(q));
        else if (name == "ry") circuit->add(ry_gate(q, angle));
        else if (name == "rz") circuit->add(rz_gate(q, angle));
        else circuit->add(phase_gate(q, angle));
      } else if (std::regex_match(line, m, cx)) {
        circuit->add(cx_gate(std::stoul(m[1]), std::stoul(m[2])));
      } else {
        fail("unsupported statement '" + line + "'");
      }
    } catch (const std::logic_error& e) {
      fail(e.what());
    }
  }
  if (!circuit) throw QasmError("qasm: no qreg declaration");
  circuit->add_global_phase(global_phase);
  return *circuit;
}

}  // namespace chansim
