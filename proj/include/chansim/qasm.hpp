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

#include <stdexcept>
#include <string>
#include <vector>

#include "chansim/circuit.hpp"

namespace chansim {

class QasmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// OpenQASM 2.0 text for a lowered circuit (gates x, ry, rz, u1, cx only),
/// followed by `basis_change` and a full-register measurement when `measure`
/// is set. Angles are printed with 17 significant digits; the global phase,
/// which QASM 2.0 cannot express, is recorded in a `// global_phase` comment.
std::string to_qasm(const Circuit& lowered, const std::vector<Gate>& basis_change = {}, bool measure = true);

/// Reads the subset emitted by to_qasm. Measurements and barriers are
/// skipped; any other statement is rejected.
Circuit parse_qasm(const std::string& text);

}  // namespace chansim
