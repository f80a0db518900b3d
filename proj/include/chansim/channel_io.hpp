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

#include <map>
#include <string>

#include "chansim/channels.hpp"

namespace chansim {

// Channel file schema (JSON):
//
//   {
//     "dim": 2,
//     "label": "bit_flip",
//     "params": {"p": 0.25},
//     "kraus": [
//       [[[re, im], [re, im]],
//        [[re, im], [re, im]]],
//       ...
//     ]
//   }
//
// Each Kraus matrix is a list of rows; each entry is a [re, im] pair.
// "label" and "params" are optional.

class ChannelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

KrausChannel parse_channel(const std::string& json_text);
std::string serialize_channel(const KrausChannel& ch);
KrausChannel load_channel(const std::string& path);

/// Builds a catalog channel by name. Recognized names and parameters:
///   identity(d), pauli(pI, pX, pZ, pY), bit_flip(p), phase_flip(p),
///   bit_phase_flip(p), depolarizing(p), phase_damping(p), gad(p, N),
///   hw_dephasing(d, p0), hw_twirl(d), qutrit_adc(gamma), lorentz(theta),
///   wigner(omega, alpha) with boost along z and momenta along +x and -x.
/// Missing parameters throw std::invalid_argument naming the parameter.
KrausChannel make_catalog_channel(const std::string& name, const std::map<std::string, double>& params);

}  // namespace chansim
