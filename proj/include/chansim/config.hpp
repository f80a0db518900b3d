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
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "chansim/channels.hpp"
#include "chansim/numerics.hpp"
#include "chansim/simulator.hpp"

namespace chansim {

/// Invalid experiment configuration. Messages start with "line N:" when the
/// problem can be traced to a line of the config file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { Exact, Sampled };

/// How a mixed initial state is dilated.
enum class MixedMethod {
  PurifyEvolved = 1,       // purify V(rho (x) |0><0|)V^dagger
  Convex = 2,              // one pure dilation per eigenvector
  DoublePurification = 3,  // purify rho, then dilate the purification
};

struct ChannelSpec {
  std::string name;  // catalog name; empty when `file` is used
  std::string file;
  std::map<std::string, double> params;
};

struct Sweep {
  std::string param;  // empty: single point, channel parameters unchanged
  std::vector<double> grid{0.0};
};

using InitialState = std::variant<PureState, DensityMatrix>;

struct ExperimentConfig {
  ChannelSpec channel;
  InitialState state = PureState::from_bloch(kPi / 2, 0.0);
  Sweep sweep;
  Mode mode = Mode::Exact;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 1;
  std::optional<ReadoutError> readout;
  MixedMethod mixed_method = MixedMethod::DoublePurification;
  std::size_t threads = 1;
  std::string csv_path;
  std::string qasm_dir;
};

/// Parses the line-oriented `key = value` config format documented in the
/// README. '#' starts a comment.
ExperimentConfig parse_config(const std::string& text, const std::string& base_dir = ".");
ExperimentConfig load_config(const std::string& path);

/// Checks config invariants and builds the channel at every grid point.
void validate_config(const ExperimentConfig& cfg);

/// Channel for grid point `index`.
KrausChannel build_channel(const ExperimentConfig& cfg, std::size_t index);

/// Parses "0.5", "1/3", "-2i", "0.5-0.25i", "i".
Complex parse_complex(const std::string& token);
double parse_real(const std::string& token);

const char* mode_name(Mode m);

}  // namespace chansim
