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

namespace chansim {

/// Counter-based generator: draw k of stream (key) is a pure function of
/// (key, k), so independent streams can be split off by index without
/// sharing state. The mixing function is the SplitMix64 finalizer.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) : key_(mix(key)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Independent stream for sub-task `index`.
  CounterRng split(std::uint64_t index) const;

  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Seed for sub-task `index` of a run seeded with `seed`; independent of the
/// order in which sub-tasks execute.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace chansim
