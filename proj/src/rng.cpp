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

#include "chansim/rng.hpp"

namespace chansim {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  return mix(key_ + counter_ * kGamma);
}

double CounterRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

CounterRng CounterRng::split(std::uint64_t index) const { return CounterRng(derive_seed(key_, index)); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return CounterRng::mix(CounterRng::mix(seed) ^ CounterRng::mix(index + kGamma));
}

}  // namespace chansim
