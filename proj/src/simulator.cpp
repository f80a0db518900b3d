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

#include "chansim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chansim/rng.hpp"
#include "json.hpp"

namespace chansim {

namespace {

void apply_gate(ComplexVector& state, std::size_t n, const Gate& g) {
  const ComplexMatrix m = g.matrix();
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  const std::size_t tbit = std::size_t{1} << (n - 1 - g.target);
  std::size_t mask = 0, value = 0;
  for (const auto& c : g.controls) {
    const std::size_t bit = std::size_t{1} << (n - 1 - c.qubit);
    mask |= bit;
    if (c.active) value |= bit;
  }
  const auto dim = static_cast<std::size_t>(state.size());
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & tbit) || (i & mask) != value) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | tbit);
    const Complex a0 = state(i0), a1 = state(i1);
    state(i0) = m00 * a0 + m01 * a1;
    state(i1) = m10 * a0 + m11 * a1;
  }
}

}  // namespace

ComplexVector run_from(const Circuit& c, ComplexVector state) {
  const std::size_t n = c.qubit_count();
  if (n > kMaxSimulatorQubits) throw std::invalid_argument("run: too many qubits for the statevector simulator");
  if (static_cast<std::size_t>(state.size()) != (std::size_t{1} << n))
    throw DimensionError("run: initial state length does not match circuit width");
  for (const Gate& g : c.gates()) {
    if (g.target >= n) throw std::out_of_range("run: gate target out of range");
    for (const auto& ctl : g.controls)
      if (ctl.qubit >= n) throw std::out_of_range("run: gate control out of range");
    apply_gate(state, n, g);
  }
  if (c.global_phase() != 0.0) state *= std::polar(1.0, c.global_phase());
  return state;
}

PureState run(const Circuit& c) {
  const std::size_t n = c.qubit_count();
  if (n > kMaxSimulatorQubits) throw std::invalid_argument("run: too many qubits for the statevector simulator");
  ComplexVector state = ComplexVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
  state(0) = 1.0;
  return PureState(run_from(c, std::move(state)));
}

ComplexMatrix unitary(const Circuit& c) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.qubit_count());
  ComplexMatrix u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    ComplexVector e = ComplexVector::Zero(dim);
    e(j) = 1.0;
    u.col(j) = run_from(c, std::move(e));
  }
  return u;
}

std::string bitstring(std::size_t index, std::size_t qubit_count) {
  std::string s(qubit_count, '0');
  for (std::size_t q = 0; q < qubit_count; ++q)
    if ((index >> (qubit_count - 1 - q)) & 1U) s[q] = '1';
  return s;
}

namespace {

std::size_t parse_bitstring(const std::string& s) {
  std::size_t index = 0;
  for (char ch : s) index = (index << 1) | (ch == '1' ? 1U : 0U);
  return index;
}

}  // namespace

void ShotCounts::validate() const {
  std::uint64_t total = 0;
  for (const auto& [key, count] : histogram) {
    if (key.size() != qubit_count || key.find_first_not_of("01") != std::string::npos)
      throw std::invalid_argument("ShotCounts: malformed bitstring '" + key + "'");
    total += count;
  }
  if (total != shots) throw std::invalid_argument("ShotCounts: counts do not sum to the shot total");
}

std::string ShotCounts::to_json() const {
  nlohmann::ordered_json doc;
  doc["shots"] = shots;
  doc["counts"] = nlohmann::ordered_json::object();
  for (const auto& [key, count] : histogram) doc["counts"][key] = count;
  return doc.dump();
}

ShotCounts ShotCounts::from_json(const std::string& text) {
  ShotCounts out;
  try {
    const auto doc = nlohmann::json::parse(text);
    out.shots = doc.at("shots").get<std::uint64_t>();
    for (const auto& [key, value] : doc.at("counts").items()) {
      out.qubit_count = key.size();
      out.histogram[key] = value.get<std::uint64_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("ShotCounts: ") + e.what());
  }
  out.validate();
  return out;
}

ShotCounts sample(const PureState& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample: shots must be positive");
  std::size_t n = 0;
  while ((std::size_t{1} << n) < state.dim()) ++n;
  if ((std::size_t{1} << n) != state.dim()) throw DimensionError("sample: state is not a qubit register");

  std::vector<double> cumulative(state.dim());
  double acc = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) cumulative[i] = (acc += std::norm(state[i]));
  for (double& v : cumulative) v /= acc;

  CounterRng rng(seed);
  std::vector<std::uint64_t> tally(state.dim(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    ++tally[static_cast<std::size_t>(it - cumulative.begin())];
  }

  ShotCounts out;
  out.qubit_count = n;
  out.shots = shots;
  for (std::size_t i = 0; i < tally.size(); ++i)
    if (tally[i]) out.histogram[bitstring(i, n)] = tally[i];
  return out;
}

ReadoutModel::ReadoutModel(std::vector<ReadoutError> per_qubit) : errors_(std::move(per_qubit)) {
  for (const auto& e : errors_)
    if (!(e.e0 >= 0.0 && e.e0 <= 0.5 && e.e1 >= 0.0 && e.e1 <= 0.5))
      throw std::invalid_argument("ReadoutModel: flip probabilities must lie in [0, 0.5]");
}

ReadoutModel ReadoutModel::uniform(std::size_t qubits, double e0, double e1) {
  return ReadoutModel(std::vector<ReadoutError>(qubits, ReadoutError{e0, e1}));
}

ShotCounts apply_readout_noise(const ShotCounts& counts, const ReadoutModel& model, std::uint64_t seed) {
  if (model.qubit_count() != counts.qubit_count)
    throw DimensionError("apply_readout_noise: model width does not match the counts");
  CounterRng rng(seed);
  ShotCounts out;
  out.qubit_count = counts.qubit_count;
  out.shots = counts.shots;
  for (const auto& [key, count] : counts.histogram) {
    for (std::uint64_t s = 0; s < count; ++s) {
      std::string read = key;
      for (std::size_t q = 0; q < read.size(); ++q) {
        const double flip = read[q] == '0' ? model[q].e0 : model[q].e1;
        if (rng.uniform() < flip) read[q] = read[q] == '0' ? '1' : '0';
      }
      ++out.histogram[read];
    }
  }
  return out;
}

std::map<std::string, double> frequencies(const ShotCounts& counts) {
  std::map<std::string, double> out;
  for (const auto& [key, count] : counts.histogram)
    out[key] = static_cast<double>(count) / static_cast<double>(counts.shots);
  return out;
}

std::map<std::string, double> mitigate(const ShotCounts& counts, const ReadoutModel& model) {
  const std::size_t n = counts.qubit_count;
  if (model.qubit_count() != n) throw DimensionError("mitigate: model width does not match the counts");

  std::vector<double> p(std::size_t{1} << n, 0.0);
  for (const auto& [key, count] : counts.histogram)
    p[parse_bitstring(key)] = static_cast<double>(count) / static_cast<double>(counts.shots);

  for (std::size_t q = 0; q < n; ++q) {
    const double e0 = model[q].e0, e1 = model[q].e1;
    const double det = 1.0 - e0 - e1;
    if (std::abs(det) < 1e-12) throw std::domain_error("mitigate: confusion matrix is singular");
    // Inverse of [[1 - e0, e1], [e0, 1 - e1]] (rows: read, columns: true).
    const double a = (1 - e1) / det, b = -e1 / det, c = -e0 / det, d = (1 - e0) / det;
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i & bit) continue;
      const double r0 = p[i], r1 = p[i | bit];
      p[i] = a * r0 + b * r1;
      p[i | bit] = c * r0 + d * r1;
    }
  }

  double total = 0.0;
  for (double& v : p) total += (v = std::max(0.0, v));
  std::map<std::string, double> out;
  if (total <= 0.0) return out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) out[bitstring(i, n)] = p[i] / total;
  return out;
}

}  // namespace chansim
