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

#include "chansim/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chansim {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::vector<std::string> words(std::size_t n, const std::string& alphabet) {
  std::vector<std::string> out{""};
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : alphabet) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

std::size_t qubits_of(const ComplexMatrix& rho) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < static_cast<std::size_t>(rho.rows())) ++n;
  if ((std::size_t{1} << n) != static_cast<std::size_t>(rho.rows()) || rho.rows() != rho.cols())
    throw DimensionError("tomography: matrix is not a qubit-register operator");
  return n;
}

}  // namespace

std::vector<Gate> basis_change(char pauli, std::size_t qubit) {
  switch (pauli) {
    case 'X': return {ry_gate(qubit, -kPi / 2)};
    case 'Y': return {rz_gate(qubit, -kPi / 2), ry_gate(qubit, -kPi / 2)};
    case 'Z': return {};
  }
  throw std::invalid_argument(std::string("basis_change: unknown Pauli '") + pauli + "'");
}

TomographySettings settings_for(std::span<const std::size_t> system_qubits) {
  if (system_qubits.empty()) throw std::invalid_argument("settings_for: no system qubits");
  TomographySettings s;
  s.system_qubits.assign(system_qubits.begin(), system_qubits.end());
  s.labels = words(system_qubits.size(), "XYZ");
  for (const auto& label : s.labels) {
    std::vector<Gate> gates;
    for (std::size_t i = 0; i < label.size(); ++i) {
      auto g = basis_change(label[i], system_qubits[i]);
      gates.insert(gates.end(), g.begin(), g.end());
    }
    s.rotations.push_back(std::move(gates));
  }
  return s;
}

SettingData setting_data(const ShotCounts& counts) { return {frequencies(counts), counts.shots}; }

SettingData setting_data(const std::map<std::string, double>& probabilities, std::uint64_t shots) {
  return {probabilities, shots};
}

ExpectationSet expectations(const TomographySettings& settings, const std::vector<SettingData>& data) {
  if (data.size() != settings.size())
    throw std::invalid_argument("expectations: measurement data does not cover every setting");
  const std::size_t n = settings.system_qubits.size();
  for (std::size_t k = 0; k < data.size(); ++k)
    if (data[k].probabilities.empty())
      throw std::invalid_argument("expectations: missing data for setting " + settings.labels[k]);

  ExpectationSet out;
  for (const auto& word : words(n, "IXYZ")) {
    double sum = 0.0;
    std::size_t used = 0;
    std::uint64_t shots = 0;
    for (std::size_t k = 0; k < settings.size(); ++k) {
      const std::string& label = settings.labels[k];
      bool compatible = true;
      for (std::size_t i = 0; i < n && compatible; ++i) compatible = word[i] == 'I' || word[i] == label[i];
      if (!compatible) continue;
      double value = 0.0;
      for (const auto& [bits, prob] : data[k].probabilities) {
        int parity = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t q = settings.system_qubits[i];
          if (q >= bits.size()) throw std::invalid_argument("expectations: system qubit outside measured register");
          if (word[i] != 'I' && bits[q] == '1') parity ^= 1;
        }
        value += parity ? -prob : prob;
      }
      sum += value;
      shots += data[k].shots;
      ++used;
    }
    PauliExpectation e;
    e.value = std::clamp(sum / static_cast<double>(used), -1.0, 1.0);
    if (shots > 0 && word.find_first_not_of('I') != std::string::npos)
      e.std_error = std::sqrt(std::max(0.0, 1.0 - e.value * e.value) / static_cast<double>(shots));
    out[word] = e;
  }
  return out;
}

ComplexMatrix pauli_word_matrix(const std::string& word) {
  ComplexMatrix m = ComplexMatrix::Identity(1, 1);
  for (char c : word) {
    switch (c) {
      case 'I': m = kron(m, pauli_i()); break;
      case 'X': m = kron(m, pauli_x()); break;
      case 'Y': m = kron(m, pauli_y()); break;
      case 'Z': m = kron(m, pauli_z()); break;
      default: throw std::invalid_argument(std::string("pauli_word_matrix: unknown letter '") + c + "'");
    }
  }
  return m;
}

ExpectationSet exact_expectations(const ComplexMatrix& rho) {
  const std::size_t n = qubits_of(rho);
  ExpectationSet out;
  for (const auto& word : words(n, "IXYZ")) out[word] = {(rho * pauli_word_matrix(word)).trace().real(), 0.0};
  return out;
}

DensityMatrix project_to_physical(const ComplexMatrix& raw) {
  const ComplexMatrix h = (raw + raw.adjoint()) / 2.0;
  const EigenDecomposition eig = herm_eig(h);
  double clipped = 0.0, positive = 0.0;
  for (Eigen::Index j = 0; j < eig.values.size(); ++j) {
    if (eig.values(j) < 0.0) clipped -= eig.values(j);
    else positive += eig.values(j);
  }
  if (clipped == 0.0) return DensityMatrix(h / h.trace().real());

  RealVector values(eig.values.size());
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    const double v = eig.values(j);
    values(j) = v < 0.0 ? 0.0 : v - clipped * v / positive;
  }
  values /= values.sum();
  return DensityMatrix(eig.vectors * values.cast<Complex>().asDiagonal() * eig.vectors.adjoint());
}

TomographyResult reconstruct(const ExpectationSet& expectations, std::uint64_t shots_per_setting) {
  if (expectations.empty()) throw std::invalid_argument("reconstruct: no expectations");
  const std::size_t n = expectations.begin()->first.size();
  const auto dim = idx(std::size_t{1} << n);
  if (expectations.size() != (std::size_t{1} << (2 * n)))
    throw std::invalid_argument("reconstruct: incomplete Pauli expectation set");
  ComplexMatrix raw = ComplexMatrix::Zero(dim, dim);
  for (const auto& [word, e] : expectations) {
    const double value = word.find_first_not_of('I') == std::string::npos ? 1.0 : e.value;
    raw += value * pauli_word_matrix(word);
  }
  raw /= static_cast<double>(dim);
  DensityMatrix projected = project_to_physical(raw);
  return {std::move(raw), std::move(projected), expectations, shots_per_setting};
}

QuditExtraction extract_qudit(const DensityMatrix& embedded, std::size_t levels) {
  if (levels == 0 || levels > embedded.dim()) throw DimensionError("extract_qudit: level count out of range");
  const auto l = idx(levels);
  const ComplexMatrix block = embedded.matrix().topLeftCorner(l, l);
  const double kept = block.trace().real();
  if (!(kept > 0.0)) throw StateError("extract_qudit: no weight on the qudit levels");
  return {DensityMatrix(block / kept), std::max(0.0, 1.0 - kept)};
}

}  // namespace chansim
