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

#include "chansim/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace chansim {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_same_dim(const char* who, const KrausChannel& ch, std::size_t dim) {
  if (ch.dim() != dim) {
    std::ostringstream msg;
    msg << who << ": channel acts on dimension " << ch.dim() << " but the state has dimension " << dim;
    throw DimensionError(msg.str());
  }
}

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

std::size_t qubits_for_levels(std::size_t d) {
  if (d == 0) throw DimensionError("qubits_for_levels: zero dimension");
  std::size_t m = 0;
  while ((std::size_t{1} << m) < d) ++m;
  return m;
}

QubitEmbedding::QubitEmbedding(std::vector<std::size_t> factor_dims) : dims_(std::move(factor_dims)) {
  for (std::size_t d : dims_) {
    qubits_.push_back(qubits_for_levels(d));
    total_qubits_ += qubits_.back();
    dense_dim_ *= d;
  }
}

std::size_t QubitEmbedding::embedded_index(std::size_t i) const {
  std::size_t out = 0;
  std::size_t shift = 0;
  for (std::size_t f = dims_.size(); f-- > 0;) {
    out |= (i % dims_[f]) << shift;
    i /= dims_[f];
    shift += qubits_[f];
  }
  return out;
}

std::size_t QubitEmbedding::first_qubit(std::size_t f) const {
  return std::accumulate(qubits_.begin(), qubits_.begin() + static_cast<std::ptrdiff_t>(f), std::size_t{0});
}

DilatedState::DilatedState(std::size_t system_dim_, std::vector<std::size_t> ancilla_dims_, PureState amplitudes_)
    : system_dim(system_dim_), ancilla_dims(std::move(ancilla_dims_)), amplitudes(std::move(amplitudes_)) {
  if (system_dim * product(ancilla_dims) != amplitudes.dim())
    throw DimensionError("DilatedState: factor dimensions do not match amplitude count");
  embedding = QubitEmbedding(factor_dims());
}

std::vector<std::size_t> DilatedState::factor_dims() const {
  std::vector<std::size_t> dims{system_dim};
  dims.insert(dims.end(), ancilla_dims.begin(), ancilla_dims.end());
  return dims;
}

std::size_t DilatedState::ancilla_dim() const { return product(ancilla_dims); }

DensityMatrix DilatedState::reduced_system() const {
  const auto dims = factor_dims();
  const std::size_t keep[] = {0};
  return DensityMatrix(partial_trace(amplitudes.amplitudes(), dims, keep));
}

DilatedState dilate_pure(const KrausChannel& ch, const PureState& psi) {
  require_same_dim("dilate_pure", ch, psi.dim());
  const std::size_t d = ch.dim();
  const std::size_t n = ch.size();
  ComplexVector out(idx(d * n));
  for (std::size_t j = 0; j < n; ++j) {
    const ComplexVector branch = ch.op(j) * psi.amplitudes();
    for (std::size_t a = 0; a < d; ++a) out(idx(a * n + j)) = branch(idx(a));
  }
  return DilatedState(d, {n}, PureState(std::move(out)));
}

PureState embed_qudits(const DilatedState& state) {
  const QubitEmbedding& e = state.embedding;
  ComplexVector out = ComplexVector::Zero(idx(std::size_t{1} << e.total_qubits()));
  const ComplexVector& amps = state.amplitudes.amplitudes();
  for (std::size_t i = 0; i < e.dense_dim(); ++i) out(idx(e.embedded_index(i))) = amps(idx(i));
  return PureState(std::move(out));
}

ComplexVector unembed(const QubitEmbedding& embedding, const ComplexVector& qubit_amplitudes, double* leaked_weight) {
  if (static_cast<std::size_t>(qubit_amplitudes.size()) != (std::size_t{1} << embedding.total_qubits()))
    throw DimensionError("unembed: amplitude count does not match the embedding");
  ComplexVector out(idx(embedding.dense_dim()));
  double kept = 0.0;
  for (std::size_t i = 0; i < embedding.dense_dim(); ++i) {
    out(idx(i)) = qubit_amplitudes(idx(embedding.embedded_index(i)));
    kept += std::norm(out(idx(i)));
  }
  if (leaked_weight) *leaked_weight = std::max(0.0, qubit_amplitudes.squaredNorm() - kept);
  return out;
}

Postselection postselect(const DilatedState& state, std::size_t j, double zero_tol) {
  const std::size_t na = state.ancilla_dim();
  if (j >= na) throw std::out_of_range("postselect: ancilla outcome out of range");
  ComplexVector branch(idx(state.system_dim));
  for (std::size_t a = 0; a < state.system_dim; ++a) branch(idx(a)) = state.amplitudes[a * na + j];
  const double prob = branch.squaredNorm();
  if (prob <= zero_tol) {
    std::ostringstream msg;
    msg << "postselect: ancilla outcome " << j << " has zero probability";
    throw UnpostselectableError(msg.str());
  }
  return {prob, PureState(branch / std::sqrt(prob))};
}

BlochParameters qubit_bloch_parameters(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("qubit_bloch_parameters: state is not a qubit");
  const double z = (rho(0, 0) - rho(1, 1)).real();
  const Complex off = 2.0 * rho(1, 0);
  BlochParameters b;
  b.r = std::sqrt(z * z + std::norm(off));
  if (b.r < 1e-15) return b;
  b.theta = std::acos(std::clamp(z / b.r, -1.0, 1.0));
  if (std::sin(b.theta) >= 1e-12) {
    b.phi = std::arg(off);
    if (b.phi < 0) b.phi += 2 * kPi;
  }
  return b;
}

SpectralInput spectral_input(const DensityMatrix& rho, double rank_tol) {
  const EigenDecomposition eig = herm_eig(rho.matrix());
  SpectralInput out;
  for (Eigen::Index j = 0; j < eig.values.size(); ++j) {
    if (eig.values(j) < rank_tol) continue;
    out.eigenvalues.push_back(eig.values(j));
    out.eigenvectors.emplace_back(eig.vectors.col(j));
  }
  const double total = std::accumulate(out.eigenvalues.begin(), out.eigenvalues.end(), 0.0);
  for (double& v : out.eigenvalues) v /= total;
  if (rho.dim() == 2) out.bloch = qubit_bloch_parameters(rho);
  return out;
}

SpectralInput spectral_input_from_bloch(double r, double theta, double phi) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("spectral_input_from_bloch: r must lie in [0, 1]");
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const Complex e = std::polar(1.0, phi);
  ComplexVector v0(2), v1(2);
  v0 << c, e * s;
  v1 << s, -e * c;
  SpectralInput out;
  out.eigenvalues = {(1 + r) / 2, (1 - r) / 2};
  out.eigenvectors = {PureState(v0), PureState(v1)};
  out.bloch = BlochParameters{r, theta, phi};
  return out;
}

DilatedState mixed_method_purify_evolved(const KrausChannel& ch, const DensityMatrix& rho) {
  require_same_dim("mixed_method_purify_evolved", ch, rho.dim());
  const std::size_t d = ch.dim();
  const std::size_t n = ch.size();
  const std::size_t dab = d * n;

  // Isometry rows are indexed (a, j) -> a * n + j.
  ComplexMatrix v(idx(dab), idx(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t j = 0; j < n; ++j) v.row(idx(a * n + j)) = ch.op(j).row(idx(a));
  const ComplexMatrix evolved = v * rho.matrix() * v.adjoint();
  const EigenDecomposition eig = herm_eig(evolved);

  ComplexVector out = ComplexVector::Zero(idx(dab * dab));
  for (std::size_t c = 0; c < dab; ++c) {
    const double lambda = std::max(0.0, eig.values(idx(c)));
    if (lambda == 0.0) continue;
    const ComplexVector col = std::sqrt(lambda) * eig.vectors.col(idx(c));
    for (std::size_t ab = 0; ab < dab; ++ab) out(idx(ab * dab + c)) = col(idx(ab));
  }
  return DilatedState(d, {n, dab}, PureState::normalized(std::move(out)));
}

std::vector<ConvexBranch> convex_branches(const KrausChannel& ch, const DensityMatrix& rho) {
  require_same_dim("mixed_method_convex", ch, rho.dim());
  const SpectralInput spectrum = spectral_input(rho);
  std::vector<ConvexBranch> out;
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k)
    out.push_back({spectrum.eigenvalues[k], dilate_pure(ch, spectrum.eigenvectors[k])});
  return out;
}

DensityMatrix mixed_method_convex(const KrausChannel& ch, const DensityMatrix& rho) {
  const auto d = idx(ch.dim());
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& branch : convex_branches(ch, rho)) sum += branch.weight * branch.state.reduced_system().matrix();
  return DensityMatrix(std::move(sum));
}

DilatedState mixed_method_double_purification(const KrausChannel& ch, const SpectralInput& spectrum) {
  if (spectrum.eigenvectors.empty() || spectrum.eigenvalues.size() != spectrum.eigenvectors.size())
    throw std::invalid_argument("mixed_method_double_purification: malformed spectral input");
  const std::size_t d = ch.dim();
  const std::size_t rank = spectrum.eigenvalues.size();
  const std::size_t n = ch.size();
  for (const auto& v : spectrum.eigenvectors) require_same_dim("mixed_method_double_purification", ch, v.dim());

  ComplexVector out = ComplexVector::Zero(idx(d * rank * n));
  for (std::size_t l = 0; l < rank; ++l) {
    const double w = std::sqrt(std::max(0.0, spectrum.eigenvalues[l]));
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexVector branch = w * (ch.op(j) * spectrum.eigenvectors[l].amplitudes());
      for (std::size_t a = 0; a < d; ++a) out(idx((a * rank + l) * n + j)) = branch(idx(a));
    }
  }
  return DilatedState(d, {rank, n}, PureState(std::move(out)));
}

DilatedState mixed_method_double_purification(const KrausChannel& ch, const DensityMatrix& rho) {
  require_same_dim("mixed_method_double_purification", ch, rho.dim());
  return mixed_method_double_purification(ch, spectral_input(rho));
}

}  // namespace chansim
