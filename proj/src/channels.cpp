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

#include "chansim/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace chansim {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_unit_interval(const char* who, const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << who << ": " << name << " = " << v << " is outside [0, 1]";
    throw std::invalid_argument(msg.str());
  }
}

ComplexMatrix ket_bra(std::size_t d, std::size_t r, std::size_t c, Complex value = 1.0) {
  ComplexMatrix m = ComplexMatrix::Zero(idx(d), idx(d));
  m(idx(r), idx(c)) = value;
  return m;
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

void require_unit_vector(const char* what, const Vec3& v) {
  if (std::abs(std::sqrt(dot(v, v)) - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "WignerBoost: " << what << " is not a unit vector";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, std::string label,
                           std::map<std::string, double> params)
    : dim_(0), ops_(std::move(kraus_ops)), label_(std::move(label)), params_(std::move(params)) {
  if (ops_.empty()) throw std::invalid_argument("KrausChannel: at least one Kraus operator is required");
  dim_ = static_cast<std::size_t>(ops_.front().rows());
  if (dim_ == 0) throw DimensionError("KrausChannel: empty Kraus operator");
  for (const auto& k : ops_) {
    if (static_cast<std::size_t>(k.rows()) != dim_ || static_cast<std::size_t>(k.cols()) != dim_)
      throw DimensionError("KrausChannel: Kraus operators must all be square with equal dimension");
  }
}

CptpReport validate_cptp(const KrausChannel& ch, double tol) {
  const auto d = idx(ch.dim());
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : ch.kraus_ops()) sum += k.adjoint() * k;
  CptpReport report;
  report.residual = max_abs(sum - ComplexMatrix::Identity(d, d));
  report.pass = report.residual <= tol;
  return report;
}

double unitality_residual(const KrausChannel& ch) {
  const auto d = idx(ch.dim());
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : ch.kraus_ops()) sum += k * k.adjoint();
  return max_abs(sum - ComplexMatrix::Identity(d, d));
}

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho) {
  if (static_cast<std::size_t>(rho.rows()) != ch.dim() || rho.rows() != rho.cols())
    throw DimensionError("apply_channel: state dimension does not match channel dimension");
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : ch.kraus_ops()) out += k * rho * k.adjoint();
  return out;
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply_channel(ch, rho.matrix()));
}

KrausChannel prune(const KrausChannel& ch, double tol) {
  std::vector<ComplexMatrix> kept;
  for (const auto& k : ch.kraus_ops())
    if (max_abs(k) > tol) kept.push_back(k);
  if (kept.empty()) kept.push_back(ch.kraus_ops().front());
  return KrausChannel(std::move(kept), ch.label(), ch.params());
}

KrausChannel pauli_channel(double p_i, double p_x, double p_z, double p_y) {
  for (double p : {p_i, p_x, p_z, p_y}) {
    if (!(p >= 0.0)) throw std::invalid_argument("pauli_channel: probabilities must be non-negative");
  }
  if (std::abs(p_i + p_x + p_z + p_y - 1.0) > 1e-12)
    throw std::invalid_argument("pauli_channel: probabilities must sum to 1");
  return KrausChannel({std::sqrt(p_i) * pauli_i(), std::sqrt(p_x) * pauli_x(), std::sqrt(p_z) * pauli_z(),
                       std::sqrt(p_y) * pauli_y()},
                      "pauli", {{"pI", p_i}, {"pX", p_x}, {"pZ", p_z}, {"pY", p_y}});
}

namespace {

KrausChannel relabel(KrausChannel ch, std::string label, std::map<std::string, double> params) {
  return KrausChannel(ch.kraus_ops(), std::move(label), std::move(params));
}

}  // namespace

KrausChannel bit_flip(double p) {
  require_unit_interval("bit_flip", "p", p);
  return KrausChannel({std::sqrt(1 - p) * pauli_i(), std::sqrt(p) * pauli_x()}, "bit_flip", {{"p", p}});
}

KrausChannel phase_flip(double p) {
  require_unit_interval("phase_flip", "p", p);
  return KrausChannel({std::sqrt(1 - p) * pauli_i(), std::sqrt(p) * pauli_z()}, "phase_flip", {{"p", p}});
}

KrausChannel bit_phase_flip(double p) {
  require_unit_interval("bit_phase_flip", "p", p);
  return KrausChannel({std::sqrt(1 - p) * pauli_i(), std::sqrt(p) * pauli_y()}, "bit_phase_flip", {{"p", p}});
}

KrausChannel depolarizing(double p) {
  require_unit_interval("depolarizing", "p", p);
  return relabel(pauli_channel((4 - 3 * p) / 4, p / 4, p / 4, p / 4), "depolarizing", {{"p", p}});
}

KrausChannel identity_channel(std::size_t dim) {
  if (dim == 0) throw DimensionError("identity_channel: zero dimension");
  return KrausChannel({ComplexMatrix::Identity(idx(dim), idx(dim))}, "identity");
}

KrausChannel phase_damping(double p) {
  require_unit_interval("phase_damping", "p", p);
  return KrausChannel({ket_bra(2, 0, 0) + ket_bra(2, 1, 1, std::sqrt(1 - p)), ket_bra(2, 1, 1, std::sqrt(p))},
                      "phase_damping", {{"p", p}});
}

KrausChannel gad(double p, double n) {
  require_unit_interval("gad", "p", p);
  require_unit_interval("gad", "N", n);
  const double s = std::sqrt(1 - p);
  return KrausChannel({std::sqrt(1 - n) * (ket_bra(2, 0, 0) + ket_bra(2, 1, 1, s)),
                       ket_bra(2, 0, 1, std::sqrt(p * (1 - n))),
                       std::sqrt(n) * (ket_bra(2, 0, 0, s) + ket_bra(2, 1, 1)),
                       ket_bra(2, 1, 0, std::sqrt(p * n))},
                      "gad", {{"p", p}, {"N", n}});
}

ComplexMatrix hw_shift(std::size_t d, std::size_t j) {
  if (d == 0 || j >= d) throw std::invalid_argument("hw_shift: shift index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(idx(d), idx(d));
  for (std::size_t k = 0; k < d; ++k) m(idx((j + k) % d), idx(k)) = 1.0;
  return m;
}

ComplexMatrix hw_phase(std::size_t d, std::size_t k) {
  if (d == 0 || k >= d) throw std::invalid_argument("hw_phase: phase index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(idx(d), idx(d));
  for (std::size_t l = 0; l < d; ++l)
    m(idx(l), idx(l)) = std::polar(1.0, 2 * kPi * static_cast<double>((k * l) % d) / static_cast<double>(d));
  return m;
}

KrausChannel heisenberg_weyl(std::size_t d, const Eigen::MatrixXd& probs) {
  if (d == 0 || probs.rows() != idx(d) || probs.cols() != idx(d))
    throw std::invalid_argument("heisenberg_weyl: probability table must be d x d");
  if ((probs.array() < 0.0).any() || probs.hasNaN())
    throw std::invalid_argument("heisenberg_weyl: probabilities must be non-negative");
  if (std::abs(probs.sum() - 1.0) > 1e-12) throw std::invalid_argument("heisenberg_weyl: probabilities must sum to 1");
  std::vector<ComplexMatrix> ops;
  ops.reserve(d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      ops.push_back(std::sqrt(probs(idx(j), idx(k))) * hw_shift(d, j) * hw_phase(d, k));
  return KrausChannel(std::move(ops), "heisenberg_weyl", {{"d", static_cast<double>(d)}});
}

KrausChannel hw_dephasing(std::size_t d, double p0) {
  if (d < 2) throw std::invalid_argument("hw_dephasing: d must be at least 2");
  require_unit_interval("hw_dephasing", "p0", p0);
  const double rest = (1 - p0) / static_cast<double>(d - 1);
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  for (std::size_t j = 0; j < d; ++j) ops.push_back(std::sqrt(j == 0 ? p0 : rest) * hw_phase(d, j));
  return KrausChannel(std::move(ops), "hw_dephasing", {{"d", static_cast<double>(d)}, {"p0", p0}});
}

KrausChannel qutrit_adc(double gamma) {
  require_unit_interval("qutrit_adc", "gamma", gamma);
  const double g = gamma;
  return KrausChannel({ket_bra(3, 0, 0) + ket_bra(3, 1, 1, std::sqrt(1 - g)) + ket_bra(3, 2, 2, 1 - g),
                       ket_bra(3, 0, 1, std::sqrt(g)) + ket_bra(3, 1, 2, std::sqrt(2 * g * (1 - g))),
                       ket_bra(3, 0, 2, g)},
                      "qutrit_adc", {{"gamma", gamma}});
}

ComplexMatrix WignerRotation::matrix() const {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  return c * pauli_i() + kI * s * (axis[0] * pauli_x() + axis[1] * pauli_y() + axis[2] * pauli_z());
}

WignerHalfAngle wigner_half_angle(const WignerBoost& boost, std::size_t j) {
  if (j >= boost.momentum_directions.size()) throw std::out_of_range("wigner_half_angle: momentum index out of range");
  require_unit_vector("boost direction", boost.boost_direction);
  const Vec3& p = boost.momentum_directions[j];
  require_unit_vector("momentum direction", p);

  const double w = boost.rapidity;
  const double a = boost.momentum_rapidity;
  const double ep = dot(boost.boost_direction, p);
  const double den = std::sqrt(0.5 * (1 + std::cosh(w) * std::cosh(a) + std::sinh(w) * std::sinh(a) * ep));
  const double shsh = std::sinh(w / 2) * std::sinh(a / 2);

  WignerHalfAngle out;
  out.cos_half = (std::cosh(w / 2) * std::cosh(a / 2) + shsh * ep) / den;
  const Vec3 exp_ = cross(boost.boost_direction, p);
  for (int i = 0; i < 3; ++i) out.sin_half_axis[i] = shsh * exp_[i] / den;
  return out;
}

WignerRotation wigner_rotation(const WignerBoost& boost, std::size_t j) {
  const WignerHalfAngle h = wigner_half_angle(boost, j);
  const double s = std::sqrt(dot(h.sin_half_axis, h.sin_half_axis));
  WignerRotation rot;
  rot.angle = 2 * std::atan2(s, h.cos_half);
  if (s > 0.0) rot.axis = {h.sin_half_axis[0] / s, h.sin_half_axis[1] / s, h.sin_half_axis[2] / s};
  return rot;
}

KrausChannel wigner_channel(const std::vector<WignerRotation>& rotations) {
  if (rotations.empty()) throw std::invalid_argument("wigner_channel: at least one momentum state is required");
  const double scale = 1.0 / std::sqrt(static_cast<double>(rotations.size()));
  std::vector<ComplexMatrix> ops;
  ops.reserve(rotations.size());
  for (const auto& r : rotations) ops.push_back(scale * r.matrix());
  return KrausChannel(std::move(ops), "wigner", {{"d_p", static_cast<double>(rotations.size())}});
}

KrausChannel wigner_channel(const WignerBoost& boost) {
  std::vector<WignerRotation> rotations;
  for (std::size_t j = 0; j < boost.momentum_directions.size(); ++j) rotations.push_back(wigner_rotation(boost, j));
  auto ch = wigner_channel(rotations);
  return KrausChannel(ch.kraus_ops(), "wigner",
                      {{"omega", boost.rapidity},
                       {"alpha", boost.momentum_rapidity},
                       {"d_p", static_cast<double>(rotations.size())}});
}

KrausChannel lorentz_spin_channel(double theta) {
  auto ch = wigner_channel({WignerRotation{theta, {0, 1, 0}}, WignerRotation{theta, {0, -1, 0}}});
  return KrausChannel(ch.kraus_ops(), "lorentz", {{"theta", theta}});
}

double l1_coherence(const ComplexMatrix& rho) {
  double sum = 0.0;
  for (Eigen::Index r = 0; r < rho.rows(); ++r)
    for (Eigen::Index c = 0; c < rho.cols(); ++c)
      if (r != c) sum += std::abs(rho(r, c));
  return sum;
}

double l1_coherence(const DensityMatrix& rho) { return l1_coherence(rho.matrix()); }

}  // namespace chansim
