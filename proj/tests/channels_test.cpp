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
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

#include "chansim/channel_io.hpp"
#include "test_util.hpp"

using namespace chansim;
using chansim::testing::evolve;
using chansim::testing::Gen;
using chansim::testing::projector;

namespace {

const DensityMatrix kPlus = DensityMatrix::from_pure(PureState::from_bloch(kPi / 2, 0));

DensityMatrix uniform_qutrit() {
  return DensityMatrix(ComplexMatrix::Constant(3, 3, 1.0 / 3));
}

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

bool acts_as_identity(const KrausChannel& ch, std::uint64_t seed) {
  Gen gen(seed);
  for (int i = 0; i < 5; ++i) {
    DensityMatrix rho = gen.density(ch.dim());
    if (max_diff(apply_channel(ch, rho).matrix(), rho.matrix()) > 1e-12) return false;
  }
  return true;
}

Vec3 random_unit(Gen& gen) {
  Vec3 v{gen.normal(), gen.normal(), gen.normal()};
  double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace

TEST(channels, kraus_channel_shape_checks) {
  EXPECT_THROW(KrausChannel({}), std::invalid_argument);
  EXPECT_THROW(KrausChannel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)}), DimensionError);
  EXPECT_THROW(KrausChannel({ComplexMatrix::Identity(2, 3)}), DimensionError);
}

TEST(channels, validate_cptp_examples) {
  EXPECT_TRUE(validate_cptp(phase_damping(0.3)).pass);
  EXPECT_TRUE(validate_cptp(gad(0.7, 0.4)).pass);
  CptpReport broken = validate_cptp(KrausChannel({std::sqrt(0.5) * ComplexMatrix::Identity(2, 2)}));
  EXPECT_FALSE(broken.pass);
  EXPECT_NEAR(broken.residual, 0.5, 1e-15);
}

TEST(channels, gad_completeness_symbolic) {
  // K0^dag K0 + ... + K3^dag K3 written out entry by entry.
  for (double p : {0.0, 0.3, 0.7, 1.0}) {
    for (double n : {0.0, 0.4, 1.0}) {
      double d00 = (1 - n) + n * (1 - p) + p * n;
      double d11 = (1 - n) * (1 - p) + p * (1 - n) + n;
      EXPECT_NEAR(d00, 1.0, 1e-15);
      EXPECT_NEAR(d11, 1.0, 1e-15);
      EXPECT_LE(validate_cptp(gad(p, n)).residual, 1e-15);
    }
  }
}

TEST(channels, apply_channel_examples) {
  DensityMatrix zero = DensityMatrix::from_pure(PureState::basis(2, 0));
  DensityMatrix one = DensityMatrix::from_pure(PureState::basis(2, 1));
  EXPECT_LT(max_diff(apply_channel(bit_flip(1), zero).matrix(), one.matrix()), 1e-15);
  Gen gen(21);
  for (int i = 0; i < 5; ++i) {
    EXPECT_LT(max_diff(apply_channel(depolarizing(1), gen.density(2)).matrix(),
                       ComplexMatrix::Identity(2, 2) / 2.0),
              1e-15);
  }
  ComplexMatrix pd = apply_channel(phase_damping(0.5), kPlus).matrix();
  EXPECT_NEAR(std::abs(pd(0, 1)), std::sqrt(0.5) / 2, 1e-15);
  EXPECT_THROW(apply_channel(bit_flip(0.1), uniform_qutrit()), DimensionError);
}

TEST(channels, pauli_channel_special_cases) {
  EXPECT_TRUE(acts_as_identity(pauli_channel(1, 0, 0, 0), 22));
  Gen gen(23);
  for (double p : {0.0, 0.25, 0.6, 1.0}) {
    DensityMatrix rho = gen.density(2);
    EXPECT_LT(max_diff(apply_channel(pauli_channel(1 - p, 0, 0, p), rho).matrix(),
                       apply_channel(bit_phase_flip(p), rho).matrix()),
              1e-15);
    EXPECT_LT(max_diff(apply_channel(pauli_channel((4 - 3 * p) / 4, p / 4, p / 4, p / 4), rho).matrix(),
                       apply_channel(depolarizing(p), rho).matrix()),
              1e-15);
  }
  EXPECT_THROW(pauli_channel(0.5, 0.5, 0.5, 0), std::invalid_argument);
  EXPECT_THROW(pauli_channel(1.5, -0.5, 0, 0), std::invalid_argument);
}

TEST(channels, pauli_family) {
  EXPECT_TRUE(acts_as_identity(bit_flip(0), 24));
  auto bpf = bit_phase_flip(0.3);
  ASSERT_EQ(bpf.size(), 2u);
  EXPECT_LT(max_diff(bpf.op(0), std::sqrt(0.7) * pauli_i()), 1e-15);
  EXPECT_LT(max_diff(bpf.op(1), std::sqrt(0.3) * pauli_y()), 1e-15);
  auto flip = bit_flip(0);
  ASSERT_EQ(flip.size(), 2u);
  EXPECT_LT(max_diff(flip.op(1), ComplexMatrix::Zero(2, 2)), 1e-15);  // zero operators are kept
  EXPECT_NEAR(l1_coherence(apply_channel(depolarizing(0.8), kPlus)), 0.2, 1e-14);
  EXPECT_THROW(bit_flip(1.2), std::invalid_argument);
  EXPECT_THROW(depolarizing(-0.1), std::invalid_argument);
}

TEST(channels, bit_phase_flip_coherence_curve) {
  for (int i = 0; i <= 10; ++i) {
    double p = i / 10.0;
    EXPECT_NEAR(l1_coherence(apply_channel(pauli_channel(1 - p, 0, 0, p), kPlus)), std::abs(1 - 2 * p), 1e-10);
  }
}

TEST(channels, prune_drops_zero_operators) {
  auto pruned = prune(pauli_channel(0.7, 0, 0, 0.3));
  EXPECT_EQ(pruned.size(), 2u);
  EXPECT_EQ(prune(bit_flip(0)).size(), 1u);
}

TEST(channels, phase_damping_examples) {
  auto pd0 = phase_damping(0);
  ASSERT_EQ(pd0.size(), 2u);
  EXPECT_LT(pd0.op(1).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_TRUE(acts_as_identity(pd0, 25));
  Gen gen(26);
  DensityMatrix rho = gen.density(2);
  ComplexMatrix out = apply_channel(phase_damping(1), rho).matrix();
  EXPECT_LT(std::abs(out(0, 1)), 1e-15);
  EXPECT_NEAR(out(0, 0).real(), rho(0, 0).real(), 1e-15);
  EXPECT_NEAR(out(1, 1).real(), rho(1, 1).real(), 1e-15);
  EXPECT_NEAR(l1_coherence(apply_channel(phase_damping(0.5), kPlus)), std::sqrt(0.5), 1e-15);
}

TEST(channels, gad_examples) {
  for (double n : {0.0, 0.3, 1.0}) {
    EXPECT_TRUE(acts_as_identity(gad(0, n), 27));
  }
  DensityMatrix one = DensityMatrix::from_pure(PureState::basis(2, 1));
  ComplexMatrix decayed = apply_channel(gad(1, 0), one).matrix();
  EXPECT_NEAR(decayed(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(l1_coherence(apply_channel(gad(0.5, 0.5), kPlus)), std::sqrt(0.5), 1e-15);
}

TEST(channels, gad_coherence_is_independent_of_temperature) {
  for (int i = 0; i <= 20; ++i) {
    double p = i / 20.0;
    for (double n : {0.0, 0.25, 0.5, 1.0}) {
      EXPECT_NEAR(l1_coherence(apply_channel(gad(p, n), kPlus)), std::sqrt(1 - p), 1e-10);
    }
  }
}

TEST(channels, hw_operators) {
  for (std::size_t d : {2u, 3u, 5u}) {
    EXPECT_EQ(hw_shift(d, 0), ComplexMatrix::Identity(d, d));
    EXPECT_LT(max_diff(hw_phase(d, 0), ComplexMatrix::Identity(d, d)), 1e-15);
  }
  EXPECT_LT(max_diff(hw_shift(2, 1), pauli_x()), 1e-15);
  EXPECT_LT(max_diff(hw_phase(2, 1), pauli_z()), 1e-15);
  EXPECT_LT(max_diff(hw_phase(3, 1) * hw_phase(3, 2), ComplexMatrix::Identity(3, 3)), 1e-15);
  // X(1)|0> = |1>.
  EXPECT_EQ(hw_shift(3, 1)(1, 0), Complex(1.0));
  EXPECT_THROW(hw_shift(3, 3), std::invalid_argument);
  EXPECT_THROW(hw_phase(3, 5), std::invalid_argument);
}

TEST(channels, heisenberg_weyl_twirl) {
  Eigen::MatrixXd uniform = Eigen::MatrixXd::Constant(3, 3, 1.0 / 9);
  auto twirl = heisenberg_weyl(3, uniform);
  EXPECT_EQ(twirl.size(), 9u);
  Gen gen(28);
  for (int i = 0; i < 50; ++i) {
    EXPECT_LT(max_diff(apply_channel(twirl, gen.density(3)).matrix(), ComplexMatrix::Identity(3, 3) / 3.0), 1e-10);
  }
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(3, 3);
  delta(0, 0) = 1;
  EXPECT_TRUE(acts_as_identity(heisenberg_weyl(3, delta), 29));
  EXPECT_THROW(heisenberg_weyl(3, Eigen::MatrixXd::Constant(3, 3, 0.1)), std::invalid_argument);
}

TEST(channels, heisenberg_weyl_qubit_matches_pauli) {
  // p(j,k) multiplies X^j Z^k; X Z = -i Y so (1,1) is the Y weight.
  Gen gen(30);
  for (int i = 0; i < 10; ++i) {
    double w[4] = {gen.uniform(), gen.uniform(), gen.uniform(), gen.uniform()};
    double total = w[0] + w[1] + w[2] + w[3];
    Eigen::MatrixXd probs(2, 2);
    probs << w[0] / total, w[2] / total, w[1] / total, w[3] / total;
    auto hw = heisenberg_weyl(2, probs);
    auto pauli = pauli_channel(w[0] / total, w[1] / total, w[2] / total, w[3] / total);
    DensityMatrix rho = gen.density(2);
    EXPECT_LT(max_diff(apply_channel(hw, rho).matrix(), apply_channel(pauli, rho).matrix()), 1e-12);
  }
}

TEST(channels, hw_dephasing_examples) {
  EXPECT_TRUE(acts_as_identity(hw_dephasing(3, 1), 31));
  EXPECT_NEAR(l1_coherence(apply_channel(hw_dephasing(3, 1.0 / 3), uniform_qutrit())), 0.0, 1e-15);
  EXPECT_NEAR(l1_coherence(apply_channel(hw_dephasing(3, 1), uniform_qutrit())), 2.0, 1e-14);
}

TEST(channels, hw_dephasing_half_weight_on_uniform_qutrit) {
  // p = (1/2, 1/4, 1/4): every off-diagonal 1/3 is scaled by
  // |1/2 + w/4 + w^2/4| = 1/4, so C = 6 * (1/3) * (1/4).
  double c = l1_coherence(apply_channel(hw_dephasing(3, 0.5), uniform_qutrit()));
  EXPECT_NEAR(c, 0.5, 1e-14);
  // sqrt(sum (p_i - p_j)^2) alone would give 0.35355; the modulus factor is
  // that quantity divided by sqrt(2).
  EXPECT_GT(std::abs(c - std::sqrt(0.125)), 0.1);
}

TEST(channels, hw_dephasing_modulus_factor) {
  Gen gen(32);
  for (int i = 0; i <= 20; ++i) {
    double p0 = i / 20.0;
    double p1 = (1 - p0) / 2;
    double p2 = p1;
    double factor = std::sqrt((p0 - p1) * (p0 - p1) + (p0 - p2) * (p0 - p2) + (p1 - p2) * (p1 - p2)) / std::sqrt(2.0);
    DensityMatrix rho = gen.density(3);
    ComplexMatrix out = apply_channel(hw_dephasing(3, p0), rho).matrix();
    for (int r = 0; r < 3; ++r) {
      EXPECT_NEAR(out(r, r).real(), rho(r, r).real(), 1e-15);  // populations untouched
      for (int c = 0; c < 3; ++c) {
        if (r != c) {
          EXPECT_NEAR(std::abs(out(r, c)), factor * std::abs(rho(r, c)), 1e-10);
        }
      }
    }
  }
}

TEST(channels, hw_dephasing_preserves_populations) {
  Gen gen(33);
  for (int i = 0; i < 20; ++i) {
    std::size_t d = 2 + gen.index(4);
    DensityMatrix rho = gen.density(d);
    ComplexMatrix out = apply_channel(hw_dephasing(d, gen.uniform()), rho).matrix();
    for (std::size_t k = 0; k < d; ++k) {
      EXPECT_NEAR(out(k, k).real(), rho(k, k).real(), 1e-14);
    }
  }
}

TEST(channels, qutrit_adc_examples) {
  EXPECT_TRUE(acts_as_identity(qutrit_adc(0), 34));
  EXPECT_NEAR(l1_coherence(apply_channel(qutrit_adc(0), uniform_qutrit())), 2.0, 1e-14);
  DensityMatrix two = DensityMatrix::from_pure(PureState::basis(3, 2));
  EXPECT_NEAR(apply_channel(qutrit_adc(1), two)(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(l1_coherence(apply_channel(qutrit_adc(0.5), uniform_qutrit())), 1.3738, 5e-5);
}

TEST(channels, qutrit_adc_closed_form) {
  // rho01 = sqrt(1-g)(1 + sqrt2 g)/3, rho02 = (1-g)/3, rho12 = (1-g)^{3/2}/3.
  auto oracle = [](double g) {
    return 2.0 / 3 * (std::pow(1 - g, 1.5) + (1 - g)) + 2.0 / 3 * (std::sqrt(2.0) * g + 1) * std::sqrt(1 - g);
  };
  auto four_thirds_form = [](double g) {
    return 2.0 / 3 * (std::pow(1 - g, 1.5) + (1 - g)) + 4.0 / 3 * (std::sqrt(2.0) * g + 1) * std::sqrt(1 - g);
  };
  for (int i = 0; i <= 20; ++i) {
    double g = i / 20.0;
    double c = l1_coherence(apply_channel(qutrit_adc(g), uniform_qutrit()));
    EXPECT_NEAR(c, oracle(g), 1e-10);
    if (g < 1) {
      EXPECT_GT(std::abs(four_thirds_form(g) - c), 1e-3);
    }
  }
  EXPECT_NEAR(four_thirds_form(0), 8.0 / 3, 1e-15);
}

TEST(channels, wigner_rotation_trivial_cases) {
  WignerBoost parallel{1.3, {0, 0, 1}, 0.7, {{0, 0, 1}, {0, 0, -1}}};
  EXPECT_NEAR(wigner_rotation(parallel, 0).angle, 0.0, 1e-15);
  EXPECT_NEAR(wigner_rotation(parallel, 1).angle, 0.0, 1e-15);
  WignerBoost still{0.0, {0, 0, 1}, 0.9, {{1, 0, 0}}};
  auto rot = wigner_rotation(still, 0);
  EXPECT_NEAR(rot.angle, 0.0, 1e-15);
  EXPECT_LT(max_diff(rot.matrix(), ComplexMatrix::Identity(2, 2)), 1e-15);
  EXPECT_THROW(wigner_rotation(still, 1), std::out_of_range);
  WignerBoost not_unit{1, {0, 0, 2}, 1, {{1, 0, 0}}};
  EXPECT_THROW(wigner_rotation(not_unit, 0), std::invalid_argument);
}

TEST(channels, wigner_rotation_perpendicular_unit_rapidities) {
  WignerBoost b{1.0, {0, 0, 1}, 1.0, {{1, 0, 0}}};
  long double w = 1.0L;
  long double a = 1.0L;
  long double den = std::sqrt(0.5L * (1 + std::cosh(w) * std::cosh(a)));
  long double c = std::cosh(w / 2) * std::cosh(a / 2) / den;
  long double s = std::sinh(w / 2) * std::sinh(a / 2) / den;
  double expected = static_cast<double>(2 * std::atan2(s, c));
  auto rot = wigner_rotation(b, 0);
  EXPECT_NEAR(rot.angle, expected, 1e-14);
  // z x x = +y.
  EXPECT_NEAR(rot.axis[1], 1.0, 1e-15);
}

TEST(channels, wigner_half_angle_normalization) {
  Gen gen(35);
  for (int i = 0; i < 1000; ++i) {
    WignerBoost b{gen.uniform(0, 4), random_unit(gen), gen.uniform(0, 4), {random_unit(gen)}};
    auto h = wigner_half_angle(b, 0);
    double norm = h.cos_half * h.cos_half + h.sin_half_axis[0] * h.sin_half_axis[0] +
                  h.sin_half_axis[1] * h.sin_half_axis[1] + h.sin_half_axis[2] * h.sin_half_axis[2];
    EXPECT_NEAR(norm, 1.0, 1e-10);
  }
}

TEST(channels, lorentz_channel_operators) {
  double theta = 0.8;
  auto ch = lorentz_spin_channel(theta);
  ASSERT_EQ(ch.size(), 2u);
  double c = std::cos(theta / 2);
  double s = std::sin(theta / 2);
  ComplexMatrix k0(2, 2);
  k0 << c, s, -s, c;
  ComplexMatrix k1(2, 2);
  k1 << c, -s, s, c;
  EXPECT_LT(max_diff(ch.op(0), k0 / std::sqrt(2.0)), 1e-15);
  EXPECT_LT(max_diff(ch.op(1), k1 / std::sqrt(2.0)), 1e-15);
  ComplexMatrix expected(2, 2);
  expected << 1, std::cos(theta), std::cos(theta), 1;
  EXPECT_LT(max_diff(apply_channel(ch, kPlus).matrix(), expected / 2.0), 1e-15);
  EXPECT_TRUE(acts_as_identity(lorentz_spin_channel(0), 36));
}

TEST(channels, wigner_channel_matches_symmetric_momenta) {
  WignerBoost b{1.0, {0, 0, 1}, 1.0, {{1, 0, 0}, {-1, 0, 0}}};
  auto ch = wigner_channel(b);
  double theta = wigner_rotation(b, 0).angle;
  EXPECT_NEAR(wigner_rotation(b, 1).angle, theta, 1e-15);
  auto ref = lorentz_spin_channel(theta);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_LT(max_diff(ch.op(j), ref.op(j)), 1e-14);
  }
  EXPECT_NEAR(l1_coherence(apply_channel(ch, kPlus)), std::cos(theta), 1e-14);
}

TEST(channels, wigner_channel_is_unital) {
  Gen gen(37);
  for (int i = 0; i < 50; ++i) {
    WignerBoost b{gen.uniform(0, 3), random_unit(gen), gen.uniform(0, 3), {}};
    std::size_t dp = 1 + gen.index(4);
    for (std::size_t j = 0; j < dp; ++j) b.momentum_directions.push_back(random_unit(gen));
    auto ch = wigner_channel(b);
    EXPECT_LE(unitality_residual(ch), 1e-10);
    EXPECT_TRUE(validate_cptp(ch).pass);
    EXPECT_LT(max_diff(apply_channel(ch, DensityMatrix::maximally_mixed(2)).matrix(),
                       ComplexMatrix::Identity(2, 2) / 2.0),
              1e-10);
  }
}

TEST(channels, l1_coherence_examples) {
  EXPECT_NEAR(l1_coherence(kPlus), 1.0, 1e-15);
  EXPECT_NEAR(l1_coherence(DensityMatrix::maximally_mixed(4)), 0.0, 1e-15);
  EXPECT_NEAR(l1_coherence(uniform_qutrit()), 2.0, 1e-15);
}

TEST(channels, catalog_channels_are_cptp) {
  Gen gen(38);
  for (int i = 0; i < 100; ++i) {
    double p = gen.uniform();
    double n = gen.uniform();
    double w[4] = {gen.uniform(), gen.uniform(), gen.uniform(), gen.uniform()};
    double t = w[0] + w[1] + w[2] + w[3];
    std::size_t d = 2 + gen.index(4);
    Eigen::MatrixXd probs = Eigen::MatrixXd::NullaryExpr(d, d, [&]() { return gen.uniform(); });
    probs /= probs.sum();
    WignerBoost b{gen.uniform(0, 3), random_unit(gen), gen.uniform(0, 3), {random_unit(gen), random_unit(gen)}};
    std::vector<KrausChannel> channels = {
        pauli_channel(w[0] / t, w[1] / t, w[2] / t, w[3] / t),
        bit_flip(p),
        phase_flip(p),
        bit_phase_flip(p),
        depolarizing(p),
        phase_damping(p),
        gad(p, n),
        identity_channel(d),
        heisenberg_weyl(d, probs),
        hw_dephasing(d, p),
        qutrit_adc(p),
        wigner_channel(b),
        lorentz_spin_channel(gen.uniform(0, kPi)),
    };
    for (const auto& ch : channels) {
      EXPECT_TRUE(validate_cptp(ch).pass) << ch.label();
    }
  }
}

TEST(channels, kraus_unitary_freedom) {
  Gen gen(39);
  for (int i = 0; i < 50; ++i) {
    std::size_t d = 2 + gen.index(2);
    std::size_t m = 1 + gen.index(4);
    auto ch = gen.channel(d, m);
    ComplexMatrix u = gen.unitary(m);
    std::vector<ComplexMatrix> mixed;
    for (std::size_t a = 0; a < m; ++a) {
      ComplexMatrix k = ComplexMatrix::Zero(d, d);
      for (std::size_t b = 0; b < m; ++b) k += u(a, b) * ch.op(b);
      mixed.push_back(k);
    }
    DensityMatrix rho = gen.density(d);
    EXPECT_LT(max_diff(apply_channel(KrausChannel(mixed), rho).matrix(), apply_channel(ch, rho).matrix()), 1e-10);
  }
}

TEST(channels, apply_channel_matches_direct_sum) {
  Gen gen(40);
  for (int i = 0; i < 20; ++i) {
    auto ch = gen.channel(3, 3);
    DensityMatrix rho = gen.density(3);
    EXPECT_LT(max_diff(apply_channel(ch, rho).matrix(), evolve(ch.kraus_ops(), rho.matrix())), 1e-13);
  }
}

TEST(channel_io, round_trip) {
  auto ch = gad(0.3, 0.6);
  auto back = parse_channel(serialize_channel(ch));
  ASSERT_EQ(back.size(), ch.size());
  EXPECT_EQ(back.label(), "gad");
  EXPECT_EQ(back.params().at("N"), 0.6);
  for (std::size_t j = 0; j < ch.size(); ++j) {
    EXPECT_EQ(back.op(j), ch.op(j));
  }
}

TEST(channel_io, parse_accepts_real_entries) {
  auto ch = parse_channel(R"({"dim": 2, "kraus": [[[1, 0], [0, [0, 1]]]]})");
  EXPECT_EQ(ch.label(), "custom");
  EXPECT_EQ(ch.op(0)(1, 1), Complex(0, 1));
  EXPECT_TRUE(validate_cptp(ch).pass);
}

TEST(channel_io, parse_errors) {
  EXPECT_THROW(parse_channel("{"), ChannelFormatError);
  EXPECT_THROW(parse_channel(R"({"kraus": [[[1]]]})"), ChannelFormatError);
  EXPECT_THROW(parse_channel(R"({"dim": 2, "kraus": []})"), ChannelFormatError);
  EXPECT_THROW(parse_channel(R"({"dim": 2, "kraus": [[[1, 0]]]})"), ChannelFormatError);
  EXPECT_THROW(parse_channel(R"({"dim": 1, "kraus": [[["x"]]]})"), ChannelFormatError);
  EXPECT_THROW(load_channel("/nonexistent/channel.json"), ChannelFormatError);
}

TEST(channel_io, broken_channel_file_residual) {
  auto ch = parse_channel(R"({"dim": 2, "kraus": [[[0.7071067811865476, 0], [0, 0.7071067811865476]]]})");
  auto report = validate_cptp(ch);
  EXPECT_FALSE(report.pass);
  EXPECT_NEAR(report.residual, 0.5, 1e-15);
}

TEST(channel_io, catalog_lookup) {
  EXPECT_EQ(make_catalog_channel("gad", {{"p", 0.2}, {"N", 0.5}}).size(), 4u);
  EXPECT_EQ(make_catalog_channel("hw_dephasing", {{"p0", 0.2}}).dim(), 3u);
  EXPECT_EQ(make_catalog_channel("hw_twirl", {{"d", 2}}).size(), 4u);
  EXPECT_EQ(make_catalog_channel("identity", {{"d", 3}}).dim(), 3u);
  EXPECT_THROW(make_catalog_channel("gad", {{"p", 0.2}}), std::invalid_argument);
  EXPECT_THROW(make_catalog_channel("nope", {}), std::invalid_argument);
  EXPECT_THROW(make_catalog_channel("identity", {{"d", 2.5}}), std::invalid_argument);
}
