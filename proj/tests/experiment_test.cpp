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

#include "chansim/experiment.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

#include "chansim/channel_io.hpp"
#include "chansim/config.hpp"
#include "chansim/qasm.hpp"
#include "chansim/simulator.hpp"
#include "test_util.hpp"

using namespace chansim;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::string validate_error_of(const std::string& text) {
  try {
    validate_config(parse_config(text));
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

double l1_of(const ComplexMatrix& m) {
  double s = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j) s += std::abs(m(i, j));
    }
  }
  return s;
}

/// Independent coherence curve: direct Kraus sum on the initial state.
double direct_coherence(const ExperimentConfig& cfg, std::size_t index) {
  return l1_of(chansim::testing::evolve(build_channel(cfg, index).kraus_ops(), initial_density(cfg).matrix()));
}

const char* kGrid = "sweep.grid = 0:1:0.1\n";

}  // namespace

TEST(config, parses_all_keys) {
  auto cfg = parse_config(
      "# comment\n"
      "channel = gad\n"
      "param.N = 0.25\n"
      "state.bloch = pi/2 pi/4\n"
      "sweep.param = p\n"
      "sweep.grid = 0, 0.5, 1\n"
      "mode = sampled\n"
      "shots = 100\n"
      "seed = 7\n"
      "threads = 2\n"
      "readout.e0 = 0.01\n"
      "readout.e1 = 0.02\n"
      "mixed_method = 1\n"
      "output.csv = out.csv\n"
      "output.qasm_dir = q\n");
  EXPECT_EQ(cfg.channel.name, "gad");
  EXPECT_DOUBLE_EQ(cfg.channel.params.at("N"), 0.25);
  EXPECT_EQ(cfg.sweep.param, "p");
  EXPECT_EQ(cfg.sweep.grid, (std::vector<double>{0, 0.5, 1}));
  EXPECT_EQ(cfg.mode, Mode::Sampled);
  EXPECT_EQ(cfg.shots, 100u);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(cfg.threads, 2u);
  ASSERT_TRUE(cfg.readout.has_value());
  EXPECT_DOUBLE_EQ(cfg.readout->e1, 0.02);
  EXPECT_EQ(cfg.mixed_method, MixedMethod::PurifyEvolved);
  EXPECT_EQ(cfg.csv_path, "out.csv");
  const auto& s = std::get<PureState>(cfg.state);
  EXPECT_NEAR(std::abs(s[1]), std::sin(kPi / 4), 1e-15);
  EXPECT_NEAR(std::arg(s[1]), kPi / 4, 1e-15);
}

TEST(config, defaults) {
  auto cfg = parse_config("channel = phase_damping\nparam.p = 0.3\n");
  EXPECT_EQ(cfg.mode, Mode::Exact);
  EXPECT_EQ(cfg.sweep.grid.size(), 1u);
  EXPECT_EQ(cfg.mixed_method, MixedMethod::DoublePurification);
  EXPECT_FALSE(cfg.readout.has_value());
  const auto& s = std::get<PureState>(cfg.state);
  EXPECT_NEAR(s[0].real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(s[1].real(), std::sqrt(0.5), 1e-15);
}

TEST(config, grid_ranges_are_exact) {
  auto cfg = parse_config(std::string("channel = bit_flip\nsweep.param = p\n") + kGrid);
  ASSERT_EQ(cfg.sweep.grid.size(), 11u);
  EXPECT_EQ(cfg.sweep.grid[3], 0.3);
  EXPECT_EQ(cfg.sweep.grid.back(), 1.0);
}

TEST(config, state_forms) {
  auto amp = parse_config("channel = identity\nparam.d = 3\nstate.amplitudes = 1, i, 0\n");
  const auto& s = std::get<PureState>(amp.state);
  EXPECT_NEAR(s[1].imag(), std::sqrt(0.5), 1e-15);
  auto dens = parse_config("channel = identity\nstate.density = 0.5, 0.25-0.25i; 0.25+0.25i, 0.5\n");
  const auto& d = std::get<DensityMatrix>(dens.state);
  EXPECT_EQ(d(0, 1), Complex(0.25, -0.25));
  auto uni = parse_config("channel = identity\nparam.d = 3\nstate = uniform:3\n");
  EXPECT_EQ(std::get<PureState>(uni.state).dim(), 3u);
}

TEST(config, complex_and_real_tokens) {
  EXPECT_EQ(parse_complex("i"), Complex(0, 1));
  EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(parse_complex("0.5-0.25i"), Complex(0.5, -0.25));
  EXPECT_EQ(parse_complex("2"), Complex(2, 0));
  EXPECT_DOUBLE_EQ(parse_real("pi/2"), kPi / 2);
  EXPECT_DOUBLE_EQ(parse_real("1/3"), 1.0 / 3);
  EXPECT_DOUBLE_EQ(parse_real("+0.5"), 0.5);
  EXPECT_EQ(parse_complex("0.25+0.25i"), Complex(0.25, 0.25));
  EXPECT_EQ(parse_complex("1e-3-2e+1i"), Complex(1e-3, -20));
  EXPECT_THROW(parse_real("abc"), std::invalid_argument);
  EXPECT_THROW(parse_real("1/0"), std::invalid_argument);
}

TEST(config, errors_carry_line_numbers) {
  EXPECT_EQ(error_of("channel = bit_flip\nnonsense\n").rfind("line 2:", 0), 0u);
  EXPECT_NE(error_of("channel = bit_flip\nchannel = bit_flip\n").find("duplicate"), std::string::npos);
  EXPECT_NE(error_of("channel = bit_flip\nfoo = 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("channel = bit_flip\nshots = -3\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("channel = bit_flip\nmode = fast\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("channel = bit_flip\nmixed_method = 4\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("channel = bit_flip\nstate = zero\nstate.bloch = 0 0\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("param.p = 0.1\n").find("missing"), std::string::npos);
  EXPECT_NE(error_of("channel = bit_flip\nchannel.file = x.json\n").find("exclusive"), std::string::npos);
  EXPECT_NE(error_of("channel = bit_flip\nsweep.param = p\n").find("sweep.grid"), std::string::npos);
  EXPECT_NE(error_of("channel = bit_flip\nreadout.e0 = 0.7\n").find("[0, 0.5]"), std::string::npos);
  EXPECT_THROW(load_config("/nonexistent/cfg.txt"), ConfigError);
}

TEST(config, validation) {
  EXPECT_EQ(validate_error_of("channel = bit_flip\nparam.p = 0.2\n"), "");
  EXPECT_NE(validate_error_of("channel = bit_flip\nsweep.param = p\nsweep.grid = 0, 0.5, 0.2\n").find("monotone"),
            std::string::npos);
  EXPECT_NE(validate_error_of("channel = bit_flip\nmode = sampled\nshots = 0\n").find("shots"), std::string::npos);
  // Qutrit channel on a qubit state.
  EXPECT_NE(validate_error_of("channel = qutrit_adc\nparam.gamma = 0.1\n").find("dimension"), std::string::npos);
  // p = 1.5 breaks trace preservation at the last grid point only.
  auto msg = validate_error_of("channel = bit_flip\nsweep.param = p\nsweep.grid = 0, 1.5\n");
  EXPECT_NE(msg.find("grid point 1"), std::string::npos) << msg;
  EXPECT_NE(validate_error_of("channel = no_such_channel\n"), "");
}

TEST(config, channel_file_is_relative_to_config) {
  std::string dir = ::testing::TempDir();
  {
    std::ofstream(dir + "/bf.json") << serialize_channel(bit_flip(0.2));
    std::ofstream(dir + "/cfg.txt") << "channel.file = bf.json\n";
  }
  auto cfg = load_config(dir + "/cfg.txt");
  auto ch = build_channel(cfg, 0);
  EXPECT_EQ(ch.size(), 2u);
  EXPECT_NEAR(std::abs(ch.op(1)(0, 1)), std::sqrt(0.2), 1e-15);
  auto sweep = parse_config("channel.file = bf.json\nsweep.param = p\nsweep.grid = 0, 1\n", dir);
  EXPECT_THROW(validate_config(sweep), ConfigError);
}

TEST(experiment, exact_matches_direct_evolution_for_catalog) {
  const char* configs[] = {
      "channel = bit_flip\nsweep.param = p\n",
      "channel = phase_flip\nsweep.param = p\n",
      "channel = bit_phase_flip\nsweep.param = p\n",
      "channel = depolarizing\nsweep.param = p\n",
      "channel = phase_damping\nsweep.param = p\n",
      "channel = gad\nparam.N = 0.25\nsweep.param = p\n",
      "channel = hw_dephasing\nparam.d = 3\nstate = uniform:3\nsweep.param = p0\n",
      "channel = qutrit_adc\nstate = uniform:3\nsweep.param = gamma\n",
      "channel = lorentz\nsweep.param = theta\nsweep.grid = 0:3:0.25\n",
      "channel = pauli\nparam.pI = 0.5\nparam.pX = 0.2\nparam.pZ = 0.3\nstate.bloch = 1 2\nsweep.param = pY\n"
      "sweep.grid = 0\n",
  };
  for (const char* text : configs) {
    std::string t = text;
    if (t.find("sweep.grid") == std::string::npos) t += kGrid;
    auto cfg = parse_config(t);
    auto result = run_experiment(cfg);
    ASSERT_TRUE(result.ok()) << text;
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      const auto& r = result.rows[i];
      double direct = direct_coherence(cfg, i);
      EXPECT_NEAR(r.c_theory, direct, 1e-10) << text << " point " << i;
      EXPECT_NEAR(r.c_measured, direct, 1e-10) << text << " point " << i;
      EXPECT_LT(r.trace_distance, 1e-10);
      EXPECT_GT(r.lowered_gate_count, 0u);
    }
  }
}

TEST(experiment, bit_phase_flip_curve) {
  auto cfg = parse_config(std::string("channel = bit_phase_flip\nsweep.param = p\n") + kGrid);
  auto result = run_experiment(cfg);
  for (const auto& r : result.rows) EXPECT_NEAR(r.c_measured, std::abs(1 - 2 * r.param_value), 1e-10);
}

TEST(experiment, gad_curve_independent_of_n) {
  for (double n : {0.0, 0.25, 1.0}) {
    auto cfg = parse_config("channel = gad\nparam.N = " + std::to_string(n) + "\nsweep.param = p\n" + kGrid);
    for (const auto& r : run_experiment(cfg).rows) {
      EXPECT_NEAR(r.c_measured, std::sqrt(1 - r.param_value), 1e-10);
    }
  }
}

TEST(experiment, lorentz_curve) {
  auto cfg = parse_config("channel = lorentz\nsweep.param = theta\nsweep.grid = 0:3:0.5\n");
  for (const auto& r : run_experiment(cfg).rows) EXPECT_NEAR(r.c_measured, std::abs(std::cos(r.param_value)), 1e-10);
}

TEST(experiment, mixed_methods_agree_in_exact_mode) {
  for (int m = 1; m <= 3; ++m) {
    auto cfg = parse_config("channel = depolarizing\nstate.density = 0.4, 0.3-0.1i; 0.3+0.1i, 0.6\nmixed_method = " +
                            std::to_string(m) + "\nsweep.param = p\n" + kGrid);
    auto result = run_experiment(cfg);
    ASSERT_TRUE(result.ok());
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      EXPECT_NEAR(result.rows[i].c_measured, direct_coherence(cfg, i), 1e-10) << "method " << m;
    }
  }
}

TEST(experiment, sampled_within_tolerance_for_several_seeds) {
  for (std::uint64_t seed : {1, 2, 3}) {
    auto cfg = parse_config("channel = phase_damping\nmode = sampled\nshots = 8192\nseed = " + std::to_string(seed) +
                            "\nsweep.param = p\n" + kGrid);
    auto result = run_experiment(cfg);
    ASSERT_TRUE(result.ok());
    for (const auto& r : result.rows) EXPECT_NEAR(r.c_measured, r.c_theory, 0.05) << "seed " << seed;
  }
}

TEST(experiment, sampled_qutrit_within_tolerance) {
  auto cfg = parse_config("channel = qutrit_adc\nstate = uniform:3\nmode = sampled\nseed = 4\nsweep.param = gamma\n"
                          "sweep.grid = 0, 0.5, 1\n");
  for (const auto& r : run_experiment(cfg).rows) EXPECT_NEAR(r.c_measured, r.c_theory, 0.1);
}

TEST(experiment, csv_is_deterministic_across_threads) {
  std::string base = std::string("channel = gad\nparam.N = 0.5\nmode = sampled\nshots = 2048\nseed = 11\n"
                                 "readout.e0 = 0.03\nreadout.e1 = 0.05\nsweep.param = p\n") + kGrid;
  auto a = run_experiment(parse_config(base + "threads = 1\n")).to_csv();
  auto b = run_experiment(parse_config(base + "threads = 1\n")).to_csv();
  auto c = run_experiment(parse_config(base + "threads = 4\n")).to_csv();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  auto other = run_experiment(parse_config(std::string("channel = gad\nparam.N = 0.5\nmode = sampled\nshots = 2048\n"
                                                       "seed = 12\nsweep.param = p\n") + kGrid)).to_csv();
  EXPECT_NE(a, other);
}

TEST(experiment, csv_layout) {
  auto result = run_experiment(parse_config("channel = bit_flip\nsweep.param = p\nsweep.grid = 0, 0.5\n"));
  auto csv = result.to_csv();
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header,
            "param_value,C_theory,C_measured,trace_distance,mode,shots,seed,synth_gate_count,lowered_gate_count");
  std::getline(in, row);
  EXPECT_EQ(row.rfind("0,1,", 0), 0u) << row;
  EXPECT_NE(row.find(",exact,0,1,"), std::string::npos) << row;
}

TEST(experiment, failures_become_error_rows) {
  // Unpostselectable readout or a broken channel must not abort the sweep.
  ExperimentConfig cfg = parse_config("channel = bit_flip\nsweep.param = p\nsweep.grid = 0, 0.5\n");
  auto bad = run_point(parse_config("channel = bit_flip\nparam.p = 1.5\n"), 0);
  EXPECT_FALSE(bad.ok());
  ExperimentResult r;
  r.rows = {run_point(cfg, 0), bad};
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.to_csv().find(",error,"), std::string::npos);
  EXPECT_THROW(run_experiment(parse_config("channel = bit_flip\nparam.p = 1.5\n")), ConfigError);
}

TEST(experiment, prepare_point_verifies) {
  auto cfg = parse_config("channel = hw_dephasing\nparam.d = 3\nparam.p0 = 0.5\nstate = uniform:3\n");
  auto branches = prepare_point(cfg, 0);
  ASSERT_EQ(branches.size(), 1u);
  EXPECT_DOUBLE_EQ(branches[0].weight, 1.0);
  EXPECT_GE(verify_preparation(branches[0].lowered, embed_qudits(branches[0].state)), kPreparationFidelity);
  auto convex = parse_config("channel = depolarizing\nparam.p = 0.2\nstate.density = 0.7, 0; 0, 0.3\n"
                             "mixed_method = 2\n");
  auto cb = prepare_point(convex, 0);
  ASSERT_EQ(cb.size(), 2u);
  EXPECT_NEAR(cb[0].weight + cb[1].weight, 1.0, 1e-12);
}

TEST(export_qasm, identity_prep_is_single_ry) {
  auto cfg = parse_config("channel = identity\n");
  auto progs = export_qasm(cfg, 0, false);
  ASSERT_EQ(progs.size(), 1u);
  Circuit c = parse_qasm(progs[0].text);
  std::size_t rotations = 0;
  for (const auto& g : c.gates()) rotations += g.kind == GateKind::RotY ? 1 : 0;
  EXPECT_EQ(rotations, 1u);
}

TEST(export_qasm, bit_phase_flip_round_trip) {
  auto cfg = parse_config("channel = bit_phase_flip\nparam.p = 0.3\n");
  auto progs = export_qasm(cfg, 0, false);
  ASSERT_EQ(progs.size(), 1u);
  PureState expected = embed_qudits(dilate_pure(bit_phase_flip(0.3), PureState::from_bloch(kPi / 2, 0)));
  PureState got = run(parse_qasm(progs[0].text));
  EXPECT_LT((got.amplitudes() - expected.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(to_qasm(parse_qasm(progs[0].text)), progs[0].text);
}

TEST(export_qasm, all_settings) {
  auto cfg = parse_config("channel = hw_dephasing\nparam.d = 3\nparam.p0 = 0.5\nstate = uniform:3\n");
  auto progs = export_qasm(cfg, 0, true);
  ASSERT_EQ(progs.size(), 9u);
  EXPECT_EQ(progs.front().name, "XX");
  EXPECT_EQ(progs.back().name, "ZZ");
  auto convex = parse_config("channel = bit_flip\nparam.p = 0.2\nstate.density = 0.7, 0; 0, 0.3\nmixed_method = 2\n");
  auto cp = export_qasm(convex, 0, false);
  ASSERT_EQ(cp.size(), 2u);
  EXPECT_EQ(cp[0].name.rfind("branch0_", 0), 0u);
}
