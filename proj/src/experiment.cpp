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

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <thread>

#include "chansim/channels.hpp"
#include "chansim/qasm.hpp"
#include "chansim/rng.hpp"
#include "chansim/simulator.hpp"
#include "chansim/tomography.hpp"

namespace chansim {
namespace {

std::vector<std::size_t> system_qubits(const DilatedState& state) {
  std::vector<std::size_t> qubits(state.embedding.qubit_counts().at(0));
  std::iota(qubits.begin(), qubits.end(), std::size_t{0});
  return qubits;
}

ComplexMatrix exact_system_state(const PreparedBranch& branch) {
  PureState out = run(branch.lowered);
  ComplexVector dense = unembed(branch.state.embedding, out.amplitudes());
  auto dims = branch.state.factor_dims();
  const std::size_t keep[] = {0};
  return partial_trace(dense, dims, keep);
}

ComplexMatrix sampled_system_state(const ExperimentConfig& cfg, std::size_t point, std::size_t b,
                   const PreparedBranch& branch) {
  auto sys = system_qubits(branch.state);
  auto settings = settings_for(sys);
  std::size_t n = branch.lowered.qubit_count();
  std::optional<ReadoutModel> model;
  if (cfg.readout) {
    model = ReadoutModel::uniform(n, cfg.readout->e0, cfg.readout->e1);
  }
  std::uint64_t branch_seed = derive_seed(derive_seed(cfg.seed, point), b);
  std::vector<SettingData> data;
  data.reserve(settings.size());
  for (std::size_t k = 0; k < settings.size(); ++k) {
    Circuit c = branch.lowered;
    for (const auto& g : settings.rotations[k]) {
      c.add(g);
    }
    std::uint64_t setting_seed = derive_seed(branch_seed, k);
    ShotCounts counts = sample(run(c), cfg.shots, derive_seed(setting_seed, 0));
    if (model) {
      ShotCounts noisy = apply_readout_noise(counts, *model, derive_seed(setting_seed, 1));
      data.push_back(setting_data(mitigate(noisy, *model), cfg.shots));
    } else {
      data.push_back(setting_data(counts));
    }
  }
  TomographyResult tomo = reconstruct(expectations(settings, data), cfg.shots);
  std::size_t d = branch.state.system_dim;
  if (d < (std::size_t{1} << sys.size())) {
    return extract_qudit(tomo.projected, d).state.matrix();
  }
  return tomo.projected.matrix();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

DensityMatrix initial_density(const ExperimentConfig& cfg) {
  if (const auto* psi = std::get_if<PureState>(&cfg.state)) {
    return DensityMatrix::from_pure(*psi);
  }
  return std::get<DensityMatrix>(cfg.state);
}

DensityMatrix oracle_state(const ExperimentConfig& cfg, std::size_t index) {
  return apply_channel(build_channel(cfg, index), initial_density(cfg));
}

std::vector<PreparedBranch> prepare_point(const ExperimentConfig& cfg, std::size_t index) {
  KrausChannel ch = build_channel(cfg, index);
  std::vector<std::pair<double, DilatedState>> dilated;
  if (const auto* psi = std::get_if<PureState>(&cfg.state)) {
    dilated.emplace_back(1.0, dilate_pure(ch, *psi));
  } else {
    const auto& rho = std::get<DensityMatrix>(cfg.state);
    switch (cfg.mixed_method) {
      case MixedMethod::PurifyEvolved:
        dilated.emplace_back(1.0, mixed_method_purify_evolved(ch, rho));
        break;
      case MixedMethod::Convex:
        for (auto& br : convex_branches(ch, rho)) {
          dilated.emplace_back(br.weight, std::move(br.state));
        }
        break;
      case MixedMethod::DoublePurification:
        dilated.emplace_back(1.0, mixed_method_double_purification(ch, rho));
        break;
    }
  }
  std::vector<PreparedBranch> out;
  for (auto& [weight, state] : dilated) {
    PureState target = embed_qudits(state);
    Synthesis syn = synthesize_with_stats(target);
    Circuit lowered = lower(syn.circuit);
    double fidelity = verify_preparation(lowered, target);
    if (!(fidelity >= kPreparationFidelity)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "lowered preparation circuit reaches fidelity " << fidelity;
      throw VerificationError(msg.str());
    }
    out.push_back(PreparedBranch{weight, std::move(state), std::move(syn), std::move(lowered)});
  }
  return out;
}

PointResult run_point(const ExperimentConfig& cfg, std::size_t index) {
  PointResult r;
  r.param_value = cfg.sweep.grid.at(index);
  try {
    DensityMatrix oracle = oracle_state(cfg, index);
    r.c_theory = l1_coherence(oracle);
    auto branches = prepare_point(cfg, index);
    ComplexMatrix mix = ComplexMatrix::Zero(oracle.matrix().rows(), oracle.matrix().cols());
    for (std::size_t b = 0; b < branches.size(); ++b) {
      const auto& br = branches[b];
      r.synth_gate_count += br.synthesis.circuit.size();
      r.lowered_gate_count += br.lowered.size();
      ComplexMatrix part = cfg.mode == Mode::Exact ? exact_system_state(br)
                             : sampled_system_state(cfg, index, b, br);
      mix += br.weight * part;
    }
    DensityMatrix measured(mix);
    r.c_measured = l1_coherence(measured);
    r.trace_distance = trace_distance(measured, oracle);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  ExperimentResult result;
  result.mode = cfg.mode;
  result.shots = cfg.mode == Mode::Exact ? 0 : cfg.shots;
  result.seed = cfg.seed;
  std::size_t points = cfg.sweep.grid.size();
  result.rows.resize(points);
  std::size_t workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  workers = std::min(workers, points);
  if (workers <= 1) {
    for (std::size_t i = 0; i < points; ++i) {
      result.rows[i] = run_point(cfg, i);
    }
    return result;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < points; i = next++) {
        result.rows[i] = run_point(cfg, i);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  return result;
}

bool ExperimentResult::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const PointResult& r) { return r.ok(); });
}

std::string ExperimentResult::to_csv() const {
  std::string out =
    "param_value,C_theory,C_measured,trace_distance,mode,shots,seed,synth_gate_count,lowered_gate_count\n";
  for (const auto& r : rows) {
    out += format_double(r.param_value) + ',' + format_double(r.c_theory) + ',' +
         format_double(r.c_measured) + ',' + format_double(r.trace_distance) + ',' +
         (r.ok() ? mode_name(mode) : "error") + ',' + std::to_string(shots) + ',' +
         std::to_string(seed) + ',' + std::to_string(r.synth_gate_count) + ',' +
         std::to_string(r.lowered_gate_count) + '\n';
  }
  return out;
}

std::vector<QasmProgram> export_qasm(const ExperimentConfig& cfg, std::size_t index, bool all_settings) {
  validate_config(cfg);
  auto branches = prepare_point(cfg, index);
  std::vector<QasmProgram> out;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const auto& br = branches[b];
    std::string prefix = branches.size() > 1 ? "branch" + std::to_string(b) + "_" : "";
    auto sys = system_qubits(br.state);
    if (!all_settings) {
      out.push_back({prefix + std::string(sys.size(), 'Z'), to_qasm(br.lowered)});
      continue;
    }
    auto settings = settings_for(sys);
    for (std::size_t k = 0; k < settings.size(); ++k) {
      out.push_back({prefix + settings.labels[k], to_qasm(br.lowered, settings.rotations[k])});
    }
  }
  return out;
}

}  // namespace chansim
