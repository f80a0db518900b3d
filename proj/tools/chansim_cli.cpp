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

// Command-line front end: validate, sweep, synth, export-qasm, oracle.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chansim/channel_io.hpp"
#include "chansim/channels.hpp"
#include "chansim/config.hpp"
#include "chansim/dilation.hpp"
#include "chansim/experiment.hpp"
#include "chansim/qasm.hpp"
#include "chansim/qsp.hpp"

using namespace chansim;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

void print_matrix(std::ostream& out, const ComplexMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << "  ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out << (c ? "  " : "") << format_complex(m(r, c));
    }
    out << '\n';
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw ConfigError("cannot write '" + path + "'");
  }
  f << text;
}

struct ConfigArgs {
  std::string path;
  std::size_t point = 0;
};

int cmd_validate(const std::string& path, double tol) {
  KrausChannel ch = load_channel(path);
  CptpReport report = validate_cptp(ch, tol);
  std::printf("channel: %s\ndim: %zu\nkraus: %zu\n", ch.label().c_str(), ch.dim(), ch.size());
  std::printf("cptp_residual: %.3e\nunital_residual: %.3e\n", report.residual, unitality_residual(ch));
  std::printf("cptp: %s\n", report.pass ? "pass" : "fail");
  return report.pass ? 0 : kExitNumerical;
}

int cmd_sweep(const std::string& path, const std::string& mode, std::optional<std::uint64_t> shots,
        std::optional<std::uint64_t> seed, std::optional<std::size_t> threads, std::string output) {
  ExperimentConfig cfg = load_config(path);
  if (mode == "exact") {
    cfg.mode = Mode::Exact;
  } else if (mode == "sampled") {
    cfg.mode = Mode::Sampled;
  }
  if (shots) {
    cfg.shots = *shots;
  }
  if (seed) {
    cfg.seed = *seed;
  }
  if (threads) {
    cfg.threads = *threads;
  }
  ExperimentResult result = run_experiment(cfg);
  if (output.empty()) {
    output = cfg.csv_path;
  }
  std::string csv = result.to_csv();
  if (output.empty() || output == "-") {
    std::cout << csv;
  } else {
    write_text(output, csv);
  }
  for (const auto& row : result.rows) {
    if (!row.ok()) {
      std::cerr << "point " << row.param_value << ": " << row.error << '\n';
    }
  }
  return result.ok() ? 0 : kExitNumerical;
}

int cmd_synth(const std::string& amplitudes, const ConfigArgs& config, bool real, bool lowered, bool qasm) {
  std::vector<PureState> targets;
  if (!amplitudes.empty()) {
    std::vector<Complex> values;
    std::stringstream in(amplitudes);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      values.push_back(parse_complex(tok));
    }
    ComplexVector v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
      v(static_cast<Eigen::Index>(i)) = values[i];
    }
    targets.push_back(PureState::normalized(v));
  } else {
    ExperimentConfig cfg = load_config(config.path);
    validate_config(cfg);
    KrausChannel ch = build_channel(cfg, config.point);
    if (const auto* psi = std::get_if<PureState>(&cfg.state)) {
      targets.push_back(embed_qudits(dilate_pure(ch, *psi)));
    } else {
      for (const auto& br : prepare_point(cfg, config.point)) {
        targets.push_back(embed_qudits(br.state));
      }
    }
  }
  int status = 0;
  for (const auto& target : targets) {
    Synthesis syn = real ? synthesize_real_with_stats(target) : synthesize_with_stats(target);
    Circuit c = lowered || qasm ? lower(syn.circuit) : syn.circuit;
    double fidelity = verify_preparation(c, target);
    if (qasm) {
      std::cout << to_qasm(c, {}, false);
    } else {
      std::cout << c.dump();
    }
    std::fprintf(stderr, "qubits=%zu slots=%zu pruned=%zu gates=%zu cx=%zu fidelity=%.17g\n",
           syn.stats.qubits, syn.stats.slots, syn.stats.pruned_slots, c.size(), c.count_cx(),
           fidelity);
    if (!(fidelity >= kPreparationFidelity)) {
      status = kExitNumerical;
    }
  }
  return status;
}

int cmd_export(const ConfigArgs& config, bool all_settings, std::string out_dir) {
  ExperimentConfig cfg = load_config(config.path);
  auto programs = export_qasm(cfg, config.point, all_settings);
  if (out_dir.empty()) {
    out_dir = cfg.qasm_dir;
  }
  if (out_dir.empty()) {
    if (programs.size() != 1) {
      throw ConfigError("several programs to export; pass --out-dir");
    }
    std::cout << programs.front().text;
    return 0;
  }
  std::filesystem::create_directories(out_dir);
  for (const auto& p : programs) {
    auto file = std::filesystem::path(out_dir) / ("point" + std::to_string(config.point) + "_" + p.name + ".qasm");
    write_text(file.string(), p.text);
    std::cout << file.string() << '\n';
  }
  return 0;
}

int cmd_oracle(const ConfigArgs& config, std::optional<double> value, bool dilated) {
  ExperimentConfig cfg = load_config(config.path);
  std::size_t point = config.point;
  if (value) {
    if (cfg.sweep.param.empty()) {
      throw ConfigError("--value needs a config with sweep.param");
    }
    cfg.sweep.grid = {*value};
    point = 0;
  }
  validate_config(cfg);
  KrausChannel ch = build_channel(cfg, point);
  DensityMatrix in = initial_density(cfg);
  DensityMatrix out = apply_channel(ch, in);
  std::cout << "channel: " << ch.label() << '\n';
  if (!cfg.sweep.param.empty()) {
    std::printf("%s: %.17g\n", cfg.sweep.param.c_str(), cfg.sweep.grid.at(point));
  }
  std::cout << "input:\n";
  print_matrix(std::cout, in.matrix());
  std::cout << "output:\n";
  print_matrix(std::cout, out.matrix());
  std::printf("C_l1: %.17g\n", l1_coherence(out));
  if (out.dim() == 2) {
    auto b = qubit_bloch_parameters(out);
    std::printf("bloch: r=%.17g theta=%.17g phi=%.17g\n", b.r, b.theta, b.phi);
  }
  if (dilated) {
    for (const auto& br : prepare_point(cfg, point)) {
      std::printf("dilated (weight %.17g, dims", br.weight);
      for (auto d : br.state.factor_dims()) {
        std::printf(" %zu", d);
      }
      std::printf("):\n");
      const auto& a = br.state.amplitudes.amplitudes();
      for (Eigen::Index i = 0; i < a.size(); ++i) {
        std::cout << "  " << format_complex(a(i)) << '\n';
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy-channel simulation through dilated pure states."};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check that a channel file is CPTP");
  std::string channel_path;
  double tol = kTolerances.validation;
  validate->add_option("channel", channel_path, "Channel JSON file")->required();
  validate->add_option("--tol", tol, "Completeness tolerance");

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
  std::string sweep_config;
  std::string mode;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  std::string output;
  sweep->add_option("config", sweep_config, "Experiment config")->required();
  sweep->add_option("--mode", mode, "Override mode")->check(CLI::IsMember({"exact", "sampled"}));
  sweep->add_option("--shots", shots, "Override shots per setting");
  sweep->add_option("--seed", seed, "Override seed");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep->add_option("-o,--output", output, "CSV path ('-' for stdout)");

  auto* synth = app.add_subcommand("synth", "Print a state-preparation circuit");
  std::string amplitudes;
  ConfigArgs synth_cfg;
  bool real = false;
  bool lowered = false;
  bool qasm = false;
  auto* amp_opt = synth->add_option("--amplitudes", amplitudes, "Comma-separated amplitudes, e.g. '1,0,0,i'");
  auto* cfg_opt = synth->add_option("--config", synth_cfg.path, "Synthesize the dilated state of a config");
  synth->add_option("--point", synth_cfg.point, "Grid point index");
  amp_opt->excludes(cfg_opt);
  synth->add_flag("--real", real, "Ry-only synthesis for real amplitudes");
  synth->add_flag("--lower", lowered, "Lower to x, ry, rz, p, cx");
  synth->add_flag("--qasm", qasm, "Print lowered OpenQASM without measurement");

  auto* export_cmd = app.add_subcommand("export-qasm", "Write OpenQASM programs for a grid point");
  ConfigArgs export_cfg;
  bool all_settings = false;
  std::string out_dir;
  export_cmd->add_option("config", export_cfg.path, "Experiment config")->required();
  export_cmd->add_option("--point", export_cfg.point, "Grid point index");
  export_cmd->add_flag("--all-settings", all_settings, "One program per tomography setting");
  export_cmd->add_option("--out-dir", out_dir, "Directory for .qasm files");

  auto* oracle = app.add_subcommand("oracle", "Print the operator-sum evolution");
  ConfigArgs oracle_cfg;
  std::optional<double> value;
  bool dilated = false;
  oracle->add_option("config", oracle_cfg.path, "Experiment config")->required();
  oracle->add_option("--point", oracle_cfg.point, "Grid point index");
  oracle->add_option("--value", value, "Sweep parameter value (replaces the grid)");
  oracle->add_flag("--dilated", dilated, "Also print the dilated amplitude list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*validate) {
      return cmd_validate(channel_path, tol);
    }
    if (*sweep) {
      return cmd_sweep(sweep_config, mode, shots, seed, threads, output);
    }
    if (*synth) {
      if (amplitudes.empty() && synth_cfg.path.empty()) {
        throw ConfigError("synth needs --amplitudes or --config");
      }
      return cmd_synth(amplitudes, synth_cfg, real, lowered, qasm);
    }
    if (*export_cmd) {
      return cmd_export(export_cfg, all_settings, out_dir);
    }
    if (*oracle) {
      return cmd_oracle(oracle_cfg, value, dilated);
    }
  } catch (const VerificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const StateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ChannelFormatError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
