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

#include "chansim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "chansim/channel_io.hpp"

namespace chansim {
namespace {

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    out.push_back(trim(item));
  }
  if (!s.empty() && s.back() == sep) {
    out.emplace_back();
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

double parse_plain(const std::string& token) {
  // from_chars rejects an explicit plus sign.
  const std::string s = token.size() > 1 && token[0] == '+' ? token.substr(1) : token;
  if (s == "pi") {
    return kPi;
  }
  if (s == "-pi") {
    return -kPi;
  }
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

std::uint64_t parse_count(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a non-negative integer: '" + s + "'");
  }
  return v;
}

std::vector<double> parse_grid(const std::string& value) {
  std::vector<double> grid;
  if (value.find(':') != std::string::npos) {
    auto parts = split(value, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("range must be start:stop:step");
    }
    double start = parse_real(parts[0]);
    double stop = parse_real(parts[1]);
    double step = parse_real(parts[2]);
    if (!(step > 0) || stop < start) {
      throw std::invalid_argument("range needs step > 0 and stop >= start");
    }
    auto n = static_cast<std::size_t>(std::llround(std::floor((stop - start) / step + 1e-9)));
    // When the step divides the range, interpolate so that 0:1:0.1 gives 0.3 rather than 3 * 0.1.
    bool exact = n > 0 && std::abs(static_cast<double>(n) * step - (stop - start)) < 1e-9 * step;
    for (std::size_t i = 0; i <= n; ++i) {
      grid.push_back(exact ? start + (stop - start) * static_cast<double>(i) / static_cast<double>(n)
                 : start + static_cast<double>(i) * step);
    }
    return grid;
  }
  for (const auto& tok : split(value, ',')) {
    grid.push_back(parse_real(tok));
  }
  return grid;
}

ComplexVector parse_vector(const std::string& value) {
  auto toks = split(value, ',');
  ComplexVector v(static_cast<Eigen::Index>(toks.size()));
  for (size_t i = 0; i < toks.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = parse_complex(toks[i]);
  }
  return v;
}

ComplexMatrix parse_matrix(const std::string& value) {
  auto rows = split(value, ';');
  auto n = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    ComplexVector row = parse_vector(rows[static_cast<size_t>(r)]);
    if (row.size() != n) {
      throw std::invalid_argument("density matrix must be square");
    }
    m.row(r) = row.transpose();
  }
  return m;
}

InitialState named_state(const std::string& name) {
  if (name == "zero") {
    return PureState::basis(2, 0);
  }
  if (name == "one") {
    return PureState::basis(2, 1);
  }
  if (name == "plus") {
    return PureState::from_bloch(kPi / 2, 0);
  }
  if (name == "minus") {
    return PureState::from_bloch(kPi / 2, kPi);
  }
  if (name.rfind("uniform:", 0) == 0) {
    auto d = parse_count(name.substr(8));
    if (d == 0) {
      throw std::invalid_argument("uniform state needs d >= 1");
    }
    ComplexVector v = ComplexVector::Constant(static_cast<Eigen::Index>(d), 1.0);
    return PureState::normalized(v);
  }
  throw std::invalid_argument("unknown named state '" + name + "'");
}

}  // namespace

double parse_real(const std::string& token) {
  auto t = trim(token);
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    double num = parse_plain(trim(t.substr(0, slash)));
    double den = parse_plain(trim(t.substr(slash + 1)));
    if (den == 0) {
      throw std::invalid_argument("division by zero in '" + t + "'");
    }
    return num / den;
  }
  return parse_plain(t);
}

Complex parse_complex(const std::string& token) {
  std::string t;
  for (char c : token) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      t.push_back(c);
    }
  }
  if (t.empty()) {
    throw std::invalid_argument("empty complex number");
  }
  if (t.back() != 'i') {
    return {parse_real(t), 0.0};
  }
  t.pop_back();
  // Split at the last sign that is not part of an exponent.
  size_t split_at = std::string::npos;
  for (size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_of = [](const std::string& s) {
    if (s.empty() || s == "+") {
      return 1.0;
    }
    if (s == "-") {
      return -1.0;
    }
    return parse_real(s);
  };
  if (split_at == std::string::npos) {
    return {0.0, imag_of(t)};
  }
  return {parse_real(t.substr(0, split_at)), imag_of(t.substr(split_at))};
}

const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "sampled"; }

ExperimentConfig parse_config(const std::string& text, const std::string& base_dir) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_channel = false;
  bool have_state_line = false;
  std::optional<double> e0;
  std::optional<double> e1;
  int readout_line = 0;
  bool have_grid = false;
  int sweep_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) {
      continue;
    }
    auto fail = [&](const std::string& msg) {
      return ConfigError("line " + std::to_string(line_no) + ": " + msg);
    };
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw fail("expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw fail("expected 'key = value'");
    }
    if (!seen.insert(key).second) {
      throw fail("duplicate key '" + key + "'");
    }
    try {
      if (key == "channel") {
        cfg.channel.name = value;
        have_channel = true;
      } else if (key == "channel.file") {
        std::filesystem::path p(value);
        cfg.channel.file = p.is_absolute() ? p.string() : (std::filesystem::path(base_dir) / p).string();
        have_channel = true;
      } else if (key.rfind("param.", 0) == 0 && key.size() > 6) {
        cfg.channel.params[key.substr(6)] = parse_real(value);
      } else if (key == "state" || key == "state.bloch" || key == "state.amplitudes" ||
             key == "state.density") {
        if (have_state_line) {
          throw std::invalid_argument("initial state given more than once");
        }
        have_state_line = true;
        if (key == "state") {
          cfg.state = named_state(value);
        } else if (key == "state.bloch") {
          auto toks = split_ws(value);
          if (toks.size() != 2) {
            throw std::invalid_argument("state.bloch takes 'theta phi'");
          }
          cfg.state = PureState::from_bloch(parse_real(toks[0]), parse_real(toks[1]));
        } else if (key == "state.amplitudes") {
          cfg.state = PureState::normalized(parse_vector(value));
        } else {
          cfg.state = DensityMatrix(parse_matrix(value));
        }
      } else if (key == "sweep.param") {
        cfg.sweep.param = value;
        sweep_line = line_no;
      } else if (key == "sweep.grid") {
        cfg.sweep.grid = parse_grid(value);
        have_grid = true;
      } else if (key == "mode") {
        if (value == "exact") {
          cfg.mode = Mode::Exact;
        } else if (value == "sampled") {
          cfg.mode = Mode::Sampled;
        } else {
          throw std::invalid_argument("mode must be 'exact' or 'sampled'");
        }
      } else if (key == "shots") {
        cfg.shots = parse_count(value);
      } else if (key == "seed") {
        cfg.seed = parse_count(value);
      } else if (key == "threads") {
        cfg.threads = static_cast<std::size_t>(parse_count(value));
      } else if (key == "readout.e0") {
        e0 = parse_real(value);
        readout_line = line_no;
      } else if (key == "readout.e1") {
        e1 = parse_real(value);
        readout_line = line_no;
      } else if (key == "mixed_method") {
        auto m = parse_count(value);
        if (m < 1 || m > 3) {
          throw std::invalid_argument("mixed_method must be 1, 2 or 3");
        }
        cfg.mixed_method = static_cast<MixedMethod>(m);
      } else if (key == "output.csv") {
        cfg.csv_path = value;
      } else if (key == "output.qasm_dir") {
        cfg.qasm_dir = value;
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
  }
  if (!have_channel) {
    throw ConfigError("missing key 'channel' or 'channel.file'");
  }
  if (seen.count("channel") && seen.count("channel.file")) {
    throw ConfigError("'channel' and 'channel.file' are mutually exclusive");
  }
  if (have_grid && cfg.sweep.param.empty()) {
    throw ConfigError("sweep.grid given without sweep.param");
  }
  if (!cfg.sweep.param.empty() && !have_grid) {
    throw ConfigError("line " + std::to_string(sweep_line) + ": sweep.param given without sweep.grid");
  }
  if (e0 || e1) {
    ReadoutError r{e0.value_or(0.0), e1.value_or(0.0)};
    if (r.e0 < 0 || r.e0 > 0.5 || r.e1 < 0 || r.e1 > 0.5) {
      throw ConfigError("line " + std::to_string(readout_line) + ": readout rates must lie in [0, 0.5]");
    }
    cfg.readout = r;
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto dir = std::filesystem::path(path).parent_path();
  return parse_config(buf.str(), dir.empty() ? "." : dir.string());
}

KrausChannel build_channel(const ExperimentConfig& cfg, std::size_t index) {
  if (index >= cfg.sweep.grid.size()) {
    throw std::out_of_range("grid point out of range");
  }
  if (!cfg.channel.file.empty()) {
    return load_channel(cfg.channel.file);
  }
  auto params = cfg.channel.params;
  if (!cfg.sweep.param.empty()) {
    params[cfg.sweep.param] = cfg.sweep.grid[index];
  }
  return make_catalog_channel(cfg.channel.name, params);
}

void validate_config(const ExperimentConfig& cfg) {
  const auto& grid = cfg.sweep.grid;
  if (grid.empty()) {
    throw ConfigError("sweep grid is empty");
  }
  bool increasing = std::is_sorted(grid.begin(), grid.end());
  bool decreasing = std::is_sorted(grid.rbegin(), grid.rend());
  if (!increasing && !decreasing) {
    throw ConfigError("sweep grid is not monotone");
  }
  if (cfg.mode == Mode::Sampled && cfg.shots < 1) {
    throw ConfigError("sampled mode needs shots >= 1");
  }
  if (!cfg.channel.file.empty() && !cfg.sweep.param.empty()) {
    throw ConfigError("a channel file has no parameters to sweep");
  }
  std::size_t state_dim = std::visit([](const auto& s) { return s.dim(); }, cfg.state);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    try {
      auto ch = build_channel(cfg, i);
      if (ch.dim() != state_dim) {
        throw ConfigError("channel dimension " + std::to_string(ch.dim()) +
                  " does not match initial state dimension " + std::to_string(state_dim));
      }
      auto report = validate_cptp(ch);
      if (!report.pass) {
        std::ostringstream msg;
        msg << "channel is not trace preserving (residual " << report.residual << ")";
        throw std::invalid_argument(msg.str());
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "grid point " << i;
      if (!cfg.sweep.param.empty()) {
        msg << " (" << cfg.sweep.param << " = " << grid[i] << ")";
      }
      msg << ": " << e.what();
      throw ConfigError(msg.str());
    }
  }
}

}  // namespace chansim
