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

#include "chansim/channel_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace chansim {

using nlohmann::json;

KrausChannel parse_channel(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ChannelFormatError(std::string("channel file: ") + e.what());
  }
  try {
    const auto dim = doc.at("dim").get<std::size_t>();
    const auto& kraus = doc.at("kraus");
    if (!kraus.is_array() || kraus.empty()) throw ChannelFormatError("channel file: \"kraus\" must be a nonempty list");
    std::vector<ComplexMatrix> ops;
    for (std::size_t j = 0; j < kraus.size(); ++j) {
      const auto& rows = kraus[j];
      if (!rows.is_array() || rows.size() != dim)
        throw ChannelFormatError("channel file: kraus[" + std::to_string(j) + "] must have dim rows");
      ComplexMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
      for (std::size_t r = 0; r < dim; ++r) {
        if (!rows[r].is_array() || rows[r].size() != dim)
          throw ChannelFormatError("channel file: kraus[" + std::to_string(j) + "][" + std::to_string(r) +
                                   "] must have dim entries");
        for (std::size_t c = 0; c < dim; ++c) {
          const auto& e = rows[r][c];
          if (e.is_number()) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = e.get<double>();
          } else if (e.is_array() && e.size() == 2) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(e[0].get<double>(), e[1].get<double>());
          } else {
            throw ChannelFormatError("channel file: entry kraus[" + std::to_string(j) + "][" + std::to_string(r) +
                                     "][" + std::to_string(c) + "] must be [re, im]");
          }
        }
      }
      ops.push_back(std::move(m));
    }
    std::map<std::string, double> params;
    if (doc.contains("params")) params = doc["params"].get<std::map<std::string, double>>();
    return KrausChannel(std::move(ops), doc.value("label", std::string("custom")), std::move(params));
  } catch (const json::exception& e) {
    throw ChannelFormatError(std::string("channel file: ") + e.what());
  }
}

std::string serialize_channel(const KrausChannel& ch) {
  json doc;
  doc["dim"] = ch.dim();
  doc["label"] = ch.label();
  doc["params"] = ch.params();
  json kraus = json::array();
  for (const auto& k : ch.kraus_ops()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < k.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < k.cols(); ++c) row.push_back({k(r, c).real(), k(r, c).imag()});
      rows.push_back(std::move(row));
    }
    kraus.push_back(std::move(rows));
  }
  doc["kraus"] = std::move(kraus);
  return doc.dump(2) + "\n";
}

KrausChannel load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ChannelFormatError("cannot open channel file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_channel(buf.str());
}

namespace {

double param(const std::map<std::string, double>& params, const std::string& channel, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("channel " + channel + " requires parameter '" + key + "'");
  return it->second;
}

std::size_t dim_param(const std::map<std::string, double>& params, const std::string& channel, const std::string& key,
                      std::size_t fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const double v = it->second;
  if (!(v >= 1.0) || std::floor(v) != v)
    throw std::invalid_argument("channel " + channel + ": '" + key + "' must be a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

KrausChannel make_catalog_channel(const std::string& name, const std::map<std::string, double>& params) {
  auto p = [&](const std::string& key) { return param(params, name, key); };
  if (name == "identity") return identity_channel(dim_param(params, name, "d", 2));
  if (name == "pauli") return pauli_channel(p("pI"), p("pX"), p("pZ"), p("pY"));
  if (name == "bit_flip") return bit_flip(p("p"));
  if (name == "phase_flip") return phase_flip(p("p"));
  if (name == "bit_phase_flip") return bit_phase_flip(p("p"));
  if (name == "depolarizing") return depolarizing(p("p"));
  if (name == "phase_damping") return phase_damping(p("p"));
  if (name == "gad") return gad(p("p"), p("N"));
  if (name == "hw_dephasing") return hw_dephasing(dim_param(params, name, "d", 3), p("p0"));
  if (name == "hw_twirl") {
    const std::size_t d = dim_param(params, name, "d", 3);
    const auto dd = static_cast<Eigen::Index>(d);
    return heisenberg_weyl(d, Eigen::MatrixXd::Constant(dd, dd, 1.0 / static_cast<double>(d * d)));
  }
  if (name == "qutrit_adc") return qutrit_adc(p("gamma"));
  if (name == "lorentz") return lorentz_spin_channel(p("theta"));
  if (name == "wigner") {
    WignerBoost boost;
    boost.rapidity = p("omega");
    boost.momentum_rapidity = p("alpha");
    boost.boost_direction = {0, 0, 1};
    boost.momentum_directions = {{1, 0, 0}, {-1, 0, 0}};
    return wigner_channel(boost);
  }
  throw std::invalid_argument("unknown channel '" + name + "'");
}

}  // namespace chansim
