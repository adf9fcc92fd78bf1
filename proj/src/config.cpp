// Copyright 2026 The Mpemba Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mpemba/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace mpemba {

namespace {

const std::vector<std::string> kKnownKeys = {
    "mode",          "resource",       "engine",         "n_sites",
    "local_dim",     "region_size",    "boundary",       "theta_values",
    "p_values",      "theta",          "epsilon",        "T_values",
    "epsilon_A",     "epsilon_B",      "preheat_scope",  "depth",
    "n_realizations", "master_seed",   "sample_stride",  "swap_probability",
    "h_stddev",      "crossing_sigma", "crossing_window", "reunitarize",
};

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

class KeyValueMap {
 public:
  void insert(const std::string& key, const std::string& value,
              const std::string& where) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) ==
        kKnownKeys.end()) {
      throw ConfigError("unknown config key '" + key + "' (" + where + ")");
    }
    entries_[key] = value;
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  std::string raw(const std::string& key) const { return entries_.at(key); }

  std::string require(const std::string& key) const {
    if (!has(key)) throw ConfigError("missing required key '" + key + "'");
    return entries_.at(key);
  }

  double real(const std::string& key) const {
    const std::string v = require(key);
    try {
      std::size_t used = 0;
      double out = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument("");
      return out;
    } catch (...) {
      throw ConfigError("key '" + key + "': expected a real number, got '" +
                        v + "'");
    }
  }

  long long integer(const std::string& key) const {
    const std::string v = require(key);
    try {
      std::size_t used = 0;
      long long out = std::stoll(v, &used);
      if (used != v.size()) throw std::invalid_argument("");
      return out;
    } catch (...) {
      throw ConfigError("key '" + key + "': expected an integer, got '" + v +
                        "'");
    }
  }

  std::uint64_t unsigned_integer(const std::string& key) const {
    const std::string v = require(key);
    try {
      std::size_t used = 0;
      unsigned long long out = std::stoull(v, &used);
      if (used != v.size()) throw std::invalid_argument("");
      return out;
    } catch (...) {
      throw ConfigError("key '" + key + "': expected an integer, got '" + v +
                        "'");
    }
  }

  std::vector<double> real_list(const std::string& key) const {
    std::vector<double> out;
    std::stringstream stream(require(key));
    std::string item;
    while (std::getline(stream, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      try {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument("");
      } catch (...) {
        throw ConfigError("key '" + key + "': bad list entry '" + item + "'");
      }
    }
    if (out.empty()) throw ConfigError("key '" + key + "': empty list");
    return out;
  }

  std::vector<int> int_list(const std::string& key) const {
    std::vector<int> out;
    for (double v : real_list(key)) {
      int i = static_cast<int>(v);
      if (i != v) {
        throw ConfigError("key '" + key + "': expected integers");
      }
      out.push_back(i);
    }
    return out;
  }

  bool boolean(const std::string& key) const {
    std::string v = require(key);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("key '" + key + "': expected true or false, got '" + v +
                      "'");
  }

 private:
  std::map<std::string, std::string> entries_;
};

Mode parse_mode(const std::string& v) {
  if (v == "qme") return Mode::qme;
  if (v == "qpme") return Mode::qpme;
  if (v == "markov") return Mode::markov;
  throw ConfigError("key 'mode': expected qme, qpme or markov, got '" + v +
                    "'");
}

Resource parse_resource(const std::string& v) {
  if (v == "coherence") return Resource::coherence;
  if (v == "imaginarity") return Resource::imaginarity;
  if (v == "non_gaussianity") return Resource::non_gaussianity;
  if (v == "mana") return Resource::mana;
  throw ConfigError("key 'resource': unknown resource '" + v + "'");
}

const char* resource_name(Resource r) {
  switch (r) {
    case Resource::coherence: return "coherence";
    case Resource::imaginarity: return "imaginarity";
    case Resource::non_gaussianity: return "non_gaussianity";
    case Resource::mana: return "mana";
  }
  return "?";
}

double default_epsilon(Resource r) {
  switch (r) {
    case Resource::coherence: return 0.4;
    case Resource::imaginarity: return 1.0;
    case Resource::non_gaussianity: return 0.8;
    case Resource::mana: return 0.5;
  }
  return 1.0;
}

}  // namespace

void ExperimentConfig::validate() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (n_sites < 2) throw ConfigError("key 'n_sites': need at least 2 sites");
  if (region_size < 1 || region_size >= n_sites) {
    throw ConfigError("key 'region_size': must satisfy 1 <= region_size < "
                      "n_sites");
  }
  if (depth < 0) throw ConfigError("key 'depth': must be nonnegative");
  if (n_realizations < 1) {
    throw ConfigError("key 'n_realizations': must be at least 1");
  }
  if (sample_stride < 1) {
    throw ConfigError("key 'sample_stride': must be at least 1");
  }
  if (!in_unit(epsilon)) {
    throw ConfigError("key 'epsilon': must lie in [0, 1]");
  }
  if (!in_unit(swap_probability)) {
    throw ConfigError("key 'swap_probability': must lie in [0, 1]");
  }
  if (crossing_sigma <= 0) {
    throw ConfigError("key 'crossing_sigma': must be positive");
  }
  if (crossing_window < 1) {
    throw ConfigError("key 'crossing_window': must be at least 1");
  }
  if (resource == Resource::mana) {
    if (local_dim != 3) {
      throw ConfigError("key 'local_dim': mana requires local_dim = 3");
    }
    if (engine != EngineKind::dense) {
      throw ConfigError("key 'engine': mana requires the dense engine");
    }
    if (region_size > 6) {
      throw ConfigError("key 'region_size': mana evaluation limited to 6 "
                        "sites");
    }
  } else if (local_dim != 2) {
    throw ConfigError(std::string("key 'local_dim': ") +
                      resource_name(resource) + " requires local_dim = 2");
  }
  if (engine == EngineKind::stabilizer) {
    if (resource != Resource::coherence) {
      throw ConfigError("key 'engine': the stabilizer engine only supports "
                        "the coherence resource");
    }
    if (mode != Mode::qme) {
      throw ConfigError("key 'engine': the stabilizer engine only runs qme");
    }
  }
  if (resource == Resource::non_gaussianity && boundary != Boundary::open) {
    throw ConfigError("key 'boundary': non_gaussianity requires open "
                      "boundaries (the wrap bond is not a local Gaussian "
                      "gate)");
  }
  if (boundary == Boundary::periodic && n_sites % 2 != 0) {
    throw ConfigError("key 'boundary': periodic brickwork needs an even "
                      "n_sites");
  }
  if (mode == Mode::qme && engine == EngineKind::dense &&
      theta_values.empty()) {
    throw ConfigError("key 'theta_values': required for dense qme runs");
  }
  if (mode == Mode::qme && engine == EngineKind::stabilizer) {
    if (p_values.empty()) {
      throw ConfigError("key 'p_values': required for stabilizer runs");
    }
    for (double p : p_values) {
      if (!in_unit(p)) {
        throw ConfigError("key 'p_values': entries must lie in [0, 1]");
      }
    }
  }
  if (mode == Mode::qpme) {
    if (engine != EngineKind::dense) {
      throw ConfigError("key 'engine': qpme requires the dense engine");
    }
    if (preheat.t_values.empty()) {
      throw ConfigError("key 'T_values': required for qpme runs");
    }
    if (std::find(preheat.t_values.begin(), preheat.t_values.end(), 0) ==
        preheat.t_values.end()) {
      throw ConfigError("key 'T_values': the T = 0 baseline must be "
                        "included");
    }
    for (int t : preheat.t_values) {
      if (t < 0 || t > depth) {
        throw ConfigError("key 'T_values': entries must lie in [0, depth]");
      }
    }
    if (!in_unit(preheat.epsilon_a)) {
      throw ConfigError("key 'epsilon_A': must lie in [0, 1]");
    }
    if (!in_unit(preheat.epsilon_b)) {
      throw ConfigError("key 'epsilon_B': must lie in [0, 1]");
    }
  }
  if (mode == Mode::markov) {
    if (n_sites % 2 != 0 || n_sites > 12) {
      throw ConfigError("key 'n_sites': markov mode needs an even chain of "
                        "at most 12 sites");
    }
    if (theta_values.empty()) {
      throw ConfigError("key 'theta_values': required for markov runs");
    }
  }
}

ExperimentConfig parse_config_text(const std::string& text,
                                   const std::vector<std::string>& overrides) {
  KeyValueMap map;
  std::stringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    std::size_t comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_number) +
                        ": expected 'key = value'");
    }
    map.insert(trim(line.substr(0, eq)), trim(line.substr(eq + 1)),
               "line " + std::to_string(line_number));
  }
  for (const std::string& override_entry : overrides) {
    std::size_t eq = override_entry.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("override '" + override_entry +
                        "': expected key=value");
    }
    map.insert(trim(override_entry.substr(0, eq)),
               trim(override_entry.substr(eq + 1)), "override");
  }

  ExperimentConfig config;
  config.mode = parse_mode(map.require("mode"));
  if (map.has("resource")) {
    config.resource = parse_resource(map.raw("resource"));
  } else if (config.mode == Mode::markov) {
    config.resource = Resource::coherence;
  } else {
    throw ConfigError("missing required key 'resource'");
  }
  if (map.has("engine")) {
    const std::string v = map.raw("engine");
    if (v == "dense") {
      config.engine = EngineKind::dense;
    } else if (v == "stabilizer") {
      config.engine = EngineKind::stabilizer;
    } else {
      throw ConfigError("key 'engine': expected dense or stabilizer");
    }
  }
  config.n_sites = map.has("n_sites") || config.mode != Mode::markov
                       ? static_cast<int>(map.integer("n_sites"))
                       : 6;
  config.local_dim =
      map.has("local_dim") ? static_cast<int>(map.integer("local_dim"))
                           : (config.resource == Resource::mana ? 3 : 2);
  config.region_size = map.has("region_size") || config.mode != Mode::markov
                           ? static_cast<int>(map.integer("region_size"))
                           : 2;
  if (map.has("boundary")) {
    const std::string v = map.raw("boundary");
    if (v == "open") {
      config.boundary = Boundary::open;
    } else if (v == "periodic") {
      config.boundary = Boundary::periodic;
    } else {
      throw ConfigError("key 'boundary': expected open or periodic");
    }
  } else {
    // Gaussian bonds must be nearest neighbor, so that resource defaults to
    // open boundaries; everything else defaults to periodic.
    config.boundary = config.resource == Resource::non_gaussianity ||
                              config.mode == Mode::markov
                          ? Boundary::open
                          : Boundary::periodic;
  }
  if (map.has("theta_values")) {
    config.theta_values = map.real_list("theta_values");
  }
  if (map.has("p_values")) config.p_values = map.real_list("p_values");
  if (map.has("theta")) config.theta = map.real("theta");
  config.epsilon = map.has("epsilon") ? map.real("epsilon")
                                      : default_epsilon(config.resource);
  if (map.has("T_values")) config.preheat.t_values = map.int_list("T_values");
  if (map.has("epsilon_A")) config.preheat.epsilon_a = map.real("epsilon_A");
  if (map.has("epsilon_B")) config.preheat.epsilon_b = map.real("epsilon_B");
  if (map.has("preheat_scope")) {
    const std::string v = map.raw("preheat_scope");
    if (v == "both") {
      config.preheat.scope = PreheatScope::both;
    } else if (v == "B_only") {
      config.preheat.scope = PreheatScope::b_only;
    } else {
      throw ConfigError("key 'preheat_scope': expected both or B_only");
    }
  }
  config.depth = static_cast<int>(map.integer("depth"));
  if (config.mode != Mode::markov || map.has("n_realizations")) {
    config.n_realizations = static_cast<int>(map.integer("n_realizations"));
  }
  if (config.mode != Mode::markov || map.has("master_seed")) {
    config.master_seed = map.unsigned_integer("master_seed");
  }
  if (map.has("sample_stride")) {
    config.sample_stride = static_cast<int>(map.integer("sample_stride"));
  } else {
    config.sample_stride =
        (config.engine == EngineKind::stabilizer && config.n_sites >= 256)
            ? 2
            : 1;
  }
  if (map.has("swap_probability")) {
    config.swap_probability = map.real("swap_probability");
  }
  if (map.has("h_stddev")) config.h_stddev = map.real("h_stddev");
  if (map.has("crossing_sigma")) {
    config.crossing_sigma = map.real("crossing_sigma");
  }
  if (map.has("crossing_window")) {
    config.crossing_window = static_cast<int>(map.integer("crossing_window"));
  }
  if (map.has("reunitarize")) config.reunitarize = map.boolean("reunitarize");

  config.validate();
  return config;
}

ExperimentConfig parse_config_file(const std::string& path,
                                   const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), overrides);
}

namespace {

std::string list_to_string(const std::vector<double>& values) {
  std::string out;
  char buffer[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buffer, sizeof(buffer), "%g", values[i]);
    if (i) out += ", ";
    out += buffer;
  }
  return out;
}

std::string list_to_string(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string config_echo(const ExperimentConfig& config) {
  std::stringstream out;
  char buffer[64];
  auto real = [&](double v) {
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return std::string(buffer);
  };
  out << "mode = "
      << (config.mode == Mode::qme
              ? "qme"
              : config.mode == Mode::qpme ? "qpme" : "markov")
      << "\n";
  out << "resource = " << resource_name(config.resource) << "\n";
  out << "engine = "
      << (config.engine == EngineKind::dense ? "dense" : "stabilizer")
      << "\n";
  out << "n_sites = " << config.n_sites << "\n";
  out << "local_dim = " << config.local_dim << "\n";
  out << "region_size = " << config.region_size << "\n";
  out << "boundary = "
      << (config.boundary == Boundary::open ? "open" : "periodic") << "\n";
  if (!config.theta_values.empty()) {
    out << "theta_values = " << list_to_string(config.theta_values) << "\n";
  }
  if (!config.p_values.empty()) {
    out << "p_values = " << list_to_string(config.p_values) << "\n";
  }
  if (config.mode == Mode::qpme) {
    out << "theta = " << real(config.theta) << "\n";
    out << "T_values = " << list_to_string(config.preheat.t_values) << "\n";
    out << "epsilon_A = " << real(config.preheat.epsilon_a) << "\n";
    out << "epsilon_B = " << real(config.preheat.epsilon_b) << "\n";
    out << "preheat_scope = "
        << (config.preheat.scope == PreheatScope::both ? "both" : "B_only")
        << "\n";
  }
  out << "epsilon = " << real(config.epsilon) << "\n";
  out << "depth = " << config.depth << "\n";
  out << "n_realizations = " << config.n_realizations << "\n";
  out << "master_seed = " << config.master_seed << "\n";
  out << "sample_stride = " << config.sample_stride << "\n";
  out << "swap_probability = " << real(config.swap_probability) << "\n";
  out << "h_stddev = " << real(config.h_stddev) << "\n";
  out << "crossing_sigma = " << real(config.crossing_sigma) << "\n";
  out << "crossing_window = " << config.crossing_window << "\n";
  if (config.mode == Mode::markov) {
    out << "reunitarize = " << (config.reunitarize ? "true" : "false")
        << "\n";
  }
  return out.str();
}

}  // namespace mpemba
