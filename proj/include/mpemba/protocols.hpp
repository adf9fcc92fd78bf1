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

#ifndef MPEMBA_PROTOCOLS_HPP
#define MPEMBA_PROTOCOLS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpemba/dense.hpp"

namespace mpemba {

enum class Mode { qme, qpme, markov };
enum class Resource { coherence, imaginarity, non_gaussianity, mana };
enum class EngineKind { dense, stabilizer };
enum class Boundary { open, periodic };
enum class PreheatScope { both, b_only };

struct PreheatSettings {
  std::vector<int> t_values;  // must contain 0
  double epsilon_a = 0.0;
  double epsilon_b = 0.0;
  PreheatScope scope = PreheatScope::both;
};

/// Full declarative description of a run. parse_config() fills unset fields
/// with the documented defaults; validate() checks every invariant and names
/// the offending key on failure.
struct ExperimentConfig {
  Mode mode = Mode::qme;
  Resource resource = Resource::coherence;
  EngineKind engine = EngineKind::dense;
  int n_sites = 0;
  int local_dim = 2;
  int region_size = 0;
  Boundary boundary = Boundary::periodic;
  std::vector<double> theta_values;  // dense qme series / markov theta scan
  std::vector<double> p_values;      // stabilizer qme series
  double theta = 0.0;                // qpme initial tilt
  double epsilon = 1.0;
  PreheatSettings preheat;
  int depth = 0;
  int n_realizations = 1;
  std::uint64_t master_seed = 0;
  int sample_stride = 1;
  double swap_probability = 0.5;  // coherence ensemble identity/SWAP weight
  double h_stddev = 1.0;          // gaussian ensemble coefficient scale
  double crossing_sigma = 2.0;
  int crossing_window = 3;
  bool reunitarize = true;  // polar-project the fixed markov gate
  int threads = 1;

  void validate() const;  // throws ConfigError
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-depth mean and standard error of a monotone across realizations.
struct TimeSeries {
  std::string label;
  std::vector<int> depths;
  std::vector<double> mean;
  std::vector<double> stderr_;
  int n_realizations = 0;
};

struct CrossingReport {
  std::string label_a;
  std::string label_b;
  std::optional<double> crossing_depth;
  bool significant = false;
  double margin = 0.0;  // separation in combined-stderr units
};

using Bond = std::pair<int, int>;

/// Bonds of brickwork layer s (s >= 1): odd layers start at site 0, even
/// layers at site 1; periodic boundaries add the wrap bond (N-1, 0) to even
/// layers when N is even.
std::vector<Bond> brickwork_layer(int s, int n_sites, Boundary boundary);

/// Sampled depth grid: multiples of the stride, plus depth itself.
std::vector<int> sample_depths(int depth, int stride);

/// Monotone of the prefix region {0..region_size-1} for the configured
/// resource.
double evaluate_monotone(Resource resource, const PureState& state,
                         int region_size);

/// Free-circuit experiment: one TimeSeries per theta (dense) or p
/// (stabilizer) value. Deterministic given master_seed, at any thread count.
std::vector<TimeSeries> run_qme(const ExperimentConfig& config);

/// Preheat-then-free experiment: one TimeSeries per T value (T=0 is the
/// baseline).
std::vector<TimeSeries> run_qpme(const ExperimentConfig& config);

/// First sign flip of a.mean - b.mean, linearly interpolated; significant
/// when the separation exceeds sigma combined standard errors somewhere in a
/// `window`-sample window on each side of the flip.
CrossingReport detect_crossing(const TimeSeries& a, const TimeSeries& b,
                               double sigma = 2.0, int window = 3);

}  // namespace mpemba

#endif
