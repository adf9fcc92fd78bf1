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

#include "mpemba/protocols.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <thread>

#include "mpemba/ensembles.hpp"
#include "mpemba/monotones.hpp"
#include "mpemba/stabilizer.hpp"

namespace mpemba {

namespace {

std::string format_value(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%g", value);
  return buffer;
}

// Runs fn(task) for task in [0, n_tasks) on a small worker pool. The caller
// must make tasks independent; the first exception wins and is rethrown.
void parallel_for(int n_tasks, int n_threads,
                  const std::function<void(int)>& fn) {
  if (n_threads <= 1 || n_tasks <= 1) {
    for (int i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      int task = next.fetch_add(1);
      if (task >= n_tasks) return;
      try {
        fn(task);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int count = std::min(n_threads, n_tasks);
  pool.reserve(count);
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

GateFamily free_family(Resource resource) {
  switch (resource) {
    case Resource::coherence: return GateFamily::coherence;
    case Resource::imaginarity: return GateFamily::orthogonal;
    case Resource::non_gaussianity: return GateFamily::gaussian;
    case Resource::mana: return GateFamily::qutrit_clifford;
  }
  throw std::logic_error("unreachable");
}

GateSampler free_sampler(const ExperimentConfig& config, const Bond& bond) {
  EnsembleSpec spec;
  spec.family = free_family(config.resource);
  spec.local_dim = config.local_dim;
  spec.epsilon = config.epsilon;
  spec.swap_probability = config.swap_probability;
  spec.h_stddev = config.h_stddev;
  return ensemble_sampler(spec, bond.first);
}

// One dense realization: preheat layers (when t_preheat > 0) followed by
// free layers, with the monotone recorded on the sample grid.
std::vector<double> simulate_dense(const ExperimentConfig& config,
                                   double theta, int t_preheat,
                                   RngStream& rng,
                                   const std::vector<int>& grid) {
  TiltKind kind;
  if (config.resource == Resource::mana) {
    kind = TiltKind::qutrit_x_tilt;
  } else if (config.resource == Resource::imaginarity) {
    kind = TiltKind::x_tilt;
  } else {
    kind = TiltKind::y_tilt;
  }
  PureState psi =
      tilted_state(config.n_sites, config.local_dim, kind, theta);

  std::vector<double> values;
  values.reserve(grid.size());
  std::size_t grid_pos = 0;
  auto record = [&](int t) {
    while (grid_pos < grid.size() && grid[grid_pos] == t) {
      values.push_back(
          evaluate_monotone(config.resource, psi, config.region_size));
      ++grid_pos;
    }
  };
  record(0);

  GateSampler haar = [dim = config.local_dim](RngStream& r) {
    return sample_haar_gate(r, dim);
  };
  const int n_a = config.region_size;
  double eps_a = config.preheat.scope == PreheatScope::b_only
                     ? 0.0
                     : config.preheat.epsilon_a;
  for (int s = 1; s <= config.depth; ++s) {
    for (const Bond& bond : brickwork_layer(s, config.n_sites,
                                            config.boundary)) {
      Gate gate;
      if (s <= t_preheat) {
        bool in_a = bond.first < n_a && bond.second < n_a;
        bool in_b = bond.first >= n_a && bond.second >= n_a;
        if (!in_a && !in_b) continue;  // no preheat gate across the cut
        gate = dilute(rng, in_a ? eps_a : config.preheat.epsilon_b, haar,
                      config.local_dim);
      } else {
        gate = dilute(rng, config.epsilon, free_sampler(config, bond),
                      config.local_dim);
      }
      if (!gate.is_identity()) {
        apply_two_site_gate_inplace(psi, gate, bond.first, bond.second);
      }
    }
    record(s);
  }
  return values;
}

std::vector<double> simulate_stabilizer(const ExperimentConfig& config,
                                        double p, RngStream& rng,
                                        const std::vector<int>& grid) {
  StabilizerTableau tab = init_hadamard_product(config.n_sites, p, rng);
  std::vector<double> values;
  values.reserve(grid.size());
  std::size_t grid_pos = 0;
  auto record = [&](int t) {
    while (grid_pos < grid.size() && grid[grid_pos] == t) {
      values.push_back(coherence_stab(tab, 0, config.region_size));
      ++grid_pos;
    }
  };
  record(0);
  for (int s = 1; s <= config.depth; ++s) {
    for (const Bond& bond : brickwork_layer(s, config.n_sites,
                                            config.boundary)) {
      if (!rng.bernoulli(config.epsilon)) continue;
      int gate_index = static_cast<int>(rng.uniform_index(768));
      apply_monomial_clifford(tab, gate_index, bond.first, bond.second);
    }
    record(s);
  }
  return values;
}

// Simulates every (series, realization) pair in parallel, then reduces in
// fixed realization order so results do not depend on the thread count.
std::vector<TimeSeries> run_batch(
    const ExperimentConfig& config, const std::vector<std::string>& labels,
    const std::function<std::vector<double>(int series, RngStream& rng)>&
        simulate) {
  const std::vector<int> grid = sample_depths(config.depth,
                                              config.sample_stride);
  const int n_series = static_cast<int>(labels.size());
  const int n_real = config.n_realizations;
  std::vector<std::vector<double>> slab(
      static_cast<std::size_t>(n_series) * n_real);
  parallel_for(n_series * n_real, config.threads, [&](int task) {
    int series = task / n_real;
    int realization = task % n_real;
    RngStream rng(config.master_seed, realization);
    slab[task] = simulate(series, rng);
  });

  std::vector<TimeSeries> out(n_series);
  for (int series = 0; series < n_series; ++series) {
    TimeSeries& ts = out[series];
    ts.label = labels[series];
    ts.depths = grid;
    ts.n_realizations = n_real;
    ts.mean.assign(grid.size(), 0.0);
    ts.stderr_.assign(grid.size(), 0.0);
    for (int r = 0; r < n_real; ++r) {
      const auto& row = slab[static_cast<std::size_t>(series) * n_real + r];
      for (std::size_t g = 0; g < grid.size(); ++g) ts.mean[g] += row[g];
    }
    for (std::size_t g = 0; g < grid.size(); ++g) ts.mean[g] /= n_real;
    if (n_real > 1) {
      for (int r = 0; r < n_real; ++r) {
        const auto& row = slab[static_cast<std::size_t>(series) * n_real + r];
        for (std::size_t g = 0; g < grid.size(); ++g) {
          double d = row[g] - ts.mean[g];
          ts.stderr_[g] += d * d;
        }
      }
      for (std::size_t g = 0; g < grid.size(); ++g) {
        ts.stderr_[g] =
            std::sqrt(ts.stderr_[g] / (n_real - 1) / n_real);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Bond> brickwork_layer(int s, int n_sites, Boundary boundary) {
  if (s < 1) throw std::invalid_argument("layer index starts at 1");
  std::vector<Bond> bonds;
  int start = (s % 2 == 1) ? 0 : 1;
  for (int x = start; x + 1 < n_sites; x += 2) bonds.emplace_back(x, x + 1);
  if (boundary == Boundary::periodic && s % 2 == 0 && n_sites % 2 == 0 &&
      n_sites >= 4) {
    bonds.emplace_back(n_sites - 1, 0);
  }
  return bonds;
}

std::vector<int> sample_depths(int depth, int stride) {
  std::vector<int> grid;
  for (int t = 0; t <= depth; t += stride) grid.push_back(t);
  if (grid.back() != depth) grid.push_back(depth);
  return grid;
}

double evaluate_monotone(Resource resource, const PureState& state,
                         int region_size) {
  std::vector<int> region(region_size);
  for (int i = 0; i < region_size; ++i) region[i] = i;
  switch (resource) {
    case Resource::coherence:
      return coherence(reduced_density(state, region));
    case Resource::imaginarity:
      return imaginarity(reduced_density(state, region));
    case Resource::non_gaussianity:
      return non_gaussianity(state, region_size);
    case Resource::mana:
      return mana(reduced_density(state, region));
  }
  throw std::logic_error("unreachable");
}

std::vector<TimeSeries> run_qme(const ExperimentConfig& config) {
  if (config.mode != Mode::qme) {
    throw ConfigError("run_qme requires mode = qme");
  }
  config.validate();
  if (config.engine == EngineKind::stabilizer) {
    std::vector<std::string> labels;
    for (double p : config.p_values) labels.push_back("p=" + format_value(p));
    return run_batch(config, labels, [&](int series, RngStream& rng) {
      return simulate_stabilizer(config, config.p_values[series], rng,
                                 sample_depths(config.depth,
                                               config.sample_stride));
    });
  }
  std::vector<std::string> labels;
  for (double theta : config.theta_values) {
    labels.push_back("theta=" + format_value(theta));
  }
  return run_batch(config, labels, [&](int series, RngStream& rng) {
    return simulate_dense(config, config.theta_values[series], 0, rng,
                          sample_depths(config.depth, config.sample_stride));
  });
}

std::vector<TimeSeries> run_qpme(const ExperimentConfig& config) {
  if (config.mode != Mode::qpme) {
    throw ConfigError("run_qpme requires mode = qpme");
  }
  config.validate();
  if (config.region_size == 1 &&
      config.preheat.scope == PreheatScope::both) {
    std::fprintf(stderr,
                 "warning: region_size = 1 leaves no bonds inside A; "
                 "preheating proceeds on B only\n");
  }
  std::vector<std::string> labels;
  for (int t : config.preheat.t_values) {
    labels.push_back("T=" + std::to_string(t));
  }
  return run_batch(config, labels, [&](int series, RngStream& rng) {
    return simulate_dense(config, config.theta,
                          config.preheat.t_values[series], rng,
                          sample_depths(config.depth, config.sample_stride));
  });
}

CrossingReport detect_crossing(const TimeSeries& a, const TimeSeries& b,
                               double sigma, int window) {
  if (a.depths != b.depths) {
    throw std::invalid_argument("series depth grids differ");
  }
  const int n = static_cast<int>(a.depths.size());
  CrossingReport report;
  report.label_a = a.label;
  report.label_b = b.label;

  // Differences below this floor count as ties: series that agree up to
  // float noise (exact invariance points, identical trajectories) must not
  // register sign flips.
  constexpr double kNoiseFloor = 1e-12;

  std::vector<double> diff(n), combined(n);
  for (int i = 0; i < n; ++i) {
    diff[i] = a.mean[i] - b.mean[i];
    combined[i] = std::sqrt(a.stderr_[i] * a.stderr_[i] +
                            b.stderr_[i] * b.stderr_[i]);
  }
  auto units = [&](int i) {
    if (std::abs(diff[i]) <= kNoiseFloor) return 0.0;
    if (combined[i] > 0) return std::abs(diff[i]) / combined[i];
    return 1e300;
  };

  int prev_sign = 0, prev_index = -1, flip_index = -1;
  for (int i = 0; i < n; ++i) {
    int s = diff[i] > kNoiseFloor ? 1 : (diff[i] < -kNoiseFloor ? -1 : 0);
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) {
      flip_index = i;
      break;
    }
    prev_sign = s;
    prev_index = i;
  }

  if (flip_index < 0) {
    double min_units = n > 0 ? 1e300 : 0.0;
    for (int i = 0; i < n; ++i) min_units = std::min(min_units, units(i));
    report.margin = min_units;
    return report;
  }

  double d0 = std::abs(diff[prev_index]);
  double d1 = std::abs(diff[flip_index]);
  double x0 = a.depths[prev_index];
  double x1 = a.depths[flip_index];
  report.crossing_depth = x0 + (x1 - x0) * d0 / (d0 + d1);

  double best_before = 0, best_after = 0;
  for (int i = std::max(0, prev_index - window + 1); i <= prev_index; ++i) {
    if (diff[i] * prev_sign > 0) best_before = std::max(best_before, units(i));
  }
  for (int i = flip_index; i < std::min(n, flip_index + window); ++i) {
    if (diff[i] * prev_sign < 0) best_after = std::max(best_after, units(i));
  }
  report.significant = best_before > sigma && best_after > sigma;
  report.margin = std::min(best_before, best_after);
  return report;
}

}  // namespace mpemba
