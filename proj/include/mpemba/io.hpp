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

#ifndef MPEMBA_IO_HPP
#define MPEMBA_IO_HPP

#include <string>
#include <vector>

#include "mpemba/protocols.hpp"

namespace mpemba {

inline constexpr const char* kCodeVersion = "0.1.0";

/// Reproducibility record written next to the result CSVs.
struct RunManifest {
  std::string config_echo;
  std::uint64_t master_seed = 0;
  std::string code_version = kCodeVersion;
  double wall_time_seconds = 0.0;
  std::vector<std::string> output_files;
};

/// Header `depth,mean,stderr,n_realizations,label`, one row per sampled
/// depth, 12 significant digits, LF line endings.
void write_series_csv(const TimeSeries& series, const std::string& path);

/// Round-trip reader for the series format (values at printed precision).
TimeSeries read_series_csv(const std::string& path);

void write_crossings_csv(const std::vector<CrossingReport>& reports,
                         const std::string& path);

void write_manifest(const RunManifest& manifest, const std::string& path);

/// The 768 monomial Clifford gates as rows gate_index,row,col,re,im
/// (nonzero entries only). Returns the gate count.
int write_monomial_gates_csv(const std::string& path);

/// Dependency-free line plot of the series set.
void write_svg_plot(const std::vector<TimeSeries>& series,
                    const std::string& path);

/// Runs the configured experiment and writes one CSV per series, a crossing
/// report over all series pairs, optional SVG, and the manifest, into
/// out_dir. This is the engine behind the qme/qpme/markov subcommands.
RunManifest run_pipeline(const ExperimentConfig& config,
                         const std::string& out_dir, bool svg = false);

}  // namespace mpemba

#endif
