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

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpemba/config.hpp"
#include "mpemba/io.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_dir = "out";
  std::vector<std::string> overrides;
  std::string seed_override;
  int threads = 1;
  bool svg = false;
};

void add_common(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--config", options.config_path, "experiment config file")
      ->required();
  cmd->add_option("--out", options.out_dir, "output directory");
  cmd->add_option("--seed", options.seed_override,
                  "override master_seed from the config");
  cmd->add_option("--threads", options.threads, "worker thread count");
  cmd->add_option("--set", options.overrides,
                  "config override key=value (repeatable)");
  cmd->add_flag("--svg", options.svg, "also write an SVG line plot");
}

int run_experiment(const CommonOptions& options, mpemba::Mode expected_mode) {
  std::vector<std::string> overrides = options.overrides;
  if (!options.seed_override.empty()) {
    overrides.push_back("master_seed=" + options.seed_override);
  }
  mpemba::ExperimentConfig config =
      mpemba::parse_config_file(options.config_path, overrides);
  if (config.mode != expected_mode) {
    throw mpemba::ConfigError(
        "key 'mode': config does not match the chosen subcommand");
  }
  config.threads = options.threads > 0 ? options.threads : 1;
  mpemba::RunManifest manifest =
      mpemba::run_pipeline(config, options.out_dir, options.svg);
  std::printf("wrote %zu files to %s (%.2f s)\n",
              manifest.output_files.size() + 1, options.out_dir.c_str(),
              manifest.wall_time_seconds);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resource-monotone dynamics in random qudit circuits"};
  app.require_subcommand(1);

  CommonOptions qme_opts, qpme_opts, markov_opts;
  CLI::App* qme = app.add_subcommand("qme", "free-circuit relaxation runs");
  add_common(qme, qme_opts);
  CLI::App* qpme =
      app.add_subcommand("qpme", "preheat-then-free relaxation runs");
  add_common(qpme, qpme_opts);
  CLI::App* markov =
      app.add_subcommand("markov", "fixed-gate channel spectral analysis");
  add_common(markov, markov_opts);

  std::string gates_out = "out";
  CLI::App* enumerate =
      app.add_subcommand("enumerate-gates",
                         "write the monomial two-qubit Clifford gate set");
  enumerate->add_option("--out", gates_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (qme->parsed()) return run_experiment(qme_opts, mpemba::Mode::qme);
    if (qpme->parsed()) return run_experiment(qpme_opts, mpemba::Mode::qpme);
    if (markov->parsed()) {
      return run_experiment(markov_opts, mpemba::Mode::markov);
    }
    if (enumerate->parsed()) {
      std::filesystem::create_directories(gates_out);
      std::string path = gates_out + "/monomial_cliffords.csv";
      int count = mpemba::write_monomial_gates_csv(path);
      std::printf("%d gates -> %s\n", count, path.c_str());
      return 0;
    }
  } catch (const mpemba::ConfigError& error) {
    std::fprintf(stderr, "config error: %s\n", error.what());
    return 1;
  } catch (const std::exception& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return 2;
  }
  return 0;
}
