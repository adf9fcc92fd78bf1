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

#include "mpemba/io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mpemba/config.hpp"
#include "mpemba/ensembles.hpp"
#include "mpemba/markov.hpp"
#include "mpemba/monotones.hpp"

namespace mpemba {

namespace {

std::string format_g12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF endings everywhere
  if (!out) throw std::runtime_error("cannot open '" + path + "' for write");
  return out;
}

std::string sanitize_label(const std::string& label) {
  std::string out;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') {
      out += c;
    } else {
      out += '_';
    }
  }
  return out;
}

}  // namespace

void write_series_csv(const TimeSeries& series, const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << "depth,mean,stderr,n_realizations,label\n";
  for (std::size_t i = 0; i < series.depths.size(); ++i) {
    out << series.depths[i] << ',' << format_g12(series.mean[i]) << ','
        << format_g12(series.stderr_[i]) << ',' << series.n_realizations
        << ',' << series.label << '\n';
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

TimeSeries read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) ||
      line != "depth,mean,stderr,n_realizations,label") {
    throw std::runtime_error("bad series header in '" + path + "'");
  }
  TimeSeries series;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string field;
    std::getline(row, field, ',');
    series.depths.push_back(std::stoi(field));
    std::getline(row, field, ',');
    series.mean.push_back(std::stod(field));
    std::getline(row, field, ',');
    series.stderr_.push_back(std::stod(field));
    std::getline(row, field, ',');
    series.n_realizations = std::stoi(field);
    std::getline(row, field);
    series.label = field;
  }
  return series;
}

void write_crossings_csv(const std::vector<CrossingReport>& reports,
                         const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << "label_a,label_b,crossing_depth,significant,margin\n";
  for (const CrossingReport& r : reports) {
    out << r.label_a << ',' << r.label_b << ',';
    if (r.crossing_depth) out << format_g12(*r.crossing_depth);
    out << ',' << (r.significant ? 1 : 0) << ',' << format_g12(r.margin)
        << '\n';
  }
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << "# run manifest\n";
  out << "code_version = " << manifest.code_version << '\n';
  out << "master_seed = " << manifest.master_seed << '\n';
  out << "wall_time_seconds = " << format_g12(manifest.wall_time_seconds)
      << '\n';
  out << "\n[config]\n" << manifest.config_echo;
  out << "\n[outputs]\n";
  for (const std::string& file : manifest.output_files) out << file << '\n';
}

int write_monomial_gates_csv(const std::string& path) {
  const std::vector<Gate>& gates = enumerate_monomial_cliffords();
  std::ofstream out = open_for_write(path);
  out << "gate_index,row,col,re,im\n";
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const CMatrix& m = gates[g].matrix;
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        if (std::abs(m(row, col)) < 1e-14) continue;
        out << g << ',' << row << ',' << col << ','
            << format_g12(m(row, col).real()) << ','
            << format_g12(m(row, col).imag()) << '\n';
      }
    }
  }
  return static_cast<int>(gates.size());
}

void write_svg_plot(const std::vector<TimeSeries>& series,
                    const std::string& path) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                   "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
  const int width = 720, height = 480, margin = 56;
  double x_max = 1, y_max = 1e-12;
  for (const TimeSeries& s : series) {
    for (std::size_t i = 0; i < s.depths.size(); ++i) {
      x_max = std::max(x_max, static_cast<double>(s.depths[i]));
      y_max = std::max(y_max, s.mean[i]);
    }
  }
  auto px = [&](double x) {
    return margin + x / x_max * (width - 2 * margin);
  };
  auto py = [&](double y) {
    return height - margin - y / y_max * (height - 2 * margin);
  };
  std::ofstream out = open_for_write(path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width
      << "' height='" << height << "'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  out << "<line x1='" << margin << "' y1='" << height - margin << "' x2='"
      << width - margin << "' y2='" << height - margin
      << "' stroke='black'/>\n";
  out << "<line x1='" << margin << "' y1='" << margin << "' x2='" << margin
      << "' y2='" << height - margin << "' stroke='black'/>\n";
  out << "<text x='" << width / 2 << "' y='" << height - 12
      << "' font-size='13' text-anchor='middle'>circuit depth</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const TimeSeries& s = series[k];
    const char* color = kPalette[k % 8];
    out << "<polyline fill='none' stroke='" << color << "' points='";
    for (std::size_t i = 0; i < s.depths.size(); ++i) {
      out << px(s.depths[i]) << ',' << py(s.mean[i]) << ' ';
    }
    out << "'/>\n";
    out << "<text x='" << width - margin + 4 << "' y='"
        << margin + 16 * (k + 1) << "' font-size='12' fill='" << color
        << "' text-anchor='end'>" << s.label << "</text>\n";
  }
  out << "</svg>\n";
}

namespace {

std::vector<CrossingReport> all_pair_crossings(
    const std::vector<TimeSeries>& series, const ExperimentConfig& config) {
  std::vector<CrossingReport> reports;
  for (std::size_t a = 0; a < series.size(); ++a) {
    for (std::size_t b = a + 1; b < series.size(); ++b) {
      reports.push_back(detect_crossing(series[a], series[b],
                                        config.crossing_sigma,
                                        config.crossing_window));
    }
  }
  return reports;
}

std::vector<TimeSeries> run_markov_mode(const ExperimentConfig& config,
                                        const std::string& out_dir,
                                        std::vector<std::string>& outputs) {
  Gate gate = fixed_monomial_gate();
  if (config.reunitarize) gate.matrix = polar_projection(gate.matrix);
  CMatrix u = build_floquet_unitary(gate, config.n_sites);
  ChannelSuperoperator channel =
      build_channel(u, config.n_sites, config.region_size);

  // Spectrum table: discrete eigenvalues plus their principal logs, the
  // continuous-generator view. Eigenvalues exist even when the channel is
  // defective and no biorthonormal mode system does.
  {
    std::vector<Complex> eigenvalues = channel_eigenvalues(channel);
    std::string path = out_dir + "/spectrum.csv";
    std::ofstream out = open_for_write(path);
    out << "k,re_mu,im_mu,abs_mu,re_log_mu,im_log_mu\n";
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
      Complex mu = eigenvalues[k];
      Complex log_mu = std::abs(mu) > 0 ? std::log(mu) : Complex(-1e300, 0);
      out << k + 1 << ',' << format_g12(mu.real()) << ','
          << format_g12(mu.imag()) << ',' << format_g12(std::abs(mu)) << ','
          << format_g12(log_mu.real()) << ',' << format_g12(log_mu.imag())
          << '\n';
    }
    outputs.push_back(path);
  }

  std::vector<DensityMatrix> initial_states;
  std::vector<std::string> labels;
  for (double theta : config.theta_values) {
    CVector site_ket = tilted_site_ket(2, TiltKind::y_tilt, theta);
    PureState product = product_state(config.region_size, 2, site_ket);
    DensityMatrix rho0;
    rho0.n_sites = config.region_size;
    rho0.local_dim = 2;
    rho0.matrix = product.amplitudes * product.amplitudes.adjoint();
    initial_states.push_back(std::move(rho0));
    char label[64];
    std::snprintf(label, sizeof(label), "theta=%g", theta);
    labels.push_back(label);
  }

  // Slow-mode overlaps need an eigenvector system; a defective spectrum is
  // reported instead of silently dropped.
  try {
    ChannelSpectrum spectrum = channel_spectrum(channel);
    std::string path = out_dir + "/overlaps.csv";
    std::ofstream overlaps = open_for_write(path);
    overlaps << "label,theta,overlap\n";
    for (std::size_t i = 0; i < initial_states.size(); ++i) {
      overlaps << labels[i] << ',' << format_g12(config.theta_values[i])
               << ','
               << format_g12(slow_mode_overlap(spectrum, initial_states[i]))
               << '\n';
    }
    outputs.push_back(path);
  } catch (const std::exception& e) {
    std::string path = out_dir + "/spectrum_notes.txt";
    std::ofstream notes = open_for_write(path);
    notes << "slow-mode overlaps unavailable: " << e.what() << '\n';
    notes << "the trajectories and eigenvalue table remain valid\n";
    outputs.push_back(path);
  }

  std::vector<TimeSeries> series;
  for (std::size_t i = 0; i < initial_states.size(); ++i) {
    series.push_back(evolve_markov(channel, initial_states[i], config.depth,
                                   labels[i])
                         .coherence_series);
  }
  return series;
}

}  // namespace

RunManifest run_pipeline(const ExperimentConfig& config,
                         const std::string& out_dir, bool svg) {
  auto start = std::chrono::steady_clock::now();
  std::filesystem::create_directories(out_dir);

  std::vector<std::string> outputs;
  std::vector<TimeSeries> series;
  switch (config.mode) {
    case Mode::qme:
      series = run_qme(config);
      break;
    case Mode::qpme:
      series = run_qpme(config);
      break;
    case Mode::markov:
      config.validate();
      series = run_markov_mode(config, out_dir, outputs);
      break;
  }

  for (const TimeSeries& s : series) {
    std::string path = out_dir + "/series_" + sanitize_label(s.label) +
                       ".csv";
    write_series_csv(s, path);
    outputs.push_back(path);
  }
  {
    std::string path = out_dir + "/crossings.csv";
    write_crossings_csv(all_pair_crossings(series, config), path);
    outputs.push_back(path);
  }
  if (svg) {
    std::string path = out_dir + "/plot.svg";
    write_svg_plot(series, path);
    outputs.push_back(path);
  }

  RunManifest manifest;
  manifest.config_echo = config_echo(config);
  manifest.master_seed = config.master_seed;
  manifest.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  manifest.output_files = outputs;
  write_manifest(manifest, out_dir + "/manifest.txt");
  return manifest;
}

}  // namespace mpemba
