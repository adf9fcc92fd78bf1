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
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the binary exits nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mpemba/config.hpp"
#include "mpemba/ensembles.hpp"
#include "mpemba/io.hpp"
#include "mpemba/markov.hpp"
#include "mpemba/monotones.hpp"
#include "mpemba/protocols.hpp"
#include "mpemba/stabilizer.hpp"

using namespace mpemba;

namespace {

struct CheckFailure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure{message};
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3g", v);
  return buffer;
}

// ---------------------------------------------------------------------------
// shared helpers

GateFamily free_family(Resource resource) {
  switch (resource) {
    case Resource::coherence: return GateFamily::coherence;
    case Resource::imaginarity: return GateFamily::orthogonal;
    case Resource::non_gaussianity: return GateFamily::gaussian;
    case Resource::mana: return GateFamily::qutrit_clifford;
  }
  throw std::logic_error("unreachable");
}

PureState evolve_free_circuit(Resource resource, int n_sites, int local_dim,
                              double epsilon, Boundary boundary, int depth,
                              RngStream& rng, const PureState& initial) {
  PureState psi = initial;
  EnsembleSpec spec;
  spec.family = free_family(resource);
  spec.local_dim = local_dim;
  spec.epsilon = epsilon;
  for (int s = 1; s <= depth; ++s) {
    for (const Bond& bond : brickwork_layer(s, n_sites, boundary)) {
      Gate gate =
          dilute(rng, epsilon, ensemble_sampler(spec, bond.first), local_dim);
      if (!gate.is_identity()) {
        apply_two_site_gate_inplace(psi, gate, bond.first, bond.second);
      }
    }
  }
  return psi;
}

CrossingReport first_significant_crossing(const std::vector<TimeSeries>& ts) {
  return detect_crossing(ts.front(), ts.back());
}

// ---------------------------------------------------------------------------
// criterion 1: free-state zeros

void criterion_free_state_zeros() {
  // Coherence on diagonal states.
  RngStream rng(41, 0);
  DensityMatrix diag;
  diag.n_sites = 2;
  diag.local_dim = 2;
  diag.matrix = CMatrix::Zero(4, 4);
  double total = 0;
  for (int i = 0; i < 4; ++i) {
    diag.matrix(i, i) = rng.uniform() + 0.05;
    total += diag.matrix(i, i).real();
  }
  diag.matrix /= total;
  require(coherence(diag) < 1e-9, "coherence(diagonal) != 0");

  // Imaginarity on real states.
  CVector real_ket(4);
  real_ket << 0.5, -0.5, 0.5, 0.5;
  DensityMatrix real_rho = diag;
  real_rho.matrix = real_ket * real_ket.adjoint();
  require(imaginarity(real_rho) < 1e-9, "imaginarity(real) != 0");

  // Non-Gaussianity on Gaussian-circuit states at N = 8.
  CVector zero2(2);
  zero2 << 1, 0;
  PureState vacuum = product_state(8, 2, zero2);
  PureState gaussian_state =
      evolve_free_circuit(Resource::non_gaussianity, 8, 2, 1.0,
                          Boundary::open, 8, rng, vacuum);
  for (int prefix : {1, 2, 4, 7}) {
    require(non_gaussianity(gaussian_state, prefix) < 1e-9,
            "non_gaussianity(gaussian circuit state) != 0");
  }

  // Mana on qutrit Clifford-circuit states at N = 4.
  CVector zero3(3);
  zero3 << 1, 0, 0;
  PureState stab = product_state(4, 3, zero3);
  PureState clifford_state = evolve_free_circuit(
      Resource::mana, 4, 3, 1.0, Boundary::periodic, 8, rng, stab);
  require(mana(reduced_density(clifford_state, {0, 1})) < 1e-9,
          "mana(clifford circuit state, region) != 0");
  require(mana_global(clifford_state) < 1e-9,
          "mana(clifford circuit state, global) != 0");
}

// ---------------------------------------------------------------------------
// criterion 2: global conservation along free circuits

void criterion_global_conservation() {
  struct Case {
    Resource resource;
    int n_sites;
    int local_dim;
    Boundary boundary;
    TiltKind kind;
    double theta;
    std::function<double(const PureState&)> monotone;
  };
  const std::vector<Case> cases = {
      {Resource::coherence, 8, 2, Boundary::periodic, TiltKind::y_tilt, 0.9,
       coherence_global},
      {Resource::imaginarity, 8, 2, Boundary::periodic, TiltKind::x_tilt, 0.8,
       imaginarity_global},
      {Resource::non_gaussianity, 8, 2, Boundary::open, TiltKind::y_tilt, 0.7,
       non_gaussianity_global},
      {Resource::mana, 4, 3, Boundary::periodic, TiltKind::qutrit_x_tilt, 0.5,
       mana_global},
  };
  for (const Case& test_case : cases) {
    RngStream rng(42, 1);
    PureState psi = tilted_state(test_case.n_sites, test_case.local_dim,
                                 test_case.kind, test_case.theta);
    const double reference = test_case.monotone(psi);
    require(reference > 1e-3, "conservation test state has no resource");
    for (int s = 1; s <= 100; ++s) {
      psi = evolve_free_circuit(test_case.resource, test_case.n_sites,
                                test_case.local_dim, 1.0, test_case.boundary,
                                1, rng, psi);
      double value = test_case.monotone(psi);
      require(std::abs(value - reference) < 1e-9,
              "global monotone drifted by " +
                  format_double(std::abs(value - reference)));
    }
  }
}

// ---------------------------------------------------------------------------
// criterion 3: stabilizer vs dense oracle equivalence

void criterion_stabilizer_dense_equivalence() {
  const int n = 8;
  const std::vector<Gate>& gates = enumerate_monomial_cliffords();
  for (int trial = 0; trial < 1000; ++trial) {
    RngStream rng(43, trial);
    StabilizerTableau tab = init_hadamard_product(n, 0.5, rng);
    CVector dense = CVector::Zero(1);
    {
      CVector plus(2), zero(2);
      plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
      zero << 1, 0;
      CVector acc = CVector::Ones(1);
      for (int site = 0; site < n; ++site) {
        const CVector& ket = tab.x(site, site) ? plus : zero;
        CVector next(acc.size() * 2);
        for (Eigen::Index i = 0; i < acc.size(); ++i) {
          next(2 * i) = acc(i) * ket(0);
          next(2 * i + 1) = acc(i) * ket(1);
        }
        acc = next;
      }
      dense = acc;
    }
    PureState psi;
    psi.n_sites = n;
    psi.local_dim = 2;
    psi.amplitudes = dense;

    const int depth = 6;
    for (int s = 1; s <= depth; ++s) {
      int start = s % 2 == 1 ? 0 : 1;
      for (int x = start; x + 1 < n; x += 2) {
        int index = static_cast<int>(rng.uniform_index(768));
        apply_monomial_clifford(tab, index, x, x + 1);
        apply_two_site_gate_inplace(psi, gates[index], x, x + 1);
      }
    }

    int region = 1 + static_cast<int>(rng.uniform_index(n - 1));
    std::vector<int> region_sites(region);
    for (int i = 0; i < region; ++i) region_sites[i] = i;
    DensityMatrix rho = reduced_density(psi, region_sites);
    double dense_entropy = von_neumann_entropy(rho);
    DensityMatrix dephased = rho;
    dephased.matrix = rho.matrix.diagonal().asDiagonal();
    double dense_diag = von_neumann_entropy(dephased);
    double dense_coherence = coherence(rho);

    int s_tab = entanglement_entropy(tab, 0, region);
    int d_tab = diagonal_entropy(tab, 0, region);
    int c_tab = coherence_stab(tab, 0, region);
    require(std::abs(dense_entropy - s_tab) < 1e-8,
            "entanglement entropy mismatch");
    require(std::abs(dense_diag - d_tab) < 1e-8,
            "diagonal entropy mismatch");
    require(std::abs(dense_coherence - c_tab) < 1e-8, "coherence mismatch");
  }
}

// ---------------------------------------------------------------------------
// criterion 4: monomial Clifford subgroup

void criterion_monomial_subgroup() {
  const std::vector<Gate>& gates = enumerate_monomial_cliffords();
  require(gates.size() == 768, "gate count != 768");

  CMatrix x(2, 2), y(2, 2), z(2, 2), id = CMatrix::Identity(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  std::vector<CMatrix> paulis;
  for (const CMatrix& a : {id, x, y, z}) {
    for (const CMatrix& b : {id, x, y, z}) {
      CMatrix full(4, 4);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          full.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
        }
      }
      paulis.push_back(full);
    }
  }
  for (const Gate& g : gates) {
    require((g.matrix * g.matrix.adjoint()).isIdentity(1e-10),
            "gate not unitary");
    for (int p = 1; p < 16; ++p) {
      CMatrix image = g.matrix * paulis[p] * g.matrix.adjoint();
      int matches = 0;
      for (int q = 1; q < 16; ++q) {
        double overlap =
            std::abs((paulis[q].adjoint() * image).trace()) / 4.0;
        if (overlap > 1e-9) {
          ++matches;
          require(std::abs(overlap - 1.0) < 1e-9,
                  "pauli image split across strings");
        }
      }
      require(matches == 1, "pauli image is not a single string");
    }
  }
}

// ---------------------------------------------------------------------------
// criterion 5: majorana vs dense equivalence on Gaussian circuits

void criterion_majorana_dense_equivalence() {
  const int n = 8;
  CVector zero(2);
  zero << 1, 0;
  for (int trial = 0; trial < 100; ++trial) {
    RngStream rng(45, trial);
    PureState psi = evolve_free_circuit(Resource::non_gaussianity, n, 2, 1.0,
                                        Boundary::open, 6, rng,
                                        product_state(n, 2, zero));
    int prefix = 1 + static_cast<int>(rng.uniform_index(n - 1));
    double gaussian = gaussian_entropy(majorana_correlation_matrix(psi,
                                                                   prefix));
    std::vector<int> region(prefix);
    for (int i = 0; i < prefix; ++i) region[i] = i;
    double dense = von_neumann_entropy(reduced_density(psi, region));
    require(std::abs(gaussian - dense) < 1e-8,
            "gaussian entropy deviates from dense entropy by " +
                format_double(std::abs(gaussian - dense)));
  }
}

// ---------------------------------------------------------------------------
// criteria 6-8: QME presence and absence

ExperimentConfig qme_base(Resource resource, int n_sites, int local_dim,
                          double epsilon, Boundary boundary,
                          std::vector<double> thetas, int depth,
                          int realizations) {
  ExperimentConfig config;
  config.mode = Mode::qme;
  config.resource = resource;
  config.engine = EngineKind::dense;
  config.n_sites = n_sites;
  config.local_dim = local_dim;
  config.region_size = 2;
  config.boundary = boundary;
  config.theta_values = std::move(thetas);
  config.epsilon = epsilon;
  config.depth = depth;
  config.n_realizations = realizations;
  config.master_seed = 4242;
  config.threads = 1;
  return config;
}

void criterion_qme_coherence() {
  ExperimentConfig config =
      qme_base(Resource::coherence, 12, 2, 0.4, Boundary::periodic,
               {0.5, 1.4}, 80, 500);
  std::vector<TimeSeries> series = run_qme(config);
  require(series[1].mean[0] > series[0].mean[0],
          "larger theta does not start higher");
  CrossingReport report = detect_crossing(series[1], series[0]);
  require(report.crossing_depth.has_value(), "no coherence crossing found");
  require(report.significant, "coherence crossing not significant");
}

void criterion_qme_imaginarity() {
  ExperimentConfig config =
      qme_base(Resource::imaginarity, 12, 2, 1.0, Boundary::periodic,
               {0.5, 1.4}, 80, 500);
  std::vector<TimeSeries> series = run_qme(config);
  require(series[1].mean[0] > series[0].mean[0],
          "larger theta does not start higher");
  CrossingReport report = detect_crossing(series[1], series[0]);
  require(report.crossing_depth.has_value(), "no imaginarity crossing found");
  require(report.significant, "imaginarity crossing not significant");
}

void criterion_qme_absence() {
  {
    ExperimentConfig config =
        qme_base(Resource::non_gaussianity, 12, 2, 0.8, Boundary::open,
                 {0.3, 0.7}, 60, 500);
    std::vector<TimeSeries> series = run_qme(config);
    CrossingReport report = first_significant_crossing(series);
    require(!(report.crossing_depth.has_value() && report.significant),
            "unexpected significant non-gaussianity crossing");
  }
  {
    ExperimentConfig config = qme_base(Resource::mana, 8, 3, 0.5,
                                       Boundary::periodic, {0.3, 0.6}, 40,
                                       500);
    config.sample_stride = 2;
    std::vector<TimeSeries> series = run_qme(config);
    CrossingReport report = first_significant_crossing(series);
    require(!(report.crossing_depth.has_value() && report.significant),
            "unexpected significant mana crossing");
  }
}

// ---------------------------------------------------------------------------
// criterion 9: QPME crossings

// Pass rule as stated: the preheated curve exceeds the baseline at t = T at
// two combined standard errors, crosses it at a later depth, and sits below
// it at two combined standard errors somewhere after the crossing.
void check_qpme(ExperimentConfig config, const std::string& name) {
  config.mode = Mode::qpme;
  std::vector<TimeSeries> series = run_qpme(config);
  const TimeSeries& baseline = series[0];
  const TimeSeries& preheated = series[1];
  const int t_heat = config.preheat.t_values[1];

  auto combined_sigma = [&](std::size_t i) {
    return std::sqrt(baseline.stderr_[i] * baseline.stderr_[i] +
                     preheated.stderr_[i] * preheated.stderr_[i]);
  };

  // Locate the grid index of t = T.
  int at_t = -1;
  for (std::size_t i = 0; i < baseline.depths.size(); ++i) {
    if (baseline.depths[i] == t_heat) at_t = static_cast<int>(i);
  }
  require(at_t >= 0, name + ": preheat depth not on the sample grid");
  double gap = preheated.mean[at_t] - baseline.mean[at_t];
  require(gap > 2 * combined_sigma(at_t),
          name + ": preheating does not raise the monotone at t=T");

  CrossingReport report = detect_crossing(preheated, baseline);
  require(report.crossing_depth.has_value(), name + ": no QPME crossing");
  require(*report.crossing_depth >= t_heat,
          name + ": crossing before the preheat ended");
  bool below_after = false;
  for (std::size_t i = 0; i < baseline.depths.size(); ++i) {
    if (baseline.depths[i] <= *report.crossing_depth) continue;
    if (preheated.mean[i] - baseline.mean[i] < -2 * combined_sigma(i)) {
      below_after = true;
    }
  }
  require(below_after,
          name + ": preheated curve never falls 2 sigma below the baseline");
}

void criterion_qpme() {
  {
    ExperimentConfig config =
        qme_base(Resource::non_gaussianity, 12, 2, 0.9, Boundary::open, {},
                 60, 500);
    config.theta = 0.7;
    config.preheat.t_values = {0, 4};
    config.preheat.epsilon_a = 0.25;
    config.preheat.epsilon_b = 1.0;
    check_qpme(config, "non_gaussianity");
  }
  {
    ExperimentConfig config =
        qme_base(Resource::coherence, 12, 2, 0.6, Boundary::periodic, {}, 60,
                 500);
    config.theta = 0.85;
    config.preheat.t_values = {0, 4};
    config.preheat.epsilon_a = 0.2;
    config.preheat.epsilon_b = 0.55;
    check_qpme(config, "coherence");
  }
  {
    ExperimentConfig config =
        qme_base(Resource::imaginarity, 12, 2, 0.6, Boundary::periodic, {},
                 60, 500);
    config.theta = 0.55;
    config.preheat.t_values = {0, 4};
    config.preheat.epsilon_a = 0.55;
    config.preheat.epsilon_b = 0.6;
    check_qpme(config, "imaginarity");
  }
  {
    ExperimentConfig config =
        qme_base(Resource::coherence, 12, 2, 0.6, Boundary::periodic, {}, 60,
                 500);
    config.theta = 0.85;
    config.preheat.t_values = {0, 4};
    config.preheat.epsilon_a = 0.2;
    config.preheat.epsilon_b = 0.55;
    config.preheat.scope = PreheatScope::b_only;
    check_qpme(config, "B-only coherence");
  }
}

// ---------------------------------------------------------------------------
// criterion 10: large-N stabilizer QME

void criterion_stabilizer_qme() {
  ExperimentConfig config;
  config.mode = Mode::qme;
  config.resource = Resource::coherence;
  config.engine = EngineKind::stabilizer;
  config.n_sites = 128;
  config.local_dim = 2;
  config.region_size = 4;
  config.boundary = Boundary::periodic;
  config.p_values = {0.3, 0.9};
  config.epsilon = 1.0;
  config.depth = 60;
  config.n_realizations = 1000;
  config.master_seed = 777;
  std::vector<TimeSeries> series = run_qme(config);
  require(series[1].mean[0] > series[0].mean[0],
          "larger p does not start higher");
  CrossingReport report = detect_crossing(series[1], series[0]);
  require(report.crossing_depth.has_value(), "no stabilizer crossing");
  require(report.significant, "stabilizer crossing not significant");
}

// ---------------------------------------------------------------------------
// criterion 11: markov analyzer

void criterion_markov() {
  Gate gate = fixed_monomial_gate();
  gate.matrix = polar_projection(gate.matrix);
  CMatrix u = build_floquet_unitary(gate, 6);
  ChannelSuperoperator channel = build_channel(u, 6, 2);  // checks CPTP

  // mu_1 = 1, unique on the unit circle, with fixed point 1/4 (eigenvalues
  // and direct application; no eigenvector decomposition needed here).
  Eigen::ComplexEigenSolver<CMatrix> eigen_only(channel.matrix, false);
  int on_circle = 0;
  double max_magnitude = 0;
  for (int i = 0; i < 16; ++i) {
    double magnitude = std::abs(eigen_only.eigenvalues()(i));
    max_magnitude = std::max(max_magnitude, magnitude);
    if (magnitude > 1.0 - 1e-9) ++on_circle;
  }
  require(std::abs(max_magnitude - 1.0) < 1e-9, "leading |mu| is not 1");
  require(on_circle == 1, "steady state not unique on the unit circle");
  DensityMatrix mixed;
  mixed.n_sites = 2;
  mixed.local_dim = 2;
  mixed.matrix = CMatrix::Identity(4, 4) / 4.0;
  MarkovTrajectory fixed_point = evolve_markov(channel, mixed, 1);
  require((fixed_point.states[1].matrix - mixed.matrix)
                  .cwiseAbs()
                  .maxCoeff() < 1e-8,
          "1/4 is not a fixed point of the channel");

  // Slow-mode overlap scan and spectral reconstruction. For the published
  // gate the channel has spectrum {1, 0 x 15} with nontrivial Jordan
  // structure -- the subsystem depolarizes exactly after two periods -- so
  // no biorthonormal mode system exists. channel_spectrum reports this
  // instead of fabricating modes, and this criterion then fails honestly.
  ChannelSpectrum spectrum;
  try {
    spectrum = channel_spectrum(channel);
  } catch (const std::exception& e) {
    throw CheckFailure{std::string("slow-mode scan impossible: ") + e.what() +
                       " (the gate transports both subsystem bits into the "
                       "environment within 2 periods, so all nonunit "
                       "eigenvalues are exactly 0 and defective)"};
  }

  double previous = 1e300;
  DensityMatrix rho_scan;
  rho_scan.n_sites = 2;
  rho_scan.local_dim = 2;
  for (double theta : {0.2, 0.6, 1.0, 1.4}) {
    CVector ket = tilted_site_ket(2, TiltKind::y_tilt, theta);
    PureState pair = product_state(2, 2, ket);
    rho_scan.matrix = pair.amplitudes * pair.amplitudes.adjoint();
    double overlap = slow_mode_overlap(spectrum, rho_scan);
    require(overlap < previous, "slow-mode overlap not decreasing in theta");
    previous = overlap;
  }

  CVector ket = tilted_site_ket(2, TiltKind::y_tilt, 0.9);
  PureState pair = product_state(2, 2, ket);
  DensityMatrix rho0;
  rho0.n_sites = 2;
  rho0.local_dim = 2;
  rho0.matrix = pair.amplitudes * pair.amplitudes.adjoint();
  MarkovTrajectory trajectory = evolve_markov(channel, rho0, 50);
  for (int t = 0; t <= 50; ++t) {
    CMatrix reconstructed = spectral_reconstruction(spectrum, rho0, t);
    require((trajectory.states[t].matrix - reconstructed)
                    .cwiseAbs()
                    .maxCoeff() < 1e-7,
            "spectral reconstruction deviates at step " + std::to_string(t));
  }
}

// ---------------------------------------------------------------------------
// criterion 12: shipped-config determinism at any thread count

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void criterion_determinism() {
  const std::string config_dir = MPEMBA_CONFIG_DIR;
  const std::string work =
      (std::filesystem::temp_directory_path() / "mpemba_acceptance12")
          .string();
  std::filesystem::remove_all(work);
  const std::vector<std::string> configs = {
      "fig1a_coherence.cfg",        "fig1b_imaginarity.cfg",
      "fig1c_nongaussianity.cfg",   "fig1d_mana.cfg",
      "fig2a_qpme_nongaussianity.cfg", "fig2b_qpme_mana.cfg",
      "fig3a_stabilizer_coherence.cfg", "fig3b_qpme_coherence.cfg",
      "fig3c_qpme_imaginarity.cfg", "fig3d_qpme_b_only.cfg",
      "fig4_markov.cfg"};
  for (const std::string& name : configs) {
    // Shrunk replicas: structure and seed stay, realization count drops so
    // the whole set replays quickly at two thread counts.
    std::vector<std::string> overrides = {"depth=8"};
    ExperimentConfig probe = parse_config_file(config_dir + "/" + name);
    if (probe.mode != Mode::markov) {
      overrides.push_back("n_realizations=4");
    }
    if (probe.mode == Mode::qpme) overrides.push_back("T_values=0,2");
    ExperimentConfig config =
        parse_config_file(config_dir + "/" + name, overrides);

    config.threads = 1;
    RunManifest first = run_pipeline(config, work + "/a/" + name);
    config.threads = 4;
    RunManifest second = run_pipeline(config, work + "/b/" + name);
    require(first.output_files.size() == second.output_files.size(),
            name + ": output sets differ");
    for (std::size_t i = 0; i < first.output_files.size(); ++i) {
      require(read_file_bytes(first.output_files[i]) ==
                  read_file_bytes(second.output_files[i]),
              name + ": " + first.output_files[i] + " not byte-identical");
    }
  }
}

struct Criterion {
  int number;
  const char* description;
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected = std::atoi(argv[i + 1]);
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "free-state zeros for all four monotones",
       criterion_free_state_zeros},
      {2, "global conservation along depth-100 free circuits",
       criterion_global_conservation},
      {3, "stabilizer entropies equal dense values on 1000 circuits",
       criterion_stabilizer_dense_equivalence},
      {4, "monomial Clifford subgroup has 768 Clifford elements",
       criterion_monomial_subgroup},
      {5, "gaussian reference entropy equals dense entropy on 100 circuits",
       criterion_majorana_dense_equivalence},
      {6, "QME crossing for coherence at N=12", criterion_qme_coherence},
      {7, "QME crossing for imaginarity at N=12", criterion_qme_imaginarity},
      {8, "no QME crossing for non-Gaussianity and mana",
       criterion_qme_absence},
      {9, "QPME crossings for NG, coherence, imaginarity and B-only preheat",
       criterion_qpme},
      {10, "large-N stabilizer coherence QME at N=128",
       criterion_stabilizer_qme},
      {11, "markov channel analyzer checks", criterion_markov},
      {12, "byte-identical reruns of every shipped config",
       criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (selected != 0 && criterion.number != selected) continue;
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.run();
    } catch (const CheckFailure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (failure.empty()) {
      std::printf("[PASS] criterion %2d (%6.1fs): %s\n", criterion.number,
                  seconds, criterion.description);
    } else {
      ++failures;
      std::printf("[FAIL] criterion %2d (%6.1fs): %s -- %s\n",
                  criterion.number, seconds, criterion.description,
                  failure.c_str());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
