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

#ifndef MPEMBA_MARKOV_HPP
#define MPEMBA_MARKOV_HPP

#include <vector>

#include "mpemba/dense.hpp"
#include "mpemba/protocols.hpp"

namespace mpemba {

/// The fixed coherence-preserving two-qubit gate used by the channel
/// analyzer. The published constants are 8-digit truncations, so the matrix
/// is unitary only to about 2e-8; polar_projection() restores exact
/// unitarity when needed downstream.
Gate fixed_monomial_gate();

/// Closest unitary to `m` in Frobenius norm (polar factor via SVD).
CMatrix polar_projection(const CMatrix& m);

/// Embeds a two-site gate matrix into the full qudit chain.
CMatrix embed_two_site_unitary(const CMatrix& gate, int n_sites,
                               int local_dim, int site_x, int site_y);

/// One Floquet period: the layer of odd bonds (0,1), (2,3), ... applied
/// first, then the layer of even bonds (1,2), (3,4), ...; open boundaries.
/// n_sites must be even and at most 12.
CMatrix build_floquet_unitary(const Gate& gate, int n_sites);

/// Superoperator of E[rho] = Tr_env[U (rho (x) pi_env) U^dag] with the
/// environment reset to the maximally mixed state each application. Acts on
/// column-vectorized density matrices of the first `subsystem_sites` qubits.
struct ChannelSuperoperator {
  int subsystem_sites = 0;
  CMatrix matrix;  // 4^subsystem_sites square
};

/// Builds the channel and checks trace preservation and Choi positivity;
/// throws on violation.
ChannelSuperoperator build_channel(const CMatrix& u, int n_sites,
                                   int subsystem_sites);

/// Eigensystem of the channel, sorted by descending eigenvalue modulus, with
/// left/right modes biorthonormalized (Tr(l_j^dag r_k) = delta_jk).
struct ChannelSpectrum {
  std::vector<Complex> eigenvalues;
  std::vector<CMatrix> right_modes;
  std::vector<CMatrix> left_modes;
  bool degenerate_unit_eigenvalue = false;
};

ChannelSpectrum channel_spectrum(const ChannelSuperoperator& channel);

/// Eigenvalues only, sorted by descending modulus. Works for defective
/// channels, where channel_spectrum refuses to fabricate mode systems.
std::vector<Complex> channel_eigenvalues(const ChannelSuperoperator& channel);

/// The unit-trace eigenvalue-1 mode.
DensityMatrix steady_state(const ChannelSpectrum& spectrum);

/// |Tr(l_2^dag rho0)| for the slowest decaying mode; when several modes share
/// |mu_2| within 1e-9 the root-sum-square over the degenerate block is
/// returned. Throws when the unit eigenvalue itself is degenerate.
double slow_mode_overlap(const ChannelSpectrum& spectrum,
                         const DensityMatrix& rho0);

/// sum_k mu_k^t Tr(l_k^dag rho0) r_k  (the discrete-time mode expansion).
CMatrix spectral_reconstruction(const ChannelSpectrum& spectrum,
                                const DensityMatrix& rho0, int steps);

struct MarkovTrajectory {
  std::vector<DensityMatrix> states;  // steps + 1 entries
  TimeSeries coherence_series;
};

/// Repeated channel application with the coherence monotone recorded each
/// step. Trace and positivity are checked throughout.
MarkovTrajectory evolve_markov(const ChannelSuperoperator& channel,
                               const DensityMatrix& rho0, int steps,
                               const std::string& label = "");

}  // namespace mpemba

#endif
