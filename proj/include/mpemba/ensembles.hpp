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

#ifndef MPEMBA_ENSEMBLES_HPP
#define MPEMBA_ENSEMBLES_HPP

#include <array>
#include <functional>
#include <vector>

#include "mpemba/dense.hpp"
#include "mpemba/rng.hpp"

namespace mpemba {

enum class GateFamily {
  coherence,
  orthogonal,
  gaussian,
  haar,
  qutrit_clifford,
  monomial_clifford,
};

struct EnsembleSpec {
  GateFamily family = GateFamily::coherence;
  int local_dim = 2;
  double epsilon = 1.0;  // probability of a nontrivial gate per bond per layer
  double swap_probability = 0.5;  // coherence family only
  double h_stddev = 1.0;          // gaussian family only

  void validate() const;  // epsilon range and family/local_dim compatibility
};

using GateSampler = std::function<Gate(RngStream&)>;

/// Sampler for one bond of a brickwork layer under the given ensemble.
/// bond_site is the left site of the bond (the gaussian family is the only
/// one that requires nearest-neighbor bonds).
GateSampler ensemble_sampler(const EnsembleSpec& spec, int bond_site = 0);

/// Two-qubit gate exp(-i sum_{a,b in {0,1}} alpha_ab Z^a (x) Z^b) * S with
/// the four phases uniform on [0, 2pi) and S either the identity or SWAP.
/// The result is monomial in the computational basis, so it leaves the
/// distribution of |amplitudes|^2 of any global state invariant.
Gate sample_coherence_gate(RngStream& rng, double swap_probability = 0.5);

/// Deterministic variant: alpha indexed as alpha[2a + b].
Gate coherence_gate_from_params(const std::array<double, 4>& alpha,
                                bool swap);

/// Two-qubit gate exp(-i alpha (X(x)Y - Y(x)X)/2), alpha uniform on [0, 2pi).
/// The matrix is real orthogonal.
Gate sample_orthogonal_gate(RngStream& rng);
Gate orthogonal_gate_from_alpha(double alpha);

/// Fermionic Gaussian two-qubit gate for the nearest-neighbor bond
/// (bond_site, bond_site + 1), built from a random real antisymmetric
/// quadratic form over the bond's four Majorana modes.
Gate sample_gaussian_gate(RngStream& rng, int bond_site, double h_stddev = 1.0);

/// Deterministic Gaussian gate for a given antisymmetric coefficient matrix;
/// split out so the correlation-matrix rotation convention can be pinned by
/// tests. Applies exp(sum_{a,b} h_ab g_a g_b) with g_1..g_4 = X(x)I, Y(x)I,
/// Z(x)X, Z(x)Y, under which the Majorana correlation matrix of a state
/// transforms as M -> e^{4h} M e^{-4h}.
Gate gaussian_gate_from_h(const RMatrix& h);

/// Haar-distributed unitary on U(local_dim^2) via Ginibre + QR with phase
/// correction.
Gate sample_haar_gate(RngStream& rng, int local_dim);

/// All two-qubit Clifford gates (modulo global phase) that are monomial in
/// the computational basis: 24 affine bit permutations times 32 diagonal
/// Cliffords, 768 in total. Element 0 is the identity. The list is built once
/// and cached.
const std::vector<Gate>& enumerate_monomial_cliffords();

/// Two-qutrit Clifford built as a word in the generator set
/// {F, S, X, Z on each qutrit; CZ; SUM in both orientations}.
/// An empty word gives the identity.
Gate qutrit_clifford_word(const std::vector<int>& word);
int qutrit_clifford_generator_count();

/// Random two-qutrit Clifford: a word of `word_length` uniform generator
/// draws. Not exactly uniform over the Clifford group; every sample is
/// exactly Clifford, which is what the free dynamics requires.
Gate sample_qutrit_clifford(RngStream& rng, int word_length = 24);

/// With probability epsilon returns sampler(rng), else the identity gate.
/// Exactly one Bernoulli draw is consumed either way, so streams stay aligned
/// across epsilon values.
Gate dilute(RngStream& rng, double epsilon, const GateSampler& sampler,
            int local_dim = 2);

}  // namespace mpemba

#endif
