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

#ifndef MPEMBA_MONOTONES_HPP
#define MPEMBA_MONOTONES_HPP

#include <array>
#include <vector>

#include "mpemba/dense.hpp"

namespace mpemba {

/// H(x) = -x log2 x - (1-x) log2 (1-x).
double binary_entropy(double x);

/// Shannon entropy in bits of a probability vector; entries below 1e-12
/// contribute zero.
double shannon_entropy_bits(const std::vector<double>& probabilities);

/// Relative entropy of coherence: S(dephased rho) - S(rho), clamped to >= 0.
/// The dephasing keeps the computational-basis diagonal.
double coherence(const DensityMatrix& rho);

/// Relative entropy of imaginarity: S(elementwise real part) - S(rho),
/// clamped to >= 0.
double imaginarity(const DensityMatrix& rho);

/// Antisymmetric matrix of quadratic Majorana expectations
/// M_ab = -(i/2) <[g_a, g_b]> for the 2*N_A modes of a prefix region.
struct MajoranaCorrelationMatrix {
  int n_modes = 0;
  RMatrix matrix;
};

/// Jordan-Wigner Majorana correlations of the prefix {0, ..., prefix_size-1},
/// evaluated as global Pauli-string expectations. Region restriction to a
/// prefix keeps every mode's string inside the region after pairwise
/// products.
MajoranaCorrelationMatrix majorana_correlation_matrix(const PureState& state,
                                                      int prefix_size);

/// Entropy of the Gaussian reference state: sum_j H((1 + lambda_j)/2) over
/// the N_A non-negative eigenvalue magnitudes of M, clamped to [0, 1].
double gaussian_entropy(const MajoranaCorrelationMatrix& m);

/// Relative entropy of Gaussianity of the prefix region:
/// gaussian_entropy(M) - S(rho_A), clamped to >= 0.
double non_gaussianity(const PureState& state, int prefix_size);

/// Qutrit Weyl operators. X|k> = |k+1 mod 3>, Z|k> = omega^k |k> with
/// omega = exp(2 pi i/3); displacement D(x, z) = tau^{xz} X^x Z^z with
/// tau = exp(i pi (d+1)/d). This tau makes D(x,z)^dag = D(-x,-z), which is
/// what the Hermiticity of the phase-point operators rests on.
CMatrix qutrit_x();
CMatrix qutrit_z();
CMatrix qutrit_displacement(int x, int z);

/// Discrete phase-space operators A_r = P_r A_0 P_r^dag with
/// A_0 = sum_r P_r / d^N, for chains of qutrits. Operators factorize over
/// sites, so the set stores the nine single-site operators and materializes
/// multi-site ones on demand.
class PhasePointOperatorSet {
 public:
  explicit PhasePointOperatorSet(int n_sites);

  int n_sites() const { return n_sites_; }
  int local_dim() const { return 3; }
  std::int64_t count() const { return pow_int(9, n_sites_); }

  const CMatrix& site_operator(int r) const { return site_ops_[r]; }
  /// Full d^N x d^N operator for the flat phase-space index r in [0, 9^N).
  CMatrix operator_at(std::int64_t r) const;

 private:
  int n_sites_;
  std::array<CMatrix, 9> site_ops_;
};

/// Cached per-size operator set (write-once, shared across threads).
const PhasePointOperatorSet& phase_point_operators(int n_sites);

/// Mana M(rho) = log2(sum_r |W_r|), W_r = Tr(A_r rho)/d^N, for qutrit
/// density matrices on up to 6 sites. Clamped to >= 0.
double mana(const DensityMatrix& rho);

/// Discrete Wigner function of rho as a flat vector over phase space.
std::vector<double> wigner_function(const DensityMatrix& rho);

// Monotones of a pure global state, evaluated without forming the full
// density matrix. Used by the conservation checks.
double coherence_global(const PureState& state);
double imaginarity_global(const PureState& state);
double non_gaussianity_global(const PureState& state);
double mana_global(const PureState& state);

}  // namespace mpemba

#endif
