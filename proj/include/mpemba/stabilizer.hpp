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

#ifndef MPEMBA_STABILIZER_HPP
#define MPEMBA_STABILIZER_HPP

#include <cstdint>
#include <vector>

#include "mpemba/rng.hpp"

namespace mpemba {

/// Stabilizer state of N qubits as N generator rows
/// g_mu = i^{phase_mu} prod_i X_i^{x(mu,i)} Z_i^{z(mu,i)},
/// with the X/Z bit matrices packed into 64-bit words per row.
///
/// Phases are tracked for state reconstruction, but the entropy queries below
/// ignore them: reduced states of stabilizer states are normalized projectors,
/// so their spectra are flat and phase-independent.
struct StabilizerTableau {
  int n_sites = 0;
  int words_per_row = 0;
  std::vector<std::uint64_t> x_bits;  // n_sites rows * words_per_row
  std::vector<std::uint64_t> z_bits;
  std::vector<std::uint8_t> phases;  // exponents of i, mod 4

  bool x(int row, int site) const {
    return (x_bits[static_cast<std::size_t>(row) * words_per_row + site / 64] >>
            (site % 64)) & 1;
  }
  bool z(int row, int site) const {
    return (z_bits[static_cast<std::size_t>(row) * words_per_row + site / 64] >>
            (site % 64)) & 1;
  }
  void set_x(int row, int site, bool value);
  void set_z(int row, int site, bool value);
};

/// Product state with each site stabilized by X with probability p (|+>) and
/// by Z otherwise (|0>). One Bernoulli draw per site.
StabilizerTableau init_hadamard_product(int n_sites, double p, RngStream& rng);

/// Conjugates every generator by gate `gate_index` of
/// enumerate_monomial_cliffords() acting on (site_x, site_y), via precomputed
/// bit/phase lookup tables.
void apply_monomial_clifford(StabilizerTableau& tab, int gate_index,
                             int site_x, int site_y);

/// Rank over GF(2) of the rows (packed words, n_cols significant bits).
int gf2_rank(std::vector<std::uint64_t> rows, int n_rows, int n_cols,
             int words);

/// Entanglement entropy in bits of a contiguous region:
/// rank of the X/Z column block on the region, minus the region size.
int entanglement_entropy(const StabilizerTableau& tab, int region_start,
                         int region_size);

/// Entropy of the computational-basis-dephased reduced state:
/// rank of [all X columns | Z columns on the complement] minus the
/// complement size.
int diagonal_entropy(const StabilizerTableau& tab, int region_start,
                     int region_size);

/// Relative entropy of coherence of the region: diagonal minus entanglement
/// entropy. Always a nonnegative integer.
int coherence_stab(const StabilizerTableau& tab, int region_start,
                   int region_size);

/// Checks generator independence and mutual commutation; throws on failure.
void validate_tableau(const StabilizerTableau& tab);

}  // namespace mpemba

#endif
