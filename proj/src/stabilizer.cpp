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

#include "mpemba/stabilizer.hpp"

#include <array>
#include <memory>
#include <stdexcept>

#include "mpemba/ensembles.hpp"

namespace mpemba {

namespace {

struct PauliAction {
  std::uint8_t bits;   // mx nx my ny, mx most significant
  std::uint8_t phase;  // exponent of i, mod 4
};

// Conjugation tables for the 768 monomial Cliffords over all 16 two-qubit
// Paulis in X^m Z^n canonical form. Built once from the gate matrices.
const std::array<std::array<PauliAction, 16>, 768>& conjugation_tables() {
  static const auto tables = [] {
    auto result =
        std::make_unique<std::array<std::array<PauliAction, 16>, 768>>();
    const std::vector<Gate>& gates = enumerate_monomial_cliffords();

    const Complex i_unit(0, 1);
    std::array<CMatrix, 16> paulis;
    CMatrix x(2, 2), z(2, 2), id = CMatrix::Identity(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    auto xz_power = [&](int m, int n) {
      CMatrix out = id;
      if (m) out = x * out;
      if (n) out = out * z;
      return out;
    };
    for (int code = 0; code < 16; ++code) {
      int mx = (code >> 3) & 1, nx = (code >> 2) & 1;
      int my = (code >> 1) & 1, ny = code & 1;
      CMatrix first = xz_power(mx, nx);
      CMatrix second = xz_power(my, ny);
      CMatrix full(4, 4);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          full.block(2 * i, 2 * j, 2, 2) = first(i, j) * second;
        }
      }
      paulis[code] = full;
    }

    for (int g = 0; g < 768; ++g) {
      const CMatrix& u = gates[g].matrix;
      for (int code = 0; code < 16; ++code) {
        CMatrix v = u * paulis[code] * u.adjoint();
        bool matched = false;
        for (int out = 0; out < 16 && !matched; ++out) {
          for (int k = 0; k < 4 && !matched; ++k) {
            Complex scale = std::pow(i_unit, k);
            if ((v - scale * paulis[out]).cwiseAbs().maxCoeff() < 1e-9) {
              (*result)[g][code] = {static_cast<std::uint8_t>(out),
                                    static_cast<std::uint8_t>(k)};
              matched = true;
            }
          }
        }
        if (!matched) {
          throw std::logic_error("monomial gate image is not a pauli string");
        }
      }
    }
    return result;
  }();
  return *tables;
}

}  // namespace

void StabilizerTableau::set_x(int row, int site, bool value) {
  std::uint64_t& word =
      x_bits[static_cast<std::size_t>(row) * words_per_row + site / 64];
  std::uint64_t mask = 1ULL << (site % 64);
  word = value ? (word | mask) : (word & ~mask);
}

void StabilizerTableau::set_z(int row, int site, bool value) {
  std::uint64_t& word =
      z_bits[static_cast<std::size_t>(row) * words_per_row + site / 64];
  std::uint64_t mask = 1ULL << (site % 64);
  word = value ? (word | mask) : (word & ~mask);
}

StabilizerTableau init_hadamard_product(int n_sites, double p,
                                        RngStream& rng) {
  if (p < 0 || p > 1) {
    throw std::invalid_argument("hadamard probability must lie in [0, 1]");
  }
  StabilizerTableau tab;
  tab.n_sites = n_sites;
  tab.words_per_row = (n_sites + 63) / 64;
  tab.x_bits.assign(static_cast<std::size_t>(n_sites) * tab.words_per_row, 0);
  tab.z_bits.assign(static_cast<std::size_t>(n_sites) * tab.words_per_row, 0);
  tab.phases.assign(n_sites, 0);
  for (int site = 0; site < n_sites; ++site) {
    if (rng.bernoulli(p)) {
      tab.set_x(site, site, true);
    } else {
      tab.set_z(site, site, true);
    }
  }
  return tab;
}

void apply_monomial_clifford(StabilizerTableau& tab, int gate_index,
                             int site_x, int site_y) {
  if (gate_index < 0 || gate_index >= 768) {
    throw std::invalid_argument("monomial gate index out of range");
  }
  if (site_x < 0 || site_x >= tab.n_sites || site_y < 0 ||
      site_y >= tab.n_sites || site_x == site_y) {
    throw std::invalid_argument("invalid gate sites");
  }
  const auto& table = conjugation_tables()[gate_index];
  for (int row = 0; row < tab.n_sites; ++row) {
    int code = (tab.x(row, site_x) << 3) | (tab.z(row, site_x) << 2) |
               (tab.x(row, site_y) << 1) | tab.z(row, site_y);
    if (code == 0) continue;  // identity on the bond
    PauliAction action = table[code];
    tab.set_x(row, site_x, (action.bits >> 3) & 1);
    tab.set_z(row, site_x, (action.bits >> 2) & 1);
    tab.set_x(row, site_y, (action.bits >> 1) & 1);
    tab.set_z(row, site_y, action.bits & 1);
    tab.phases[row] = (tab.phases[row] + action.phase) & 3;
  }
}

int gf2_rank(std::vector<std::uint64_t> rows, int n_rows, int n_cols,
             int words) {
  int rank = 0;
  for (int col = 0; col < n_cols && rank < n_rows; ++col) {
    const int word = col / 64;
    const std::uint64_t mask = 1ULL << (col % 64);
    int pivot = -1;
    for (int r = rank; r < n_rows; ++r) {
      if (rows[static_cast<std::size_t>(r) * words + word] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int w = 0; w < words; ++w) {
        std::swap(rows[static_cast<std::size_t>(pivot) * words + w],
                  rows[static_cast<std::size_t>(rank) * words + w]);
      }
    }
    for (int r = rank + 1; r < n_rows; ++r) {
      if (rows[static_cast<std::size_t>(r) * words + word] & mask) {
        for (int w = 0; w < words; ++w) {
          rows[static_cast<std::size_t>(r) * words + w] ^=
              rows[static_cast<std::size_t>(rank) * words + w];
        }
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

void check_region(const StabilizerTableau& tab, int region_start,
                  int region_size) {
  if (region_size < 1 || region_start < 0 ||
      region_start + region_size > tab.n_sites) {
    throw std::invalid_argument("invalid contiguous region");
  }
}

}  // namespace

int entanglement_entropy(const StabilizerTableau& tab, int region_start,
                         int region_size) {
  check_region(tab, region_start, region_size);
  const int n_cols = 2 * region_size;
  const int words = (n_cols + 63) / 64;
  std::vector<std::uint64_t> rows(
      static_cast<std::size_t>(tab.n_sites) * words, 0);
  for (int row = 0; row < tab.n_sites; ++row) {
    for (int k = 0; k < region_size; ++k) {
      if (tab.x(row, region_start + k)) {
        rows[static_cast<std::size_t>(row) * words + k / 64] |=
            1ULL << (k % 64);
      }
      int col = region_size + k;
      if (tab.z(row, region_start + k)) {
        rows[static_cast<std::size_t>(row) * words + col / 64] |=
            1ULL << (col % 64);
      }
    }
  }
  return gf2_rank(std::move(rows), tab.n_sites, n_cols, words) - region_size;
}

int diagonal_entropy(const StabilizerTableau& tab, int region_start,
                     int region_size) {
  check_region(tab, region_start, region_size);
  const int n = tab.n_sites;
  const int n_env = n - region_size;
  const int n_cols = n + n_env;
  const int words = (n_cols + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words, 0);
  for (int row = 0; row < n; ++row) {
    std::uint64_t* out = &rows[static_cast<std::size_t>(row) * words];
    for (int site = 0; site < n; ++site) {
      if (tab.x(row, site)) out[site / 64] |= 1ULL << (site % 64);
    }
    int col = n;
    for (int site = 0; site < n; ++site) {
      if (site >= region_start && site < region_start + region_size) continue;
      if (tab.z(row, site)) out[col / 64] |= 1ULL << (col % 64);
      ++col;
    }
  }
  return gf2_rank(std::move(rows), n, n_cols, words) - n_env;
}

int coherence_stab(const StabilizerTableau& tab, int region_start,
                   int region_size) {
  int value = diagonal_entropy(tab, region_start, region_size) -
              entanglement_entropy(tab, region_start, region_size);
  if (value < 0) {
    throw std::logic_error("stabilizer coherence came out negative");
  }
  return value;
}

void validate_tableau(const StabilizerTableau& tab) {
  const int n = tab.n_sites;
  const int words = tab.words_per_row;
  // Independence: rank of [X | Z] must be n.
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * 2 * words, 0);
  for (int row = 0; row < n; ++row) {
    for (int w = 0; w < words; ++w) {
      rows[static_cast<std::size_t>(row) * 2 * words + w] =
          tab.x_bits[static_cast<std::size_t>(row) * words + w];
      rows[static_cast<std::size_t>(row) * 2 * words + words + w] =
          tab.z_bits[static_cast<std::size_t>(row) * words + w];
    }
  }
  if (gf2_rank(std::move(rows), n, 2 * 64 * words, 2 * words) != n) {
    throw std::runtime_error("stabilizer generators are dependent");
  }
  // Commutation: symplectic product of every pair must vanish.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int parity = 0;
      for (int w = 0; w < words; ++w) {
        std::uint64_t cross =
            (tab.x_bits[static_cast<std::size_t>(a) * words + w] &
             tab.z_bits[static_cast<std::size_t>(b) * words + w]) ^
            (tab.z_bits[static_cast<std::size_t>(a) * words + w] &
             tab.x_bits[static_cast<std::size_t>(b) * words + w]);
        parity ^= __builtin_popcountll(cross) & 1;
      }
      if (parity) {
        throw std::runtime_error("stabilizer generators do not commute");
      }
    }
  }
}

}  // namespace mpemba
