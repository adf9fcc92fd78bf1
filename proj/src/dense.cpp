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

#include "mpemba/dense.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace mpemba {

namespace {

constexpr double kEntropyClip = 1e-12;  // eigenvalues below this count as 0
constexpr double kEigenvalueHardError = -1e-8;

void check_site(const PureState& state, int site) {
  if (site < 0 || site >= state.n_sites) {
    throw std::invalid_argument("site index out of range: " +
                                std::to_string(site));
  }
}

// Offsets of every digit assignment of `sites` into the global index,
// enumerated in odometer order (last site is the fastest digit).
std::vector<std::int64_t> digit_offsets(int n_sites, int local_dim,
                                        const std::vector<int>& sites) {
  std::vector<std::int64_t> strides(sites.size());
  for (std::size_t k = 0; k < sites.size(); ++k) {
    strides[k] = pow_int(local_dim, n_sites - 1 - sites[k]);
  }
  std::int64_t count = pow_int(local_dim, static_cast<int>(sites.size()));
  std::vector<std::int64_t> offsets(count);
  std::vector<int> digits(sites.size(), 0);
  std::int64_t current = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    offsets[i] = current;
    for (int k = static_cast<int>(sites.size()) - 1; k >= 0; --k) {
      if (++digits[k] < local_dim) {
        current += strides[k];
        break;
      }
      digits[k] = 0;
      current -= strides[k] * (local_dim - 1);
    }
  }
  return offsets;
}

}  // namespace

std::int64_t pow_int(int base, int exp) {
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

bool Gate::is_identity(double tol) const {
  return matrix.isIdentity(tol);
}

CMatrix identity_matrix(std::int64_t dim) {
  return CMatrix::Identity(dim, dim);
}

Gate identity_gate(int local_dim, int arity) {
  Gate g;
  g.arity = arity;
  g.local_dim = local_dim;
  g.matrix = identity_matrix(pow_int(local_dim, arity));
  return g;
}

void validate_state(const PureState& state, double tol) {
  if (state.local_dim != 2 && state.local_dim != 3) {
    throw std::invalid_argument("local_dim must be 2 or 3");
  }
  if (state.dim() != pow_int(state.local_dim, state.n_sites)) {
    throw std::invalid_argument("amplitude vector length mismatch");
  }
  double norm2 = state.amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol) {
    throw std::invalid_argument("state norm deviates from 1 by " +
                                std::to_string(std::abs(norm2 - 1.0)));
  }
}

void validate_density(const DensityMatrix& rho, double tol) {
  const CMatrix& m = rho.matrix;
  if (m.rows() != m.cols() ||
      m.rows() != pow_int(rho.local_dim, rho.n_sites)) {
    throw std::invalid_argument("density matrix dimension mismatch");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("density matrix not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > tol ||
      std::abs(m.trace().imag()) > tol) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m,
                                                Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-8) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

PureState product_state(int n_sites, int local_dim, const CVector& local_ket) {
  if (local_ket.size() != local_dim) {
    throw std::invalid_argument("local ket length does not match local_dim");
  }
  if (std::abs(local_ket.squaredNorm() - 1.0) > 1e-8) {
    throw std::invalid_argument("local ket is not normalized");
  }
  PureState state;
  state.n_sites = n_sites;
  state.local_dim = local_dim;
  state.amplitudes = CVector::Zero(pow_int(local_dim, n_sites));
  state.amplitudes(0) = 1.0;
  std::int64_t filled = 1;
  for (int site = 0; site < n_sites; ++site) {
    // Extend |prefix> -> |prefix> (x) |ket>, back to front.
    for (std::int64_t i = filled - 1; i >= 0; --i) {
      Complex a = state.amplitudes(i);
      for (int b = local_dim - 1; b >= 0; --b) {
        state.amplitudes(i * local_dim + b) = a * local_ket(b);
      }
    }
    filled *= local_dim;
  }
  return state;
}

CVector tilted_site_ket(int local_dim, TiltKind kind, double theta) {
  if (kind == TiltKind::y_tilt || kind == TiltKind::x_tilt) {
    if (local_dim != 2) {
      throw std::invalid_argument("qubit tilt requires local_dim = 2");
    }
    CVector ket(2);
    if (kind == TiltKind::y_tilt) {
      ket << std::cos(theta / 2), std::sin(theta / 2);
    } else {
      ket << std::cos(theta / 2), Complex(0, -std::sin(theta / 2));
    }
    return ket;
  }
  if (local_dim != 3) {
    throw std::invalid_argument("qutrit tilt requires local_dim = 3");
  }
  // Generator X + X^dag with X|k> = |k+1 mod 3>.
  CMatrix generator = CMatrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) {
    generator((k + 1) % 3, k) += 1.0;
    generator(k, (k + 1) % 3) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(generator);
  CVector phases(3);
  for (int i = 0; i < 3; ++i) {
    phases(i) = std::exp(Complex(0, -theta * solver.eigenvalues()(i)));
  }
  CMatrix u = solver.eigenvectors() * phases.asDiagonal() *
              solver.eigenvectors().adjoint();
  return u.col(0);
}

PureState tilted_state(int n_sites, int local_dim, TiltKind kind,
                       double theta) {
  return product_state(n_sites, local_dim,
                       tilted_site_ket(local_dim, kind, theta));
}

void apply_two_site_gate_inplace(PureState& state, const Gate& gate,
                                 int site_x, int site_y) {
  check_site(state, site_x);
  check_site(state, site_y);
  if (site_x == site_y) {
    throw std::invalid_argument("gate sites must be distinct");
  }
  if (gate.arity != 2 || gate.local_dim != state.local_dim) {
    throw std::invalid_argument("gate does not match state dimensions");
  }
  const int d = state.local_dim;
  const int dd = d * d;
  const int n = state.n_sites;
  const std::int64_t stride_x = pow_int(d, n - 1 - site_x);
  const std::int64_t stride_y = pow_int(d, n - 1 - site_y);

  // Row-major copy of the gate for the inner kernel.
  std::array<Complex, 81> g;
  for (int r = 0; r < dd; ++r) {
    for (int c = 0; c < dd; ++c) g[r * dd + c] = gate.matrix(r, c);
  }

  const int p = std::min(site_x, site_y);
  const int q = std::max(site_x, site_y);
  const std::int64_t stride_p = pow_int(d, n - 1 - p);
  const std::int64_t stride_q = pow_int(d, n - 1 - q);
  const std::int64_t hi_count = pow_int(d, p);
  const std::int64_t mid_count = pow_int(d, q - p - 1);
  const std::int64_t lo_count = stride_q;

  Complex* amps = state.amplitudes.data();
  std::array<Complex, 9> in;
  std::array<Complex, 9> out;
  for (std::int64_t h = 0; h < hi_count; ++h) {
    const std::int64_t h_base = h * stride_p * d;
    for (std::int64_t m = 0; m < mid_count; ++m) {
      const std::int64_t m_base = h_base + m * stride_q * d;
      for (std::int64_t l = 0; l < lo_count; ++l) {
        const std::int64_t base = m_base + l;
        for (int a = 0; a < d; ++a) {
          for (int b = 0; b < d; ++b) {
            in[a * d + b] = amps[base + a * stride_x + b * stride_y];
          }
        }
        for (int r = 0; r < dd; ++r) {
          Complex acc = 0;
          const Complex* row = &g[r * dd];
          for (int c = 0; c < dd; ++c) acc += row[c] * in[c];
          out[r] = acc;
        }
        for (int a = 0; a < d; ++a) {
          for (int b = 0; b < d; ++b) {
            amps[base + a * stride_x + b * stride_y] = out[a * d + b];
          }
        }
      }
    }
  }
}

PureState apply_two_site_gate(const PureState& state, const Gate& gate,
                              int site_x, int site_y) {
  PureState result = state;
  apply_two_site_gate_inplace(result, gate, site_x, site_y);
  return result;
}

DensityMatrix reduced_density(const PureState& state,
                              const std::vector<int>& region) {
  if (region.empty()) {
    throw std::invalid_argument("region must be nonempty");
  }
  for (std::size_t k = 0; k < region.size(); ++k) {
    check_site(state, region[k]);
    if (k > 0 && region[k] <= region[k - 1]) {
      throw std::invalid_argument("region must be strictly ascending");
    }
  }
  std::vector<int> complement;
  complement.reserve(state.n_sites - region.size());
  {
    std::size_t k = 0;
    for (int site = 0; site < state.n_sites; ++site) {
      if (k < region.size() && region[k] == site) {
        ++k;
      } else {
        complement.push_back(site);
      }
    }
  }
  const std::vector<std::int64_t> region_off =
      digit_offsets(state.n_sites, state.local_dim, region);
  const std::vector<std::int64_t> env_off =
      digit_offsets(state.n_sites, state.local_dim, complement);

  const std::int64_t dim_a = static_cast<std::int64_t>(region_off.size());
  DensityMatrix rho;
  rho.n_sites = static_cast<int>(region.size());
  rho.local_dim = state.local_dim;
  rho.matrix = CMatrix::Zero(dim_a, dim_a);
  const Complex* amps = state.amplitudes.data();
  for (std::int64_t a = 0; a < dim_a; ++a) {
    for (std::int64_t b = a; b < dim_a; ++b) {
      Complex acc = 0;
      const std::int64_t off_a = region_off[a];
      const std::int64_t off_b = region_off[b];
      for (std::int64_t e : env_off) {
        acc += amps[off_a + e] * std::conj(amps[off_b + e]);
      }
      rho.matrix(a, b) = acc;
      if (b != a) rho.matrix(b, a) = std::conj(acc);
    }
  }
  return rho;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix,
                                                Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (std::int64_t i = 0; i < solver.eigenvalues().size(); ++i) {
    double lambda = solver.eigenvalues()(i);
    if (lambda < kEigenvalueHardError) {
      throw std::invalid_argument("eigenvalue " + std::to_string(lambda) +
                                  " below positivity tolerance");
    }
    if (lambda <= kEntropyClip) continue;
    entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

Complex pauli_string_expectation(const PureState& state,
                                 const std::string& labels) {
  if (state.local_dim != 2) {
    throw std::invalid_argument("pauli strings require local_dim = 2");
  }
  if (static_cast<int>(labels.size()) != state.n_sites) {
    throw std::invalid_argument("label string length mismatch");
  }
  std::uint64_t flip_mask = 0;  // X and Y sites
  std::uint64_t sign_mask = 0;  // Z and Y sites
  int y_count = 0;
  for (int site = 0; site < state.n_sites; ++site) {
    std::uint64_t bit = 1ULL << (state.n_sites - 1 - site);
    switch (labels[site]) {
      case 'I':
        break;
      case 'X':
        flip_mask |= bit;
        break;
      case 'Y':
        flip_mask |= bit;
        sign_mask |= bit;
        ++y_count;
        break;
      case 'Z':
        sign_mask |= bit;
        break;
      default:
        throw std::invalid_argument("invalid pauli label '" +
                                    std::string(1, labels[site]) + "'");
    }
  }
  static const Complex i_powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex prefactor = i_powers[y_count % 4];
  const Complex* amps = state.amplitudes.data();
  Complex acc = 0;
  const std::uint64_t dim = static_cast<std::uint64_t>(state.dim());
  for (std::uint64_t i = 0; i < dim; ++i) {
    double sign = (__builtin_popcountll(i & sign_mask) & 1) ? -1.0 : 1.0;
    acc += sign * amps[i] * std::conj(amps[i ^ flip_mask]);
  }
  return prefactor * acc;
}

}  // namespace mpemba
