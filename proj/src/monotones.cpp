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

#include "mpemba/monotones.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace mpemba {

namespace {

constexpr double kClampTolerance = 1e-9;

double clamp_nonnegative(double value) {
  if (value < -kClampTolerance) {
    throw std::runtime_error("monotone value " + std::to_string(value) +
                             " below clamp tolerance");
  }
  return value > 0 ? value : 0.0;
}

void check_density_shape(const DensityMatrix& rho) {
  if (rho.matrix.rows() != rho.matrix.cols() ||
      rho.matrix.rows() != pow_int(rho.local_dim, rho.n_sites)) {
    throw std::invalid_argument("density matrix dimension mismatch");
  }
  if ((rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-8) {
    throw std::invalid_argument("density matrix not Hermitian");
  }
}

// Single-qubit Pauli labels 0..3 = I, X, Y, Z. Products pick up powers of i.
struct PauliProduct {
  int label;
  int i_power;  // exponent of i, mod 4
};

PauliProduct pauli_mul(int a, int b) {
  if (a == 0) return {b, 0};
  if (b == 0) return {a, 0};
  if (a == b) return {0, 0};
  // XY=iZ, YZ=iX, ZX=iY and the reversed orders flip the sign.
  static const int third[4][4] = {{0, 0, 0, 0},
                                  {0, 0, 3, 2},
                                  {0, 3, 0, 1},
                                  {0, 2, 1, 0}};
  bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
  return {third[a][b], forward ? 1 : 3};
}

char pauli_char(int label) { return "IXYZ"[label]; }

// Jordan-Wigner Majorana mode 2m+t (t in {0,1}): Z-string on sites < m,
// then X (t=0) or Y (t=1) at site m.
std::vector<int> majorana_labels(int n_sites, int mode) {
  int site = mode / 2;
  int type = mode % 2;
  std::vector<int> labels(n_sites, 0);
  for (int i = 0; i < site; ++i) labels[i] = 3;
  labels[site] = type == 0 ? 1 : 2;
  return labels;
}

}  // namespace

double binary_entropy(double x) {
  double h = 0;
  if (x > 1e-12) h -= x * std::log2(x);
  if (x < 1 - 1e-12) h -= (1 - x) * std::log2(1 - x);
  return h;
}

double shannon_entropy_bits(const std::vector<double>& probabilities) {
  double s = 0;
  for (double p : probabilities) {
    if (p > 1e-12) s -= p * std::log2(p);
  }
  return s;
}

double coherence(const DensityMatrix& rho) {
  check_density_shape(rho);
  std::vector<double> diag(rho.matrix.rows());
  for (Eigen::Index i = 0; i < rho.matrix.rows(); ++i) {
    diag[i] = rho.matrix(i, i).real();
  }
  return clamp_nonnegative(shannon_entropy_bits(diag) -
                           von_neumann_entropy(rho));
}

double imaginarity(const DensityMatrix& rho) {
  check_density_shape(rho);
  DensityMatrix real_part = rho;
  real_part.matrix = (rho.matrix + rho.matrix.conjugate()) / 2.0;
  return clamp_nonnegative(von_neumann_entropy(real_part) -
                           von_neumann_entropy(rho));
}

MajoranaCorrelationMatrix majorana_correlation_matrix(const PureState& state,
                                                      int prefix_size) {
  if (state.local_dim != 2) {
    throw std::invalid_argument("majorana correlations require qubits");
  }
  if (prefix_size < 1 || prefix_size > state.n_sites) {
    throw std::invalid_argument("region must be a nonempty prefix");
  }
  const int n_modes = 2 * prefix_size;
  MajoranaCorrelationMatrix m;
  m.n_modes = n_modes;
  m.matrix = RMatrix::Zero(n_modes, n_modes);
  for (int a = 0; a < n_modes; ++a) {
    std::vector<int> la = majorana_labels(state.n_sites, a);
    for (int b = a + 1; b < n_modes; ++b) {
      std::vector<int> lb = majorana_labels(state.n_sites, b);
      // g_a g_b as a single Pauli string with an i^k prefactor.
      std::string labels(state.n_sites, 'I');
      int i_power = 0;
      for (int site = 0; site < state.n_sites; ++site) {
        PauliProduct p = pauli_mul(la[site], lb[site]);
        labels[site] = pauli_char(p.label);
        i_power = (i_power + p.i_power) % 4;
      }
      static const Complex i_powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      // M_ab = -i <g_a g_b> for a != b.
      Complex value = Complex(0, -1) * i_powers[i_power] *
                      pauli_string_expectation(state, labels);
      if (std::abs(value.imag()) > 1e-9) {
        throw std::runtime_error("majorana correlation has imaginary part");
      }
      m.matrix(a, b) = value.real();
      m.matrix(b, a) = -value.real();
    }
  }
  return m;
}

double gaussian_entropy(const MajoranaCorrelationMatrix& m) {
  const int n_modes = m.n_modes;
  if (m.matrix.rows() != n_modes || m.matrix.cols() != n_modes ||
      n_modes % 2 != 0) {
    throw std::invalid_argument("correlation matrix shape mismatch");
  }
  if ((m.matrix + m.matrix.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("correlation matrix must be antisymmetric");
  }
  // i*M is Hermitian with spectrum {+lambda_j, -lambda_j}.
  CMatrix im = Complex(0, 1) * m.matrix.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(im, Eigen::EigenvaluesOnly);
  double entropy = 0;
  for (int j = n_modes / 2; j < n_modes; ++j) {
    double lambda = solver.eigenvalues()(j);
    if (lambda > 1.0 + 1e-6) {
      throw std::runtime_error("correlation eigenvalue exceeds 1: " +
                               std::to_string(lambda));
    }
    lambda = std::min(std::max(lambda, 0.0), 1.0);
    entropy += binary_entropy((1.0 + lambda) / 2.0);
  }
  return entropy;
}

double non_gaussianity(const PureState& state, int prefix_size) {
  std::vector<int> region(prefix_size);
  for (int i = 0; i < prefix_size; ++i) region[i] = i;
  double reference =
      gaussian_entropy(majorana_correlation_matrix(state, prefix_size));
  double actual = von_neumann_entropy(reduced_density(state, region));
  return clamp_nonnegative(reference - actual);
}

CMatrix qutrit_x() {
  CMatrix x = CMatrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) x((k + 1) % 3, k) = 1.0;
  return x;
}

CMatrix qutrit_z() {
  const Complex omega = std::exp(Complex(0, 2 * M_PI / 3));
  CMatrix z = CMatrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) z(k, k) = std::pow(omega, k);
  return z;
}

CMatrix qutrit_displacement(int x, int z) {
  const Complex tau = std::exp(Complex(0, M_PI * 4.0 / 3.0));
  x = ((x % 3) + 3) % 3;
  z = ((z % 3) + 3) % 3;
  CMatrix xp = CMatrix::Identity(3, 3);
  CMatrix xm = qutrit_x();
  for (int i = 0; i < x; ++i) xp = xm * xp;
  CMatrix zp = CMatrix::Identity(3, 3);
  CMatrix zm = qutrit_z();
  for (int i = 0; i < z; ++i) zp = zm * zp;
  return std::pow(tau, x * z) * xp * zp;
}

PhasePointOperatorSet::PhasePointOperatorSet(int n_sites) : n_sites_(n_sites) {
  if (n_sites < 1) {
    throw std::invalid_argument("phase point operators need n_sites >= 1");
  }
  if (n_sites > 6) {
    throw std::invalid_argument("phase point operator set limited to 6 sites");
  }
  CMatrix a0 = CMatrix::Zero(3, 3);
  for (int x = 0; x < 3; ++x) {
    for (int z = 0; z < 3; ++z) {
      a0 += qutrit_displacement(x, z);
    }
  }
  a0 /= 3.0;
  for (int x = 0; x < 3; ++x) {
    for (int z = 0; z < 3; ++z) {
      CMatrix d = qutrit_displacement(x, z);
      site_ops_[3 * x + z] = d * a0 * d.adjoint();
    }
  }
}

CMatrix PhasePointOperatorSet::operator_at(std::int64_t r) const {
  if (r < 0 || r >= count()) {
    throw std::invalid_argument("phase space index out of range");
  }
  // Site 0 is the most significant digit of r in base 9.
  std::vector<int> digits(n_sites_);
  std::int64_t rest = r;
  for (int site = n_sites_ - 1; site >= 0; --site) {
    digits[site] = static_cast<int>(rest % 9);
    rest /= 9;
  }
  CMatrix out = site_ops_[digits[0]];
  for (int site = 1; site < n_sites_; ++site) {
    const CMatrix& next = site_ops_[digits[site]];
    CMatrix grown(out.rows() * 3, out.cols() * 3);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        grown.block(i * 3, j * 3, 3, 3) = out(i, j) * next;
      }
    }
    out = std::move(grown);
  }
  return out;
}

const PhasePointOperatorSet& phase_point_operators(int n_sites) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<PhasePointOperatorSet>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n_sites);
  if (it == cache.end()) {
    it = cache
             .emplace(n_sites,
                      std::make_unique<PhasePointOperatorSet>(n_sites))
             .first;
  }
  return *it->second;
}

std::vector<double> wigner_function(const DensityMatrix& rho) {
  if (rho.local_dim != 3) {
    throw std::invalid_argument("wigner function requires qutrits");
  }
  check_density_shape(rho);
  const int n = rho.n_sites;
  const PhasePointOperatorSet& ops = phase_point_operators(n);

  // Per-site transfer kernel: k9(r, 3i + j) = A_r[i, j], so that contracting
  // every site of rho[j, i] yields Tr(A_r rho).
  CMatrix k9(9, 9);
  for (int r = 0; r < 9; ++r) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        k9(r, 3 * i + j) = ops.site_operator(r)(i, j);
      }
    }
  }

  const std::int64_t points = pow_int(9, n);
  const std::int64_t dim = pow_int(3, n);
  std::vector<Complex> tensor(points);
  for (std::int64_t row = 0; row < dim; ++row) {
    std::int64_t ri = row;
    for (std::int64_t col = 0; col < dim; ++col) {
      std::int64_t ci = col;
      // flat index with per-site digit 3*i_l + j_l
      std::int64_t flat = 0;
      std::int64_t r_rest = ri, c_rest = ci;
      std::int64_t place = 1;
      for (int site = n - 1; site >= 0; --site) {
        int i_digit = static_cast<int>(r_rest % 3);
        int j_digit = static_cast<int>(c_rest % 3);
        r_rest /= 3;
        c_rest /= 3;
        flat += (3 * i_digit + j_digit) * place;
        place *= 9;
      }
      tensor[flat] = rho.matrix(col, row);  // rho[j, i]
    }
  }

  std::vector<Complex> scratch(points);
  std::array<Complex, 9> in;
  for (int site = 0; site < n; ++site) {
    const std::int64_t stride = pow_int(9, n - 1 - site);
    const std::int64_t blocks = points / (9 * stride);
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
      const std::int64_t blk_base = blk * 9 * stride;
      for (std::int64_t low = 0; low < stride; ++low) {
        const std::int64_t base = blk_base + low;
        for (int c = 0; c < 9; ++c) in[c] = tensor[base + c * stride];
        for (int r = 0; r < 9; ++r) {
          Complex acc = 0;
          for (int c = 0; c < 9; ++c) acc += k9(r, c) * in[c];
          scratch[base + r * stride] = acc;
        }
      }
    }
    tensor.swap(scratch);
  }

  const double norm = static_cast<double>(dim);
  std::vector<double> wigner(points);
  for (std::int64_t r = 0; r < points; ++r) {
    if (std::abs(tensor[r].imag()) > 1e-9) {
      throw std::runtime_error("wigner value has imaginary part");
    }
    wigner[r] = tensor[r].real() / norm;
  }
  return wigner;
}

double mana(const DensityMatrix& rho) {
  std::vector<double> w = wigner_function(rho);
  double total = 0;
  for (double value : w) total += std::abs(value);
  return clamp_nonnegative(std::log2(total));
}

double coherence_global(const PureState& state) {
  std::vector<double> probs(state.dim());
  for (std::int64_t i = 0; i < state.dim(); ++i) {
    probs[i] = std::norm(state.amplitudes(i));
  }
  return shannon_entropy_bits(probs);
}

double imaginarity_global(const PureState& state) {
  // Re(|psi><psi|) has nonzero spectrum {(1 +- |psi^T psi|)/2}.
  Complex self_overlap = 0;
  for (std::int64_t i = 0; i < state.dim(); ++i) {
    self_overlap += state.amplitudes(i) * state.amplitudes(i);
  }
  double c = std::abs(self_overlap);
  c = std::min(c, 1.0);
  return binary_entropy((1.0 + c) / 2.0);
}

double non_gaussianity_global(const PureState& state) {
  return gaussian_entropy(
      majorana_correlation_matrix(state, state.n_sites));
}

double mana_global(const PureState& state) {
  DensityMatrix rho;
  rho.n_sites = state.n_sites;
  rho.local_dim = state.local_dim;
  rho.matrix = state.amplitudes * state.amplitudes.adjoint();
  return mana(rho);
}

}  // namespace mpemba
