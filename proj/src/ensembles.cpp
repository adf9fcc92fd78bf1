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

#include "mpemba/ensembles.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace mpemba {

namespace {

constexpr Complex kI(0, 1);

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// exp(-i H) for Hermitian H.
CMatrix phase_exp(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  CVector phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    phases(i) = std::exp(Complex(0, -solver.eigenvalues()(i)));
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

Gate make_gate(int local_dim, CMatrix matrix) {
  Gate g;
  g.arity = 2;
  g.local_dim = local_dim;
  g.matrix = std::move(matrix);
  return g;
}

}  // namespace

Gate coherence_gate_from_params(const std::array<double, 4>& alpha,
                                bool swap) {
  CMatrix u = CMatrix::Zero(4, 4);
  for (int b1 = 0; b1 < 2; ++b1) {
    for (int b2 = 0; b2 < 2; ++b2) {
      double z1 = b1 ? -1.0 : 1.0;
      double z2 = b2 ? -1.0 : 1.0;
      double phase = alpha[0] + alpha[1] * z2 + alpha[2] * z1 +
                     alpha[3] * z1 * z2;
      int row = 2 * b1 + b2;
      int col = swap ? 2 * b2 + b1 : row;
      u(row, col) = std::exp(-kI * phase);
    }
  }
  return make_gate(2, std::move(u));
}

Gate sample_coherence_gate(RngStream& rng, double swap_probability) {
  std::array<double, 4> alpha;
  for (double& a : alpha) a = rng.uniform(0, 2 * M_PI);
  bool swap = rng.bernoulli(swap_probability);
  return coherence_gate_from_params(alpha, swap);
}

Gate orthogonal_gate_from_alpha(double alpha) {
  // The generator (X(x)Y - Y(x)X)/2 acts as -Y on span{|01>, |10>} and
  // vanishes elsewhere, so the exponential is a plane rotation.
  CMatrix u = CMatrix::Identity(4, 4);
  u(1, 1) = std::cos(alpha);
  u(1, 2) = std::sin(alpha);
  u(2, 1) = -std::sin(alpha);
  u(2, 2) = std::cos(alpha);
  return make_gate(2, std::move(u));
}

Gate sample_orthogonal_gate(RngStream& rng) {
  return orthogonal_gate_from_alpha(rng.uniform(0, 2 * M_PI));
}

Gate gaussian_gate_from_h(const RMatrix& h) {
  if (h.rows() != 4 || h.cols() != 4) {
    throw std::invalid_argument("gaussian coefficient matrix must be 4x4");
  }
  if ((h + h.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("gaussian coefficient matrix must be "
                                "antisymmetric");
  }
  static const std::array<CMatrix, 4> majoranas = [] {
    CMatrix id = CMatrix::Identity(2, 2);
    CMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -kI, kI, 0;
    z << 1, 0, 0, -1;
    return std::array<CMatrix, 4>{kron(x, id), kron(y, id), kron(z, x),
                                  kron(z, y)};
  }();
  // K = sum_{a,b} h_ab g_a g_b is anti-Hermitian; exp(K) = exp(-i (iK)).
  CMatrix k = CMatrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      k += 2.0 * h(a, b) * (majoranas[a] * majoranas[b]);
    }
  }
  return make_gate(2, phase_exp(kI * k));
}

Gate sample_gaussian_gate(RngStream& rng, int bond_site, double h_stddev) {
  if (bond_site < 0) {
    throw std::invalid_argument("bond_site must be nonnegative");
  }
  RMatrix h = RMatrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      double value = h_stddev * rng.normal();
      h(a, b) = value;
      h(b, a) = -value;
    }
  }
  return gaussian_gate_from_h(h);
}

Gate sample_haar_gate(RngStream& rng, int local_dim) {
  if (local_dim != 2 && local_dim != 3) {
    throw std::invalid_argument("haar sampling requires local_dim 2 or 3");
  }
  const int dim = local_dim * local_dim;
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return make_gate(local_dim, std::move(q));
}

const std::vector<Gate>& enumerate_monomial_cliffords() {
  static const std::vector<Gate> gates = [] {
    // 24 affine-linear bit permutations |b> -> |A b + c>.
    std::vector<std::array<int, 4>> perms;  // image of each basis state
    std::vector<std::array<int, 4>> a_list;
    a_list.push_back({1, 0, 0, 1});  // identity first
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) {
        for (int r = 0; r < 2; ++r) {
          for (int s = 0; s < 2; ++s) {
            if ((p & s) ^ (q & r)) {  // det = 1 over GF(2)
              std::array<int, 4> a{p, q, r, s};
              if (a != a_list[0]) a_list.push_back(a);
            }
          }
        }
      }
    }
    for (const auto& a : a_list) {
      for (int c = 0; c < 4; ++c) {
        int c1 = (c >> 1) & 1, c2 = c & 1;
        std::array<int, 4> image;
        for (int in = 0; in < 4; ++in) {
          int b1 = (in >> 1) & 1, b2 = in & 1;
          int o1 = (a[0] & b1) ^ (a[1] & b2) ^ c1;
          int o2 = (a[2] & b1) ^ (a[3] & b2) ^ c2;
          image[in] = 2 * o1 + o2;
        }
        perms.push_back(image);
      }
    }

    static const Complex i_powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<Gate> out;
    out.reserve(768);
    for (const auto& image : perms) {
      // 32 diagonal Cliffords S1^a S2^b CZ^c, modulo global phase.
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          for (int c = 0; c < 2; ++c) {
            CMatrix m = CMatrix::Zero(4, 4);
            for (int in = 0; in < 4; ++in) {
              int row = image[in];
              int b1 = (row >> 1) & 1, b2 = row & 1;
              int exponent = (a * b1 + b * b2 + 2 * c * b1 * b2) % 4;
              m(row, in) = i_powers[exponent];
            }
            out.push_back(make_gate(2, std::move(m)));
          }
        }
      }
    }
    return out;
  }();
  return gates;
}

namespace {

// Two-qutrit Clifford generator list. omega = exp(2 pi i / 3);
// X|k> = |k+1 mod 3>, Z|k> = omega^k |k>, S|k> = omega^{k(k-1)/2} |k>,
// F = Fourier, CZ|jk> = omega^{jk}|jk>, SUM|jk> = |j, j+k mod 3>.
std::vector<CMatrix> build_qutrit_generators() {
  const Complex omega = std::exp(Complex(0, 2 * M_PI / 3));
  CMatrix id = CMatrix::Identity(3, 3);
  CMatrix x = CMatrix::Zero(3, 3);
  CMatrix z = CMatrix::Zero(3, 3);
  CMatrix s = CMatrix::Zero(3, 3);
  CMatrix f(3, 3);
  for (int k = 0; k < 3; ++k) {
    x((k + 1) % 3, k) = 1.0;
    z(k, k) = std::pow(omega, k);
    s(k, k) = std::pow(omega, (k * (k - 1) / 2) % 3);
    for (int j = 0; j < 3; ++j) {
      f(k, j) = std::pow(omega, (j * k) % 3) / std::sqrt(3.0);
    }
  }
  CMatrix cz = CMatrix::Zero(9, 9);
  CMatrix sum12 = CMatrix::Zero(9, 9);
  CMatrix sum21 = CMatrix::Zero(9, 9);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      int in = 3 * j + k;
      cz(in, in) = std::pow(omega, (j * k) % 3);
      sum12(3 * j + (j + k) % 3, in) = 1.0;
      sum21(3 * ((j + k) % 3) + k, in) = 1.0;
    }
  }
  std::vector<CMatrix> gens;
  gens.push_back(kron(f, id));
  gens.push_back(kron(id, f));
  gens.push_back(kron(s, id));
  gens.push_back(kron(id, s));
  gens.push_back(kron(x, id));
  gens.push_back(kron(id, x));
  gens.push_back(kron(z, id));
  gens.push_back(kron(id, z));
  gens.push_back(cz);
  gens.push_back(sum12);
  gens.push_back(sum21);
  return gens;
}

const std::vector<CMatrix>& qutrit_generators() {
  static const std::vector<CMatrix> gens = build_qutrit_generators();
  return gens;
}

}  // namespace

int qutrit_clifford_generator_count() {
  return static_cast<int>(qutrit_generators().size());
}

Gate qutrit_clifford_word(const std::vector<int>& word) {
  const auto& gens = qutrit_generators();
  CMatrix u = CMatrix::Identity(9, 9);
  for (int g : word) {
    if (g < 0 || g >= static_cast<int>(gens.size())) {
      throw std::invalid_argument("generator index out of range");
    }
    u = gens[g] * u;
  }
  return make_gate(3, std::move(u));
}

Gate sample_qutrit_clifford(RngStream& rng, int word_length) {
  const auto& gens = qutrit_generators();
  CMatrix u = CMatrix::Identity(9, 9);
  for (int i = 0; i < word_length; ++i) {
    u = gens[rng.uniform_index(gens.size())] * u;
  }
  return make_gate(3, std::move(u));
}

Gate dilute(RngStream& rng, double epsilon, const GateSampler& sampler,
            int local_dim) {
  if (epsilon < 0 || epsilon > 1) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  if (rng.bernoulli(epsilon)) return sampler(rng);
  return identity_gate(local_dim);
}

void EnsembleSpec::validate() const {
  if (epsilon < 0 || epsilon > 1) {
    throw std::invalid_argument("ensemble epsilon must lie in [0, 1]");
  }
  const bool qutrit_family = family == GateFamily::qutrit_clifford;
  if (qutrit_family != (local_dim == 3) &&
      family != GateFamily::haar) {
    throw std::invalid_argument("ensemble family does not match local_dim");
  }
  if (family == GateFamily::haar && local_dim != 2 && local_dim != 3) {
    throw std::invalid_argument("haar family needs local_dim 2 or 3");
  }
}

GateSampler ensemble_sampler(const EnsembleSpec& spec, int bond_site) {
  spec.validate();
  switch (spec.family) {
    case GateFamily::coherence: {
      double swap_p = spec.swap_probability;
      return [swap_p](RngStream& rng) {
        return sample_coherence_gate(rng, swap_p);
      };
    }
    case GateFamily::orthogonal:
      return [](RngStream& rng) { return sample_orthogonal_gate(rng); };
    case GateFamily::gaussian: {
      double stddev = spec.h_stddev;
      return [bond_site, stddev](RngStream& rng) {
        return sample_gaussian_gate(rng, bond_site, stddev);
      };
    }
    case GateFamily::haar: {
      int dim = spec.local_dim;
      return [dim](RngStream& rng) { return sample_haar_gate(rng, dim); };
    }
    case GateFamily::qutrit_clifford:
      return [](RngStream& rng) { return sample_qutrit_clifford(rng); };
    case GateFamily::monomial_clifford:
      return [](RngStream& rng) {
        return enumerate_monomial_cliffords()[rng.uniform_index(768)];
      };
  }
  throw std::logic_error("unreachable");
}

}  // namespace mpemba
