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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "mpemba/ensembles.hpp"
#include "mpemba/monotones.hpp"
#include "mpemba/rng.hpp"
#include "oracles.hpp"

using namespace mpemba;

namespace {

bool is_monomial_unitary(const CMatrix& m, double tol = 1e-10) {
  if ((m * m.adjoint() - CMatrix::Identity(m.rows(), m.rows()))
          .cwiseAbs()
          .maxCoeff() > tol) {
    return false;
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    int nonzero = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(m(r, c)) > tol) {
        ++nonzero;
        if (std::abs(std::abs(m(r, c)) - 1.0) > tol) return false;
      }
    }
    if (nonzero != 1) return false;
  }
  return true;
}

// Returns true when u P u^dag is a single generalized Pauli string (up to a
// unimodular prefactor) for the two-qutrit displacement basis.
bool qutrit_pauli_image_is_pauli(const CMatrix& u, const CMatrix& p) {
  CMatrix image = u * p * u.adjoint();
  int matches = 0;
  for (int x1 = 0; x1 < 3 && matches < 2; ++x1) {
    for (int z1 = 0; z1 < 3; ++z1) {
      for (int x2 = 0; x2 < 3; ++x2) {
        for (int z2 = 0; z2 < 3; ++z2) {
          CMatrix candidate =
              oracles::kron(qutrit_displacement(x1, z1),
                            qutrit_displacement(x2, z2));
          Complex overlap = (candidate.adjoint() * image).trace() / 9.0;
          double magnitude = std::abs(overlap);
          if (magnitude > 1e-6 && std::abs(magnitude - 1.0) > 1e-9) {
            return false;  // spread over several strings
          }
          if (std::abs(magnitude - 1.0) <= 1e-9) ++matches;
        }
      }
    }
  }
  return matches == 1;
}

}  // namespace

TEST_CASE("coherence gate parameter cases") {
  Gate id_case = coherence_gate_from_params({0, 0, 0, 0}, false);
  CHECK(id_case.matrix.isIdentity(1e-12));
  Gate swap_case = coherence_gate_from_params({0, 0, 0, 0}, true);
  CMatrix swap(4, 4);
  swap << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  CHECK((swap_case.matrix - swap).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("coherence gate samples are monomial and free") {
  RngStream rng(101, 0);
  PureState psi;
  psi.n_sites = 6;
  psi.local_dim = 2;
  psi.amplitudes = oracles::random_state_vector(64, rng);
  double before = coherence_global(psi);
  for (int trial = 0; trial < 25; ++trial) {
    Gate g = sample_coherence_gate(rng);
    CHECK(is_monomial_unitary(g.matrix));
    int x = static_cast<int>(rng.uniform_index(6));
    int y = (x + 1 + static_cast<int>(rng.uniform_index(5))) % 6;
    apply_two_site_gate_inplace(psi, g, x, y);
  }
  CHECK(std::abs(coherence_global(psi) - before) < 1e-9);
}

TEST_CASE("coherence gate swap weighting is configurable") {
  RngStream rng(102, 0);
  for (int trial = 0; trial < 20; ++trial) {
    Gate g = sample_coherence_gate(rng, 0.0);  // never swap: diagonal
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(std::abs(g.matrix(i, i)) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("orthogonal gate identity and oracle cases") {
  CHECK(orthogonal_gate_from_alpha(0).matrix.isIdentity(1e-12));

  CMatrix generator =
      (oracles::kron(oracles::pauli('X'), oracles::pauli('Y')) -
       oracles::kron(oracles::pauli('Y'), oracles::pauli('X'))) /
      2.0;
  for (double alpha : {2 * M_PI, 0.7, 4.1}) {
    CMatrix expected = oracles::hermitian_phase_exp(generator, alpha);
    Gate g = orthogonal_gate_from_alpha(alpha);
    CHECK((g.matrix - expected).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("orthogonal gate samples are real orthogonal") {
  RngStream rng(103, 0);
  for (int trial = 0; trial < 20; ++trial) {
    Gate g = sample_orthogonal_gate(rng);
    CHECK(g.matrix.imag().cwiseAbs().maxCoeff() < 1e-10);
    CHECK((g.matrix * g.matrix.transpose())
              .isIdentity(1e-10));
  }
}

TEST_CASE("gaussian gate zero coefficients give identity") {
  Gate g = gaussian_gate_from_h(RMatrix::Zero(4, 4));
  CHECK(g.matrix.isIdentity(1e-12));
}

TEST_CASE("gaussian gate keeps vacuum gaussian") {
  RngStream rng(104, 0);
  for (int trial = 0; trial < 10; ++trial) {
    CVector zero(2);
    zero << 1, 0;
    PureState psi = product_state(2, 2, zero);
    Gate g = sample_gaussian_gate(rng, 0);
    CHECK((g.matrix * g.matrix.adjoint()).isIdentity(1e-10));
    apply_two_site_gate_inplace(psi, g, 0, 1);
    CHECK(non_gaussianity(psi, 1) < 1e-9);
    CHECK(non_gaussianity(psi, 2) < 1e-9);
  }
}

TEST_CASE("gaussian gate rotates correlations as e^{4h} M e^{-4h}") {
  RngStream rng(105, 0);
  const int n = 4;
  // A random Gaussian state: Gaussian circuit on the vacuum.
  CVector zero(2);
  zero << 1, 0;
  PureState psi = product_state(n, 2, zero);
  for (int layer = 0; layer < 3; ++layer) {
    for (int x = 0; x + 1 < n; ++x) {
      apply_two_site_gate_inplace(psi, sample_gaussian_gate(rng, x), x, x + 1);
    }
  }
  for (int bond = 0; bond + 1 < n; ++bond) {
    RMatrix h = RMatrix::Zero(4, 4);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        h(a, b) = rng.normal();
        h(b, a) = -h(a, b);
      }
    }
    RMatrix before = majorana_correlation_matrix(psi, n).matrix;
    PureState evolved = apply_two_site_gate(psi, gaussian_gate_from_h(h),
                                            bond, bond + 1);
    RMatrix after = majorana_correlation_matrix(evolved, n).matrix;

    // exp(4h) through the Hermitian oracle: exp(-i * 4 * (i h)).
    CMatrix ih = Complex(0, 1) * h.cast<Complex>();
    RMatrix rot = oracles::hermitian_phase_exp(ih, 4.0).real();
    RMatrix full_rot = RMatrix::Identity(2 * n, 2 * n);
    full_rot.block(2 * bond, 2 * bond, 4, 4) = rot;
    RMatrix expected = full_rot * before * full_rot.transpose();
    CHECK((after - expected).cwiseAbs().maxCoeff() < 1e-9);
    psi = evolved;
  }
}

TEST_CASE("haar gate moments and unitarity") {
  RngStream rng(106, 0);
  const int samples = 100000;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < samples; ++i) {
    Gate g = sample_haar_gate(rng, 2);
    double p = std::norm(g.matrix(0, 0));
    sum += p;
    sum_sq += p * p;
  }
  double mean = sum / samples;
  double variance = (sum_sq - samples * mean * mean) / (samples - 1);
  double stderr_mean = std::sqrt(variance / samples);
  CHECK(std::abs(mean - 0.25) < 3 * stderr_mean);

  Gate g = sample_haar_gate(rng, 3);
  CHECK((g.matrix * g.matrix.adjoint()).isIdentity(1e-10));

  RngStream s1(7, 1), s2(7, 2);
  Gate a = sample_haar_gate(s1, 2);
  Gate b = sample_haar_gate(s2, 2);
  CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("monomial clifford enumeration") {
  const std::vector<Gate>& gates = enumerate_monomial_cliffords();
  REQUIRE(gates.size() == 768);
  CHECK(gates[0].matrix.isIdentity(1e-12));

  // Distinctness via an exact fingerprint of the entry pattern.
  std::set<std::string> fingerprints;
  for (const Gate& g : gates) {
    CHECK(is_monomial_unitary(g.matrix, 1e-12));
    std::string fp;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        Complex v = g.matrix(r, c);
        int code = 0;
        if (std::abs(v) > 0.5) {
          if (std::abs(v - Complex(1, 0)) < 1e-9) code = 1;
          if (std::abs(v - Complex(0, 1)) < 1e-9) code = 2;
          if (std::abs(v + Complex(1, 0)) < 1e-9) code = 3;
          if (std::abs(v + Complex(0, 1)) < 1e-9) code = 4;
          REQUIRE(code != 0);
        }
        fp += static_cast<char>('0' + code);
      }
    }
    fingerprints.insert(fp);
  }
  CHECK(fingerprints.size() == 768);
}

TEST_CASE("monomial cliffords map paulis to paulis") {
  const std::vector<Gate>& gates = enumerate_monomial_cliffords();
  const char alphabet[4] = {'I', 'X', 'Y', 'Z'};
  std::vector<CMatrix> paulis;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      paulis.push_back(oracles::kron(oracles::pauli(alphabet[a]),
                                     oracles::pauli(alphabet[b])));
    }
  }
  for (const Gate& g : gates) {
    for (int p = 1; p < 16; ++p) {
      CMatrix image = g.matrix * paulis[p] * g.matrix.adjoint();
      int matches = 0;
      for (int q = 1; q < 16; ++q) {
        Complex overlap = (paulis[q].adjoint() * image).trace() / 4.0;
        if (std::abs(overlap) > 1e-9) {
          ++matches;
          CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-9);
        }
      }
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("qutrit clifford words") {
  CHECK(qutrit_clifford_word({}).matrix.isIdentity(1e-12));

  RngStream rng(107, 0);
  CMatrix x1 = oracles::kron(qutrit_x(), CMatrix::Identity(3, 3));
  CMatrix z2 = oracles::kron(CMatrix::Identity(3, 3), qutrit_z());
  for (int trial = 0; trial < 5; ++trial) {
    Gate g = sample_qutrit_clifford(rng);
    CHECK((g.matrix * g.matrix.adjoint()).isIdentity(1e-9));
    CHECK(qutrit_pauli_image_is_pauli(g.matrix, x1));
    CHECK(qutrit_pauli_image_is_pauli(g.matrix, z2));
  }
}

TEST_CASE("qutrit clifford keeps stabilizer states mana free") {
  RngStream rng(108, 0);
  CVector zero(3);
  zero << 1, 0, 0;
  for (int trial = 0; trial < 5; ++trial) {
    PureState psi = product_state(2, 3, zero);
    apply_two_site_gate_inplace(psi, sample_qutrit_clifford(rng), 0, 1);
    DensityMatrix rho;
    rho.n_sites = 2;
    rho.local_dim = 3;
    rho.matrix = psi.amplitudes * psi.amplitudes.adjoint();
    CHECK(mana(rho) < 1e-9);
  }
}

TEST_CASE("dilute honors epsilon") {
  RngStream rng(109, 0);
  GateSampler swap_sampler = [](RngStream&) {
    Gate g = identity_gate(2);
    g.matrix(1, 1) = 0;
    g.matrix(2, 2) = 0;
    g.matrix(1, 2) = 1;
    g.matrix(2, 1) = 1;
    return g;
  };
  for (int i = 0; i < 100; ++i) {
    CHECK(dilute(rng, 0.0, swap_sampler).is_identity());
    CHECK(!dilute(rng, 1.0, swap_sampler).is_identity());
  }
  const int samples = 100000;
  int nontrivial = 0;
  for (int i = 0; i < samples; ++i) {
    if (!dilute(rng, 0.4, swap_sampler).is_identity()) ++nontrivial;
  }
  double fraction = static_cast<double>(nontrivial) / samples;
  double stderr_frac = std::sqrt(0.4 * 0.6 / samples);
  CHECK(std::abs(fraction - 0.4) < 3 * stderr_frac);
}

TEST_CASE("identical streams give identical gates") {
  RngStream a(55, 9), b(55, 9);
  for (int i = 0; i < 10; ++i) {
    Gate ga = sample_coherence_gate(a);
    Gate gb = sample_coherence_gate(b);
    CHECK((ga.matrix - gb.matrix).cwiseAbs().maxCoeff() == 0.0);
  }
  Gate ha = sample_haar_gate(a, 2);
  Gate hb = sample_haar_gate(b, 2);
  CHECK((ha.matrix - hb.matrix).cwiseAbs().maxCoeff() == 0.0);
}
