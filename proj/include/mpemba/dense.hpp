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

#ifndef MPEMBA_DENSE_HPP
#define MPEMBA_DENSE_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mpemba {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

/// d^e for small integer arguments, exact in 64 bits.
std::int64_t pow_int(int base, int exp);

/// Dense statevector of n_sites qudits with local dimension 2 or 3.
///
/// Site 0 is the most significant digit of the amplitude index:
/// index(b_0, ..., b_{N-1}) = sum_i b_i * d^(N-1-i). All operations in this
/// module keep the squared norm within 1e-10 of one.
struct PureState {
  int n_sites = 0;
  int local_dim = 2;
  CVector amplitudes;

  std::int64_t dim() const { return amplitudes.size(); }
};

/// Hermitian, unit-trace matrix on a subsystem.
struct DensityMatrix {
  int n_sites = 0;
  int local_dim = 2;
  CMatrix matrix;
};

/// Unitary on one or two qudits.
struct Gate {
  int arity = 2;
  int local_dim = 2;
  CMatrix matrix;

  bool is_identity(double tol = 1e-14) const;
};

enum class TiltKind { y_tilt, x_tilt, qutrit_x_tilt };

/// |ket><ket| ... tensor power of a normalized single-site ket.
PureState product_state(int n_sites, int local_dim, const CVector& local_ket);

/// Product state with per-site ket exp(-i*theta*G)|0>, where G is Y/2 for
/// y_tilt, X/2 for x_tilt (d=2), or X + X^dag for qutrit_x_tilt (d=3).
PureState tilted_state(int n_sites, int local_dim, TiltKind kind, double theta);

/// Single-site ket exp(-i*theta*G)|0> for the given tilt kind.
CVector tilted_site_ket(int local_dim, TiltKind kind, double theta);

/// Contracts a two-site gate against sites (x, y). The first gate index acts
/// on site x, the second on site y; x and y need not be adjacent or ordered,
/// which is what the periodic wrap bond uses.
PureState apply_two_site_gate(const PureState& state, const Gate& gate,
                              int site_x, int site_y);
void apply_two_site_gate_inplace(PureState& state, const Gate& gate,
                                 int site_x, int site_y);

/// Partial trace onto `region` (ascending site indices). The tensor factors
/// of the result follow the ascending order of the region.
DensityMatrix reduced_density(const PureState& state,
                              const std::vector<int>& region);

/// -Tr(rho log2 rho) in bits. Eigenvalues below 1e-12 contribute zero;
/// eigenvalues below -1e-8 signal an invalid input and throw.
double von_neumann_entropy(const DensityMatrix& rho);

/// <psi|P|psi> for a Pauli string given as one of I, X, Y, Z per site (d=2).
Complex pauli_string_expectation(const PureState& state,
                                 const std::string& labels);

CMatrix identity_matrix(std::int64_t dim);
Gate identity_gate(int local_dim, int arity = 2);

/// Throws std::invalid_argument when the state invariants fail.
void validate_state(const PureState& state, double tol = 1e-10);
/// Throws std::invalid_argument when Hermiticity/trace/positivity fail.
void validate_density(const DensityMatrix& rho, double tol = 1e-10);

}  // namespace mpemba

#endif
