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

#include "mpemba/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mpemba/monotones.hpp"

namespace mpemba {

namespace {

CMatrix unvec(const CVector& v, std::int64_t dim) {
  CMatrix m(dim, dim);
  for (std::int64_t j = 0; j < dim; ++j) {
    m.col(j) = v.segment(j * dim, dim);
  }
  return m;
}

CVector vec(const CMatrix& m) {
  CVector v(m.rows() * m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    v.segment(j * m.rows(), m.rows()) = m.col(j);
  }
  return v;
}

}  // namespace

Gate fixed_monomial_gate() {
  Gate g;
  g.arity = 2;
  g.local_dim = 2;
  g.matrix = CMatrix::Zero(4, 4);
  g.matrix(0, 3) = Complex(0.79517062, -0.60638575);   // |00><11|
  g.matrix(1, 1) = Complex(0.6283294, -0.7779474);     // |01><01|
  g.matrix(2, 2) = Complex(0.99984225, 0.01776183);    // |10><10|
  g.matrix(3, 0) = Complex(-0.96625112, -0.25760196);  // |11><00|
  return g;
}

CMatrix polar_projection(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m,
                                Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

CMatrix embed_two_site_unitary(const CMatrix& gate, int n_sites,
                               int local_dim, int site_x, int site_y) {
  const std::int64_t dim = pow_int(local_dim, n_sites);
  const std::int64_t stride_x = pow_int(local_dim, n_sites - 1 - site_x);
  const std::int64_t stride_y = pow_int(local_dim, n_sites - 1 - site_y);
  auto digit = [&](std::int64_t index, std::int64_t stride) {
    return static_cast<int>(index / stride) % local_dim;
  };
  CMatrix full = CMatrix::Zero(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    const int a = digit(col, stride_x);
    const int b = digit(col, stride_y);
    for (int ap = 0; ap < local_dim; ++ap) {
      for (int bp = 0; bp < local_dim; ++bp) {
        Complex entry = gate(ap * local_dim + bp, a * local_dim + b);
        if (entry == Complex(0, 0)) continue;
        std::int64_t row = col + (ap - a) * stride_x + (bp - b) * stride_y;
        full(row, col) = entry;
      }
    }
  }
  return full;
}

CMatrix build_floquet_unitary(const Gate& gate, int n_sites) {
  if (n_sites < 2 || n_sites % 2 != 0 || n_sites > 12) {
    throw std::invalid_argument(
        "floquet chain needs an even site count between 2 and 12");
  }
  if (gate.arity != 2 || gate.local_dim != 2) {
    throw std::invalid_argument("floquet gate must act on two qubits");
  }
  const std::int64_t dim = pow_int(2, n_sites);
  CMatrix u = CMatrix::Identity(dim, dim);
  for (int x = 0; x + 1 < n_sites; x += 2) {  // odd bonds first
    u = embed_two_site_unitary(gate.matrix, n_sites, 2, x, x + 1) * u;
  }
  for (int x = 1; x + 1 < n_sites; x += 2) {
    u = embed_two_site_unitary(gate.matrix, n_sites, 2, x, x + 1) * u;
  }
  return u;
}

ChannelSuperoperator build_channel(const CMatrix& u, int n_sites,
                                   int subsystem_sites) {
  if (subsystem_sites < 1 || subsystem_sites >= n_sites) {
    throw std::invalid_argument("subsystem must be a proper prefix");
  }
  const std::int64_t dim = pow_int(2, n_sites);
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("unitary dimension mismatch");
  }
  const std::int64_t ds = pow_int(2, subsystem_sites);
  const std::int64_t de = dim / ds;

  ChannelSuperoperator channel;
  channel.subsystem_sites = subsystem_sites;
  channel.matrix = CMatrix::Zero(ds * ds, ds * ds);
  for (std::int64_t k = 0; k < ds; ++k) {
    for (std::int64_t l = 0; l < ds; ++l) {
      // Input matrix unit |k><l| (x) identity/de on the environment.
      CMatrix full = CMatrix::Zero(dim, dim);
      for (std::int64_t e = 0; e < de; ++e) {
        full(k * de + e, l * de + e) = 1.0 / static_cast<double>(de);
      }
      CMatrix evolved = u * full * u.adjoint();
      CMatrix out = CMatrix::Zero(ds, ds);
      for (std::int64_t i = 0; i < ds; ++i) {
        for (std::int64_t j = 0; j < ds; ++j) {
          Complex acc = 0;
          for (std::int64_t e = 0; e < de; ++e) {
            acc += evolved(i * de + e, j * de + e);
          }
          out(i, j) = acc;
        }
      }
      channel.matrix.col(k + ds * l) = vec(out);
    }
  }

  // Trace preservation: vec(I)^dag E = vec(I)^dag.
  CVector id_vec = vec(CMatrix::Identity(ds, ds));
  double tp_residual =
      (channel.matrix.adjoint() * id_vec - id_vec).cwiseAbs().maxCoeff();
  if (tp_residual > 1e-9) {
    throw std::runtime_error("channel is not trace preserving; residual " +
                             std::to_string(tp_residual));
  }
  // Complete positivity: the Choi matrix must be PSD.
  CMatrix choi(ds * ds, ds * ds);
  for (std::int64_t k = 0; k < ds; ++k) {
    for (std::int64_t l = 0; l < ds; ++l) {
      for (std::int64_t i = 0; i < ds; ++i) {
        for (std::int64_t j = 0; j < ds; ++j) {
          choi(k * ds + i, l * ds + j) =
              channel.matrix(i + ds * j, k + ds * l);
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(
      (choi + choi.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-8) {
    throw std::runtime_error("channel Choi matrix is not positive");
  }
  return channel;
}

ChannelSpectrum channel_spectrum(const ChannelSuperoperator& channel) {
  const std::int64_t ds = pow_int(2, channel.subsystem_sites);
  const std::int64_t dim2 = ds * ds;
  Eigen::ComplexEigenSolver<CMatrix> solver(channel.matrix);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("channel eigendecomposition failed");
  }
  CMatrix v = solver.eigenvectors();
  CMatrix w = v.inverse();
  double residual =
      (v * w - CMatrix::Identity(dim2, dim2)).cwiseAbs().maxCoeff();
  if (residual > 1e-6) {
    throw std::runtime_error(
        "degenerate channel spectrum: biorthonormalization residual " +
        std::to_string(residual));
  }

  std::vector<int> order(dim2);
  std::iota(order.begin(), order.end(), 0);
  const auto& values = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double ma = std::abs(values(a)), mb = std::abs(values(b));
    if (std::abs(ma - mb) > 1e-12) return ma > mb;
    if (std::abs(values(a).real() - values(b).real()) > 1e-12) {
      return values(a).real() > values(b).real();
    }
    return values(a).imag() > values(b).imag();
  });

  ChannelSpectrum spectrum;
  spectrum.eigenvalues.reserve(dim2);
  for (int idx : order) {
    spectrum.eigenvalues.push_back(values(idx));
    spectrum.right_modes.push_back(unvec(v.col(idx), ds));
    CVector left = w.row(idx).adjoint();
    spectrum.left_modes.push_back(unvec(left, ds));
  }
  for (const Complex& mu : spectrum.eigenvalues) {
    if (std::abs(mu) > 1.0 + 1e-9) {
      throw std::runtime_error("channel eigenvalue outside the unit disk");
    }
  }
  if (std::abs(spectrum.eigenvalues[0] - Complex(1, 0)) > 1e-8) {
    throw std::runtime_error("channel lacks a unit eigenvalue");
  }
  spectrum.degenerate_unit_eigenvalue =
      dim2 > 1 && std::abs(spectrum.eigenvalues[1]) > 1.0 - 1e-9;
  return spectrum;
}

std::vector<Complex> channel_eigenvalues(const ChannelSuperoperator& channel) {
  Eigen::ComplexEigenSolver<CMatrix> solver(channel.matrix, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("channel eigenvalue computation failed");
  }
  std::vector<Complex> values(solver.eigenvalues().data(),
                              solver.eigenvalues().data() +
                                  solver.eigenvalues().size());
  std::sort(values.begin(), values.end(), [](const Complex& a,
                                             const Complex& b) {
    if (std::abs(std::abs(a) - std::abs(b)) > 1e-12) {
      return std::abs(a) > std::abs(b);
    }
    if (std::abs(a.real() - b.real()) > 1e-12) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return values;
}

DensityMatrix steady_state(const ChannelSpectrum& spectrum) {
  const CMatrix& r1 = spectrum.right_modes[0];
  Complex trace = r1.trace();
  if (std::abs(trace) < 1e-12) {
    throw std::runtime_error("steady mode is traceless");
  }
  DensityMatrix rho;
  rho.local_dim = 2;
  rho.n_sites = 0;
  Eigen::Index dim = r1.rows();
  while ((Eigen::Index{1} << rho.n_sites) < dim) ++rho.n_sites;
  rho.matrix = r1 / trace;
  rho.matrix = (rho.matrix + rho.matrix.adjoint()) / 2.0;
  return rho;
}

double slow_mode_overlap(const ChannelSpectrum& spectrum,
                         const DensityMatrix& rho0) {
  if (spectrum.degenerate_unit_eigenvalue) {
    throw std::runtime_error(
        "steady state is degenerate; slow mode undefined");
  }
  if (spectrum.right_modes[0].rows() != rho0.matrix.rows()) {
    throw std::invalid_argument("state dimension does not match spectrum");
  }
  const double mu2 = std::abs(spectrum.eigenvalues[1]);
  double sum_sq = 0;
  for (std::size_t k = 1; k < spectrum.eigenvalues.size(); ++k) {
    if (std::abs(std::abs(spectrum.eigenvalues[k]) - mu2) > 1e-9) break;
    Complex overlap = (spectrum.left_modes[k].adjoint() * rho0.matrix).trace();
    sum_sq += std::norm(overlap);
  }
  return std::sqrt(sum_sq);
}

CMatrix spectral_reconstruction(const ChannelSpectrum& spectrum,
                                const DensityMatrix& rho0, int steps) {
  const Eigen::Index dim = rho0.matrix.rows();
  CMatrix out = CMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
    Complex coefficient =
        (spectrum.left_modes[k].adjoint() * rho0.matrix).trace();
    out += std::pow(spectrum.eigenvalues[k], steps) * coefficient *
           spectrum.right_modes[k];
  }
  return out;
}

MarkovTrajectory evolve_markov(const ChannelSuperoperator& channel,
                               const DensityMatrix& rho0, int steps,
                               const std::string& label) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  const std::int64_t ds = pow_int(2, channel.subsystem_sites);
  if (rho0.matrix.rows() != ds) {
    throw std::invalid_argument("state dimension does not match channel");
  }
  MarkovTrajectory trajectory;
  trajectory.coherence_series.label = label;
  trajectory.coherence_series.n_realizations = 1;

  DensityMatrix rho = rho0;
  rho.n_sites = channel.subsystem_sites;
  rho.local_dim = 2;
  for (int t = 0; t <= steps; ++t) {
    if (std::abs(rho.matrix.trace().real() - 1.0) > 1e-8) {
      throw std::runtime_error("trace drift during markov evolution");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> check(
        (rho.matrix + rho.matrix.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    if (check.eigenvalues().minCoeff() < -1e-8) {
      throw std::runtime_error("positivity drift during markov evolution");
    }
    trajectory.states.push_back(rho);
    trajectory.coherence_series.depths.push_back(t);
    trajectory.coherence_series.mean.push_back(coherence(rho));
    trajectory.coherence_series.stderr_.push_back(0.0);
    if (t < steps) {
      CVector next = channel.matrix * vec(rho.matrix);
      rho.matrix = unvec(next, ds);
      rho.matrix = (rho.matrix + rho.matrix.adjoint()) / 2.0;
    }
  }
  return trajectory;
}

}  // namespace mpemba
