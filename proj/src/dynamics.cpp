// Copyright 2026 The frchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "frchain/dynamics.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace frchain {

namespace {

constexpr Complex kI{0.0, 1.0};

double wrap_two_pi(double angle) {
  const double two_pi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle, two_pi);
  if (a < 0.0) {
    a += two_pi;
  }
  return a;
}

}  // namespace

Eigen::MatrixXcd Evolver::at(double t) const {
  const int n = static_cast<int>(sys_.values.size());
  Eigen::VectorXcd phases(n);
  for (int s = 0; s < n; ++s) {
    phases(s) = std::polar(1.0, -t * sys_.values(s));
  }
  const Eigen::MatrixXcd vc = sys_.vectors.cast<Complex>();
  return vc * phases.asDiagonal() * vc.transpose();
}

Eigen::VectorXcd Evolver::column0(double t) const {
  const int n = static_cast<int>(sys_.values.size());
  Eigen::VectorXcd coeffs(n);
  for (int s = 0; s < n; ++s) {
    coeffs(s) = std::polar(1.0, -t * sys_.values(s)) * sys_.vectors(0, s);
  }
  return sys_.vectors.cast<Complex>() * coeffs;
}

Eigen::MatrixXcd evolve(const JacobiMatrix& m, double t) {
  return Evolver(m).at(t);
}

std::pair<Complex, Complex> transfer_amplitudes(const JacobiMatrix& m,
                                                double t) {
  const Eigen::VectorXcd col = Evolver(m).column0(t);
  return {col(0), col(col.size() - 1)};
}

double transfer_fidelity(const JacobiMatrix& m, double t) {
  return std::abs(Evolver(m).column0(t)(m.N()));
}

FRReport certify_fr(const Evolver& ev, double T, double theta, double phi,
                    double tol) {
  const int N = ev.N();
  const Eigen::VectorXcd col = ev.column0(T);

  FRReport r;
  r.T = T;
  r.tol = tol;
  r.xi_measured = col(0);
  r.eta_measured = col(N);
  r.leakage = N > 1 ? col.segment(1, N - 1).squaredNorm() : 0.0;

  const double s2t = std::sin(2.0 * theta);
  const double c2t = std::cos(2.0 * theta);
  const Complex ph = std::polar(1.0, phi);
  r.xi_predicted = ph * s2t;
  r.eta_predicted = kI * ph * c2t;
  r.phi_predicted = wrap_two_pi(phi);

  // Read the global phase off whichever amplitude is better conditioned.
  if (std::abs(s2t) >= std::abs(c2t)) {
    r.phi_measured = wrap_two_pi(std::arg(r.xi_measured / s2t));
  } else {
    r.phi_measured = wrap_two_pi(std::arg(r.eta_measured / (kI * c2t)));
  }

  const double err = std::max(std::abs(r.xi_measured - r.xi_predicted),
                              std::abs(r.eta_measured - r.eta_predicted));
  r.passes = std::max(err, r.leakage) <= tol;
  return r;
}

FRReport verify_fr(const JacobiMatrix& m, const FRSolution& sol, double tol) {
  const RevivalAngles angles = revival_angles(sol, m.N());
  return certify_fr(Evolver(m), sol.T(), angles.theta, angles.phi, tol);
}

bool verify_pst(const JacobiMatrix& m, const FRSolution& sol, double tol) {
  if (!sol.pst_multiple) {
    throw NoPstScheduled("solution has no perfect-transfer time (q, p both odd)");
  }
  const double t = static_cast<double>(*sol.pst_multiple) * sol.T();
  return transfer_fidelity(m, t) >= 1.0 - tol;
}

bool block_form_check(const JacobiMatrix& m, const FRSolution& sol,
                      double tol) {
  const int N = m.N();
  const Eigen::MatrixXcd u = Evolver(m).at(sol.T());
  const RevivalAngles angles = revival_angles(sol, N);
  const double s2t = std::sin(2.0 * angles.theta);
  const double c2t = std::cos(2.0 * angles.theta);
  const Complex ph = std::polar(1.0, angles.phi);

  // e^{i phi}(sin 2theta I + i cos 2theta R); the coincident central
  // entry for N even becomes e^{i phi} e^{i(pi/2 - 2theta)} on its own.
  Eigen::MatrixXcd predicted = Eigen::MatrixXcd::Zero(N + 1, N + 1);
  for (int i = 0; i <= N; ++i) {
    predicted(i, i) += ph * s2t;
    predicted(i, N - i) += kI * ph * c2t;
  }
  return (u - predicted).cwiseAbs().maxCoeff() <= tol;
}

Eigen::SparseMatrix<double> full_xx_hamiltonian(const CouplingTable& table) {
  const int N = table.N;
  if (N > 12) {
    std::ostringstream msg;
    msg << "full-space oracle capped at N = 12, got N = " << N;
    throw DimensionCap(msg.str());
  }
  const std::size_t dim = std::size_t{1} << (N + 1);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(dim * (N + 2));
  for (std::size_t b = 0; b < dim; ++b) {
    double diag = 0.0;
    for (int n = 0; n <= N; ++n) {
      if ((b >> n) & 1u) {
        diag += table.B[n];  // (sz_n + 1)/2 projects onto spin up
      }
    }
    if (diag != 0.0) {
      trips.emplace_back(static_cast<int>(b), static_cast<int>(b), diag);
    }
    for (int n = 0; n < N; ++n) {
      const bool up_lo = (b >> n) & 1u;
      const bool up_hi = (b >> (n + 1)) & 1u;
      if (up_lo != up_hi) {
        // (sx sx + sy sy)/2 hops the excitation between sites n, n+1.
        const std::size_t b2 =
            b ^ ((std::size_t{1} << n) | (std::size_t{1} << (n + 1)));
        trips.emplace_back(static_cast<int>(b2), static_cast<int>(b),
                           table.J[n + 1]);
      }
    }
  }
  Eigen::SparseMatrix<double> h(static_cast<int>(dim), static_cast<int>(dim));
  h.setFromTriplets(trips.begin(), trips.end());
  return h;
}

Eigen::SparseMatrix<double> total_magnetization(int N) {
  const std::size_t dim = std::size_t{1} << (N + 1);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(dim);
  for (std::size_t b = 1; b < dim; ++b) {
    trips.emplace_back(static_cast<int>(b), static_cast<int>(b),
                       static_cast<double>(std::popcount(b)));
  }
  Eigen::SparseMatrix<double> z(static_cast<int>(dim), static_cast<int>(dim));
  z.setFromTriplets(trips.begin(), trips.end());
  return z;
}

Eigen::MatrixXd one_excitation_oracle(const CouplingTable& table) {
  const int N = table.N;
  const Eigen::SparseMatrix<double> h = full_xx_hamiltonian(table);
  Eigen::MatrixXd restriction(N + 1, N + 1);
  for (int mrow = 0; mrow <= N; ++mrow) {
    for (int ncol = 0; ncol <= N; ++ncol) {
      restriction(mrow, ncol) = h.coeff(1 << mrow, 1 << ncol);
    }
  }
  return restriction;
}

}  // namespace frchain
