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

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <utility>

#include "frchain/params.hpp"
#include "frchain/spectral.hpp"

namespace frchain {

using Complex = std::complex<double>;

/// One-excitation propagator U(t) = exp(-i t J), computed from one
/// spectral decomposition shared across all sample times.  The
/// decomposition is immutable, so a const Evolver is safe to share
/// across threads.
class Evolver {
 public:
  explicit Evolver(const JacobiMatrix& m) : sys_(eigensystem(m)) {}
  explicit Evolver(EigenSystem sys) : sys_(std::move(sys)) {}

  /// Full U(t) = V diag(e^{-i t x_s}) V^T (complex symmetric).
  Eigen::MatrixXcd at(double t) const;

  /// U(t)|0>, the amplitudes of an excitation launched at site 0.
  Eigen::VectorXcd column0(double t) const;

  const EigenSystem& system() const { return sys_; }
  int N() const { return static_cast<int>(sys_.values.size()) - 1; }

 private:
  EigenSystem sys_;
};

Eigen::MatrixXcd evolve(const JacobiMatrix& m, double t);

/// (U(t)[0,0], U(t)[N,0]): the end-site revival amplitudes (xi, eta).
std::pair<Complex, Complex> transfer_amplitudes(const JacobiMatrix& m,
                                                double t);

/// |U(t)[N,0]|.
double transfer_fidelity(const JacobiMatrix& m, double t);

/// Measured against predicted two-site revival at time T.
///
/// Prediction: xi = e^{i phi} sin 2theta, eta = i e^{i phi} cos 2theta.
/// leakage is the probability left on interior sites 1..N-1, so
/// |xi|^2 + |eta|^2 + leakage = 1 up to rounding.  passes iff
/// max(|xi_m - xi_p|, |eta_m - eta_p|, leakage) <= tol.
struct FRReport {
  double T = 0.0;
  Complex xi_measured{};
  Complex eta_measured{};
  Complex xi_predicted{};
  Complex eta_predicted{};
  double leakage = 0.0;
  double phi_measured = 0.0;
  double phi_predicted = 0.0;
  bool passes = false;
  double tol = 0.0;
};

/// Evolves to T and compares against the (theta, phi) prediction.
FRReport certify_fr(const Evolver& ev, double T, double theta, double phi,
                    double tol);

/// certify_fr at the solution's own (T, theta, phi).
FRReport verify_fr(const JacobiMatrix& m, const FRSolution& sol, double tol);

/// True iff |U(q T)[N,0]| >= 1 - tol with q = sol.pst_multiple.
/// Throws NoPstScheduled when the solution has no transfer time.
bool verify_pst(const JacobiMatrix& m, const FRSolution& sol, double tol);

/// Checks the whole matrix e^{-i T J} against the revival form
/// e^{i phi} (sin 2theta I + i cos 2theta R); for N even the central
/// entry of that form is sin 2theta + i cos 2theta = e^{i(pi/2 - 2theta)}.
bool block_form_check(const JacobiMatrix& m, const FRSolution& sol,
                      double tol);

/// Full 2^(N+1)-dimensional XX Hamiltonian
///   H = 1/2 sum_n J_{n+1} (sx_n sx_{n+1} + sy_n sy_{n+1})
///     + 1/2 sum_n B_n (sz_n + 1)
/// over the computational basis (bit n set = spin up at site n).
/// Throws DimensionCap for N > 12.
Eigen::SparseMatrix<double> full_xx_hamiltonian(const CouplingTable& table);

/// Number operator sum_n (sz_n + 1)/2: diagonal popcount.
Eigen::SparseMatrix<double> total_magnetization(int N);

/// Restriction of the full Hamiltonian to the one-excitation sector in
/// the basis |n> = single spin up at site n.  Equals the assembled
/// Jacobi matrix entrywise.
Eigen::MatrixXd one_excitation_oracle(const CouplingTable& table);

}  // namespace frchain
