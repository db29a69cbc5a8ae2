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
#include <vector>

#include "frchain/chain.hpp"

namespace frchain {

/// Which quadratic family a spectral point belongs to: (s+a)^2 or (s+c)^2.
enum class Sublattice { A, C };

/// Closed-form spectrum, sorted ascending, with family labels.
struct Spectrum {
  std::vector<double> values;
  std::vector<Sublattice> sublattice;
};

/// Enumerates the variant's lattice:
///   OddN:     (s+a)^2 for s = 0..j  and (s+c)^2 for s = 0..j,   j = (N-1)/2
///   EvenN:    (s+a)^2 for s = 0..j  and (s+c)^2 for s = 0..j-1, j = N/2
///   DualHahn: (s/2 + a)^2 for s = 0..N
/// Throws RangeViolation if two points coincide (cannot happen inside
/// the strict parameter window).
Spectrum bilattice(const ChainParams& params);

/// Spectral decomposition of a Jacobi matrix.  Eigenvalues sorted
/// ascending; eigenvector columns orthonormal with the first nonzero
/// component positive; weights w_s = (first component of vector s)^2.
struct EigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  Eigen::VectorXd weights;
};

/// Dense symmetric eigensolve with a per-pair residual contract
/// ||M v - lambda v|| <= 1e-12 ||M||; ConvergenceFailure otherwise.
EigenSystem eigensystem(const JacobiMatrix& m);

/// chi_0(x) .. chi_upto(x) by the three-term recurrence
/// x chi_n = J_{n+1} chi_{n+1} + B_n chi_n + J_n chi_{n-1},
/// seeded chi_{-1} = 0, chi_0 = 1.  Requires upto <= N.
std::vector<double> eval_orthonormal(const CouplingTable& table, double x,
                                     int upto);

/// Mirror-symmetry signature: true iff chi_N(x_s) = (-1)^{N+s} at every
/// spectral point, to tol.  Equivalent to persymmetry of the matrix.
bool mirror_signature(const CouplingTable& table, const Spectrum& spectrum,
                      double tol);

}  // namespace frchain
