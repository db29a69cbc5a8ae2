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
#include <complex>
#include <utility>

#include "frchain/chain.hpp"

namespace frchain {

enum class ChainParity { Odd, Even };

ChainParity parity_of(int N);

/// Deformation parameters: the rotation angle sigma and the equivalent
/// para-Racah alpha, related by sin 2sigma = 1 - 2 alpha (N odd) or
/// sin sigma = (sqrt(alpha) - sqrt(1-alpha)) / sqrt(2) (N even).
struct DeformationAngle {
  double sigma = 0.0;
  double alpha = 0.5;
  ChainParity parity = ChainParity::Odd;
};

/// The symmetric involution V (V^2 = I): diagonal +sin(sigma) on the
/// top half, -sin(sigma) on the bottom half, cos(sigma) on the
/// anti-diagonal; for N even the central entry is fixed at 1.
/// At sigma = 0 it reduces to the reversal matrix R.
Eigen::MatrixXd deformation_matrix(int N, double sigma);

/// Isospectral deformation J~ = V J V.  Requires a persymmetric input
/// (otherwise the product would not be tridiagonal); throws
/// NotPersymmetric.  The result satisfies J~ = Q J~ Q with Q = V R V.
JacobiMatrix conjugate(const JacobiMatrix& m, double sigma,
                       double persym_tol = 1e-9);

/// Closed form of the conjugation: only the mid-chain entries change.
///
///   N odd:  J'_{(N+1)/2} = J_{(N+1)/2} cos 2sigma
///           B'_{(N-1)/2} = B_{(N-1)/2} + J_{(N+1)/2} sin 2sigma
///           B'_{(N+1)/2} = B_{(N-1)/2} - J_{(N+1)/2} sin 2sigma
///   N even: J'_{N/2}   = J_{N/2} (cos sigma + sin sigma)
///           J'_{N/2+1} = J_{N/2} (cos sigma - sin sigma)
///
/// The even-N orientation is fixed by direct computation of V J V with
/// the V above (the two couplings swap under sigma -> -sigma).
CouplingTable deformed_entries(const CouplingTable& table, double sigma);

/// Revival amplitudes of the deformed chain at its revival time:
///   xi  = e^{i phi} (sin 2theta + i cos 2theta sin 2sigma)
///   eta = i e^{i phi} cos 2theta cos 2sigma
/// with |xi|^2 + |eta|^2 = 1 identically.
std::pair<std::complex<double>, std::complex<double>> predicted_amplitudes(
    double theta, double sigma, double phi);

/// Principal-branch inversions of the sigma <-> alpha maps; sigma in
/// [-pi/4, pi/4] for alpha in [0, 1].  Throws RangeViolation outside.
double sigma_from_alpha(double alpha, ChainParity parity);
double alpha_from_sigma(double sigma, ChainParity parity);

}  // namespace frchain
