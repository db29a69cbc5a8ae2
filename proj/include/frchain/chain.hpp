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
#include <optional>
#include <vector>

#include "frchain/params.hpp"

namespace frchain {

/// Fields and couplings of an XX chain with N+1 sites.
///
/// B[n] is the field at site n (n = 0..N).  J[n] is the coupling
/// between sites n-1 and n (n = 1..N); J[0] is kept at 0 so the arrays
/// index like the formulas.  Tables produced by the three builders are
/// persymmetric: J[n] = J[N+1-n], B[n] = B[N-n].
struct CouplingTable {
  int N = 0;
  std::vector<double> B;
  std::vector<double> J;
  std::optional<Variant> variant;
};

/// Real symmetric tridiagonal matrix: diagonal B, off-diagonal J.
/// Stored dense; entries outside the three bands are zero (exactly for
/// assembled tables, to rounding for conjugated ones).
struct JacobiMatrix {
  Eigen::MatrixXd mat;

  int N() const { return static_cast<int>(mat.rows()) - 1; }
};

/// Couplings of the N = 2j+1 family (para-Racah recurrence
/// coefficients on the quadratic bi-lattice):
///
///   B_n = [a(a+j) + c(c+j) + n(N-n)] / 2
///   J_n^2 = n(N+1-n)(N-n+a+c)(n-1+a+c)[(n-j-1)^2-(a-c)^2]
///           / [4(N-2n)(N-2n+2)]
///
/// The signed factors are multiplied first and a single square root is
/// taken; a non-positive product throws NegativeRadicand.
CouplingTable couplings_odd(const ChainParams& params);

/// Couplings of the N = 2j family (one spectral point removed from the
/// top of the odd bi-lattice).
CouplingTable couplings_even(const ChainParams& params);

/// Degenerate family c = a + 1/2 (dual-Hahn recurrence coefficients),
/// valid for either parity of N:
///
///   J_n = sqrt(n(n+2a-1/2)(N-n+2a+1/2)(N+1-n)) / 4
///   B_n = [a(a+j) + c(c+j) + n(N-n)] / 2   with j = (N-1)/2
///
/// The B_n line is the c = a+1/2 substitution into the odd-family B_n;
/// it satisfies the trace identity sum B_n = sum x_s, and for even N it
/// agrees with the even-family formula because the terms carrying
/// (1 + 2a - 2c) vanish.
CouplingTable couplings_dual_hahn(const ChainParams& params);

/// Dispatch on params.variant.
CouplingTable couplings(const ChainParams& params);

JacobiMatrix assemble_jacobi(const CouplingTable& table);

/// Tridiagonal part of a matrix, back into table form (variant unset).
CouplingTable extract_table(const JacobiMatrix& m);

/// True iff max_n |J_n - J_{N+1-n}| <= tol and max_n |B_n - B_{N-n}| <= tol.
bool check_persymmetry(const JacobiMatrix& m, double tol);

/// The anti-diagonal reversal matrix of order N+1.
Eigen::MatrixXd reversal_matrix(int N);

}  // namespace frchain
