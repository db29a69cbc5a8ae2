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

#include "frchain/chain.hpp"

namespace frchain {

/// Ratio sequence driving the removal of the top spectral point from an
/// odd-N chain:
///
///   A_n = (N-n)(n-j+a-c)(N-n-1+a+c) / (2(2n-N)),  j = (N-1)/2.
///
/// A[0..N]; A[N] = 0.  All A_n with n < N are positive inside the
/// parameter window, so the coupling update stays real.
struct SurgeryRatios {
  std::vector<double> A;
};

/// Throws DivisionByZero if called with even N (2n - N would vanish).
SurgeryRatios surgery_ratios(const ChainParams& params_odd);

/// Removes the largest eigenvalue of the odd-N chain:
///
///   B'_n = B_{n+1} + A_{n+1} - A_n,   J'_n = J_n sqrt(A_n / A_{n-1})
///
/// and returns the resulting table with N-1 (even) in the N+1-sites
/// convention.  The output is persymmetric, its spectrum is the odd
/// bi-lattice minus its top point, and it coincides with
/// couplings_even at the same (a, c).
CouplingTable remove_top_level(const ChainParams& params_odd);

}  // namespace frchain
