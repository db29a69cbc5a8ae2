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

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "frchain/errors.hpp"

namespace frchain {

/// The three analytic coupling families.  OddN and EvenN are the chains
/// whose spectrum is the quadratic bi-lattice {(s+a)^2} u {(s+c)^2};
/// DualHahn is the degenerate case c = a + 1/2 where the bi-lattice
/// collapses to the single lattice {(s/2+a)^2}.
enum class Variant { OddN, EvenN, DualHahn };

std::string variant_name(Variant v);

/// Parameters of one chain model.  The chain has N+1 sites.
///
/// Admissible window: a > -1/2 and |a| < c < |a+1|, all strict.  The
/// window keeps every coupling square root positive and the spectrum
/// nondegenerate.
struct ChainParams {
  double a = 0.0;
  double c = 0.0;
  int N = 0;
  Variant variant = Variant::OddN;
};

/// Checks the parameter window, the N-parity of the family and the
/// minimal lengths (N >= 3 odd, N >= 6 even; DualHahn takes any N >= 1
/// and requires c = a + 1/2 exactly).
///
/// Throws RangeViolation, ParityMismatch or TooSmall.
ChainParams validate_params(double a, double c, int N, Variant variant);

using Rational = boost::rational<long long>;

/// floor(r) for a reduced fraction (denominator positive).
long long rational_floor(const Rational& r);

/// r reduced into [0, 2), used for angles stored as multiples of pi.
Rational mod_two(const Rational& r);

/// One integer solution of the revival condition
///
///     (beta2 - beta1)(beta1 + beta2) / 4
///         = [2*dgamma - 1 + 4*theta/pi] * alpha1
///
/// together with everything derived from it: the grid offsets
/// a = beta1/(2 alpha1), c = beta2/(2 alpha1), the revival time
/// T = pi*alpha1, the revival angle theta = pi p/(4q) (reduced, q
/// divides alpha1) and the global phase phi.  dgamma is chosen so that
/// theta lands in [0, pi/2); gamma1 = 0 by convention, so phi/pi =
/// dgamma - alpha1 (a^2 + c^2)/2 reduced mod 2.
struct FRSolution {
  long long alpha1 = 1;
  long long beta1 = 0;
  long long beta2 = 0;
  long long dgamma = 0;

  Rational a{0};
  Rational c{0};
  long long theta_p = 0;
  long long theta_q = 1;
  Rational phi_over_pi{0};

  /// q such that perfect transfer happens at q*T; absent when the
  /// parity rule forbids it (q odd and p odd).
  std::optional<long long> pst_multiple;

  double T() const;
  double theta() const;
  double phi() const;
};

/// Revival angle and global phase as realized by a chain of a given
/// length built from this solution.  Chains with an even N carry the
/// opposite mirror signature (-1)^{N+s} on the shared spectral points,
/// which trades theta for pi/2 - theta; when theta = 0 that lands on
/// the window edge and folds back to theta = 0 with phi shifted by pi.
/// The perfect-transfer schedule is unaffected.
struct RevivalAngles {
  double theta = 0.0;
  double phi = 0.0;
};

RevivalAngles revival_angles(const FRSolution& sol, int N);

/// PST schedule from the reduced revival angle theta = pi p/(4q):
/// returns q when q is even, or when q is odd and p is even; returns 1
/// when p = 0 (the revival at T is already a perfect transfer); empty
/// when q and p are both odd.
std::optional<long long> pst_schedule(long long theta_p, long long theta_q);

/// Builds the solution record for explicit integers, validating the
/// parity constraint, the beta window and that the implied theta falls
/// in [0, pi/2).  Throws RangeViolation / ParityMismatch.
FRSolution solution_from_integers(long long alpha1, long long beta1,
                                  long long beta2, long long dgamma);

/// Same record from (a, c, T/pi, theta); beta1 = 2 a alpha1 and
/// beta2 = 2 c alpha1 must come out integer and the revival condition
/// must hold with an integer dgamma, otherwise RangeViolation.
FRSolution solution_from_rationals(const Rational& a, const Rational& c,
                                   long long alpha1, long long theta_p,
                                   long long theta_q);

/// Enumerates every solution with alpha1 <= alpha1_max.  For each
/// alpha1, beta1 runs over (-alpha1, beta1_max] (default 8*alpha1; the
/// window in beta2 - beta1 is intrinsic but beta1 itself is unbounded,
/// so the cap is a completeness caveat).  Output is sorted by
/// (alpha1, beta1, beta2) and deduplicated on (a, c, theta, T).
std::vector<FRSolution> solve_diophantine(
    long long alpha1_max,
    std::optional<long long> beta1_max = std::nullopt);

}  // namespace frchain
