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

#include "frchain/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <tuple>

namespace frchain {

namespace {

long long parity(long long x) { return ((x % 2) + 2) % 2; }

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::OddN:
      return "odd";
    case Variant::EvenN:
      return "even";
    case Variant::DualHahn:
      return "dual-hahn";
  }
  return "?";
}

ChainParams validate_params(double a, double c, int N, Variant variant) {
  if (N < 1) {
    throw TooSmall("N must be at least 1");
  }
  if (!(a > -0.5)) {
    std::ostringstream msg;
    msg << "a = " << a << " violates a > -1/2";
    throw RangeViolation(msg.str());
  }
  if (!(std::abs(a) < c && c < std::abs(a + 1.0))) {
    std::ostringstream msg;
    msg << "c = " << c << " violates |a| < c < |a+1| for a = " << a;
    throw RangeViolation(msg.str());
  }
  switch (variant) {
    case Variant::OddN:
      if (N % 2 == 0) {
        throw ParityMismatch("odd-N family requires N odd");
      }
      if (N < 3) {
        throw TooSmall("odd-N classification requires N >= 3");
      }
      break;
    case Variant::EvenN:
      if (N % 2 != 0) {
        throw ParityMismatch("even-N family requires N even");
      }
      if (N < 6) {
        throw TooSmall("even-N classification requires N >= 6");
      }
      break;
    case Variant::DualHahn:
      if (c != a + 0.5) {
        throw RangeViolation("dual-Hahn family requires c = a + 1/2 exactly");
      }
      break;
  }
  return ChainParams{a, c, N, variant};
}

long long rational_floor(const Rational& r) {
  const long long n = r.numerator();
  const long long d = r.denominator();  // normalized positive
  if (n >= 0) {
    return n / d;
  }
  return -((-n + d - 1) / d);
}

Rational mod_two(const Rational& r) {
  return r - 2 * rational_floor(r / 2);
}

double FRSolution::T() const {
  return std::numbers::pi * static_cast<double>(alpha1);
}

double FRSolution::theta() const {
  return std::numbers::pi * static_cast<double>(theta_p) /
         (4.0 * static_cast<double>(theta_q));
}

double FRSolution::phi() const {
  return std::numbers::pi * boost::rational_cast<double>(phi_over_pi);
}

RevivalAngles revival_angles(const FRSolution& sol, int N) {
  if (N % 2 != 0) {
    return {sol.theta(), sol.phi()};
  }
  if (sol.theta_p == 0) {
    const Rational shifted = mod_two(sol.phi_over_pi + 1);
    return {0.0, std::numbers::pi * boost::rational_cast<double>(shifted)};
  }
  return {std::numbers::pi / 2 - sol.theta(), sol.phi()};
}

std::optional<long long> pst_schedule(long long theta_p, long long theta_q) {
  if (theta_p == 0) {
    return 1;  // the revival at T itself is a perfect transfer
  }
  if (parity(theta_q) == 0) {
    return theta_q;
  }
  if (parity(theta_p) == 0) {
    return theta_q;
  }
  return std::nullopt;  // q(pi/2 - 2theta) is an even multiple of pi/2
}

FRSolution solution_from_integers(long long alpha1, long long beta1,
                                  long long beta2, long long dgamma) {
  if (alpha1 < 1) {
    throw RangeViolation("alpha1 must be a positive integer");
  }
  if (parity(beta1) != parity(alpha1) || parity(beta2) != parity(alpha1)) {
    throw ParityMismatch("alpha1, beta1, beta2 must share the same parity");
  }
  if (!(beta1 > -alpha1)) {
    throw RangeViolation("beta1 must exceed -alpha1");
  }
  if (!(std::abs(beta1) < beta2 && beta2 < beta1 + 2 * alpha1)) {
    throw RangeViolation("beta2 must satisfy |beta1| < beta2 < beta1 + 2*alpha1");
  }

  // Same parity on both betas makes the product divisible by 4.
  const long long lhs = (beta2 - beta1) * (beta2 + beta1) / 4;
  const Rational four_theta_over_pi =
      Rational(lhs, alpha1) - 2 * dgamma + 1;
  if (four_theta_over_pi < 0 || four_theta_over_pi >= 2) {
    throw RangeViolation(
        "dgamma does not place theta inside [0, pi/2) for these betas");
  }

  FRSolution sol;
  sol.alpha1 = alpha1;
  sol.beta1 = beta1;
  sol.beta2 = beta2;
  sol.dgamma = dgamma;
  sol.a = Rational(beta1, 2 * alpha1);
  sol.c = Rational(beta2, 2 * alpha1);
  sol.theta_p = four_theta_over_pi.numerator();
  sol.theta_q = four_theta_over_pi.denominator();
  // gamma1 = 0, gamma2 = dgamma: phi = pi (gamma1+gamma2) - T(a^2+c^2)/2.
  sol.phi_over_pi = mod_two(Rational(dgamma) -
                            Rational(beta1 * beta1 + beta2 * beta2, 8 * alpha1));
  sol.pst_multiple = pst_schedule(sol.theta_p, sol.theta_q);
  return sol;
}

FRSolution solution_from_rationals(const Rational& a, const Rational& c,
                                   long long alpha1, long long theta_p,
                                   long long theta_q) {
  if (alpha1 < 1) {
    throw RangeViolation("alpha1 must be a positive integer");
  }
  if (theta_q < 1 || theta_p < 0) {
    throw RangeViolation("theta must be given as p/q with q >= 1, p >= 0");
  }
  const Rational b1 = 2 * alpha1 * a;
  const Rational b2 = 2 * alpha1 * c;
  if (b1.denominator() != 1 || b2.denominator() != 1) {
    throw RangeViolation("2*a*alpha1 and 2*c*alpha1 must be integers");
  }
  const long long beta1 = b1.numerator();
  const long long beta2 = b2.numerator();
  const long long lhs = (beta2 - beta1) * (beta2 + beta1) / 4;
  const Rational target(theta_p, theta_q);  // 4 theta / pi
  // lhs/alpha1 = 2 dgamma - 1 + 4 theta/pi must hold with integer dgamma.
  const Rational two_dgamma = Rational(lhs, alpha1) + 1 - target;
  if (two_dgamma.denominator() != 1 || parity(two_dgamma.numerator()) != 0) {
    throw RangeViolation(
        "(a, c, T, theta) do not solve the revival condition with integer "
        "dgamma");
  }
  return solution_from_integers(alpha1, beta1, beta2,
                                two_dgamma.numerator() / 2);
}

std::vector<FRSolution> solve_diophantine(long long alpha1_max,
                                          std::optional<long long> beta1_max) {
  if (alpha1_max < 1) {
    throw RangeViolation("alpha1_max must be at least 1");
  }
  std::vector<FRSolution> out;
  std::set<std::tuple<long long, long long, long long, long long, long long>>
      seen;  // (alpha1, beta1, beta2, theta_p, theta_q)
  for (long long alpha1 = 1; alpha1 <= alpha1_max; ++alpha1) {
    const long long bmax = beta1_max.value_or(8 * alpha1);
    for (long long beta1 = -alpha1 + 2; beta1 <= bmax; beta1 += 2) {
      for (long long beta2 = std::abs(beta1) + 2; beta2 < beta1 + 2 * alpha1;
           beta2 += 2) {
        const long long lhs = (beta2 - beta1) * (beta2 + beta1) / 4;
        // The unique dgamma putting theta in [0, pi/2).
        const long long dgamma =
            rational_floor((Rational(lhs, alpha1) + 1) / 2);
        FRSolution sol = solution_from_integers(alpha1, beta1, beta2, dgamma);
        if (seen.insert({sol.alpha1, sol.beta1, sol.beta2, sol.theta_p,
                         sol.theta_q})
                .second) {
          out.push_back(std::move(sol));
        }
      }
    }
  }
  return out;
}

}  // namespace frchain
