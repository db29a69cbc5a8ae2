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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <tuple>

#include "doctest.h"
#include "frchain/params.hpp"

using namespace frchain;

namespace {

// Independent enumeration straight off the revival condition written
// with theta = pi p / (4 alpha1), p integer (not necessarily reduced):
//   (beta2-beta1)(beta1+beta2)/4 = (2 dgamma - 1) alpha1 + p
// Collects (alpha1, beta1, beta2, dgamma, reduced p/q) tuples by brute
// force over an explicit box.
using Key = std::tuple<long long, long long, long long, long long, long long,
                       long long>;

std::set<Key> brute_force_window(long long alpha1_hi, long long beta1_abs_hi,
                                 long long beta2_hi, long long dgamma_abs_hi) {
  std::set<Key> found;
  for (long long a1 = 1; a1 <= alpha1_hi; ++a1) {
    for (long long b1 = -beta1_abs_hi; b1 <= beta1_abs_hi; ++b1) {
      for (long long b2 = -beta2_hi; b2 <= beta2_hi; ++b2) {
        if ((((b1 - a1) % 2) + 2) % 2 != 0) continue;
        if ((((b2 - a1) % 2) + 2) % 2 != 0) continue;
        if (!(b1 > -a1)) continue;
        if (!(std::llabs(b1) < b2 && b2 < b1 + 2 * a1)) continue;
        const long long lhs = (b2 - b1) * (b2 + b1) / 4;
        for (long long dg = -dgamma_abs_hi; dg <= dgamma_abs_hi; ++dg) {
          const long long p = lhs - (2 * dg - 1) * a1;
          if (p < 0 || p >= 2 * a1) continue;  // theta in [0, pi/2)
          const long long g = std::gcd(p, a1);
          found.insert({a1, b1, b2, dg, p / g, a1 / g});
        }
      }
    }
  }
  return found;
}

}  // namespace

TEST_CASE("validate_params accepts the documented models") {
  CHECK_NOTHROW(validate_params(7.0 / 6.0, 4.0 / 3.0, 5, Variant::OddN));
  CHECK_NOTHROW(validate_params(0.0, 0.5, 5, Variant::DualHahn));
  CHECK_NOTHROW(validate_params(7.0 / 6.0, 4.0 / 3.0, 6, Variant::EvenN));
  // dual-Hahn takes any N >= 1
  CHECK_NOTHROW(validate_params(0.25, 0.75, 1, Variant::DualHahn));
  CHECK_NOTHROW(validate_params(0.25, 0.75, 2, Variant::DualHahn));
}

TEST_CASE("validate_params rejects out-of-window parameters") {
  CHECK_THROWS_AS(validate_params(1.0, 0.5, 5, Variant::OddN), RangeViolation);
  CHECK_THROWS_AS(validate_params(-0.5, 0.6, 5, Variant::OddN),
                  RangeViolation);
  CHECK_THROWS_AS(validate_params(0.25, 1.5, 5, Variant::OddN),
                  RangeViolation);  // c >= |a+1|
  CHECK_THROWS_AS(validate_params(0.25, 0.25, 5, Variant::OddN),
                  RangeViolation);  // c = |a| not allowed
}

TEST_CASE("validate_params checks parity and minimal length") {
  CHECK_THROWS_AS(validate_params(7.0 / 6.0, 4.0 / 3.0, 6, Variant::OddN),
                  ParityMismatch);
  CHECK_THROWS_AS(validate_params(7.0 / 6.0, 4.0 / 3.0, 5, Variant::EvenN),
                  ParityMismatch);
  CHECK_THROWS_AS(validate_params(7.0 / 6.0, 4.0 / 3.0, 1, Variant::OddN),
                  TooSmall);
  CHECK_THROWS_AS(validate_params(7.0 / 6.0, 4.0 / 3.0, 4, Variant::EvenN),
                  TooSmall);
  // c = a + 1/2 grids remain legal members of the odd family.
  CHECK_NOTHROW(validate_params(0.0, 0.5, 5, Variant::OddN));
  CHECK_THROWS_AS(validate_params(0.25, 0.8, 5, Variant::DualHahn),
                  RangeViolation);  // c != a + 1/2
}

TEST_CASE("pst_schedule follows the parity rule") {
  CHECK(pst_schedule(3, 2) == 2);
  CHECK(pst_schedule(0, 1) == 1);
  CHECK(pst_schedule(1, 3) == std::nullopt);
  CHECK(pst_schedule(2, 3) == 3);
  CHECK(pst_schedule(1, 2) == 2);
  CHECK(pst_schedule(1, 1) == std::nullopt);
}

TEST_CASE("search reproduces the documented solutions") {
  const auto sols = solve_diophantine(6);

  SUBCASE("alpha1 = 6 paper solution") {
    const auto it = std::find_if(sols.begin(), sols.end(), [](const auto& s) {
      return s.alpha1 == 6 && s.beta1 == 14 && s.beta2 == 16;
    });
    REQUIRE(it != sols.end());
    CHECK(it->dgamma == 1);
    CHECK(it->a == Rational(7, 6));
    CHECK(it->c == Rational(8, 6));  // reduces to 4/3
    CHECK(it->theta_p == 3);
    CHECK(it->theta_q == 2);
    CHECK(it->T() == doctest::Approx(6 * std::numbers::pi).epsilon(1e-15));
    CHECK(it->phi_over_pi == Rational(19, 12));
    CHECK(it->pst_multiple == 2);
  }

  SUBCASE("alpha1 = 2 two-site revival at 2 pi") {
    const auto it = std::find_if(sols.begin(), sols.end(), [](const auto& s) {
      return s.alpha1 == 2 && s.beta1 == 0 && s.beta2 == 2;
    });
    REQUIRE(it != sols.end());
    CHECK(it->dgamma == 0);
    CHECK(it->a == Rational(0));
    CHECK(it->c == Rational(1, 2));
    CHECK(it->theta_p == 3);
    CHECK(it->theta_q == 2);
  }

  SUBCASE("alpha1 = 4 theta = 0 transfer-only model") {
    const auto it = std::find_if(sols.begin(), sols.end(), [](const auto& s) {
      return s.alpha1 == 4 && s.beta1 == 0 && s.beta2 == 4;
    });
    REQUIRE(it != sols.end());
    CHECK(it->dgamma == 1);
    CHECK(it->theta_p == 0);
    CHECK(it->theta_q == 1);
    CHECK(it->pst_multiple == 1);
    CHECK(it->phi_over_pi == Rational(1, 2));
  }
}

TEST_CASE("every emitted solution satisfies the exact revival condition") {
  const auto sols = solve_diophantine(6);
  REQUIRE(!sols.empty());
  for (const auto& s : sols) {
    // Exact integer/rational arithmetic on both sides.
    const long long lhs = (s.beta2 - s.beta1) * (s.beta1 + s.beta2) / 4;
    const Rational rhs =
        (Rational(2 * s.dgamma - 1) + Rational(s.theta_p, s.theta_q)) *
        s.alpha1;
    CHECK(Rational(lhs) == rhs);

    // Same parity throughout.
    CHECK((s.alpha1 - s.beta1) % 2 == 0);
    CHECK((s.alpha1 - s.beta2) % 2 == 0);

    // Beta window.
    CHECK(s.beta1 > -s.alpha1);
    CHECK(std::llabs(s.beta1) < s.beta2);
    CHECK(s.beta2 < s.beta1 + 2 * s.alpha1);

    // theta reduced, in [0, pi/2), q | alpha1.
    CHECK(std::gcd(s.theta_p, s.theta_q) == 1);
    CHECK(s.theta_p >= 0);
    CHECK(Rational(s.theta_p, s.theta_q) < 2);
    CHECK(s.alpha1 % s.theta_q == 0);

    // Derived grid parameters pass validation for both chain parities.
    const double a = boost::rational_cast<double>(s.a);
    const double c = boost::rational_cast<double>(s.c);
    CHECK_NOTHROW(validate_params(a, c, 5, Variant::OddN));
    CHECK_NOTHROW(validate_params(a, c, 6, Variant::EvenN));
  }
}

TEST_CASE("window exhaustiveness against brute force") {
  // Box: alpha1 <= 3, |beta1| <= 10, |beta2| <= 12, |dgamma| <= 5.
  const auto brute = brute_force_window(3, 10, 12, 5);
  const auto sols = solve_diophantine(3, 10);
  std::set<Key> solver;
  for (const auto& s : sols) {
    if (std::llabs(s.beta1) > 10 || std::llabs(s.beta2) > 12 ||
        std::llabs(s.dgamma) > 5) {
      continue;
    }
    solver.insert(
        {s.alpha1, s.beta1, s.beta2, s.dgamma, s.theta_p, s.theta_q});
  }
  CHECK(!brute.empty());
  CHECK(brute == solver);
}

TEST_CASE("solution_from_integers validates its window") {
  CHECK_NOTHROW(solution_from_integers(6, 14, 16, 1));
  CHECK_THROWS_AS(solution_from_integers(0, 0, 0, 0), RangeViolation);
  CHECK_THROWS_AS(solution_from_integers(6, 13, 16, 1), ParityMismatch);
  CHECK_THROWS_AS(solution_from_integers(6, -6, 2, 0), RangeViolation);
  CHECK_THROWS_AS(solution_from_integers(6, 14, 14, 1), RangeViolation);
  CHECK_THROWS_AS(solution_from_integers(6, 14, 28, 1), RangeViolation);
  // Wrong dgamma pushes theta outside [0, pi/2).
  CHECK_THROWS_AS(solution_from_integers(6, 14, 16, 0), RangeViolation);
}

TEST_CASE("solution_from_rationals round-trips the integer form") {
  const auto sols = solve_diophantine(6);
  for (const auto& s : sols) {
    const auto back =
        solution_from_rationals(s.a, s.c, s.alpha1, s.theta_p, s.theta_q);
    CHECK(back.beta1 == s.beta1);
    CHECK(back.beta2 == s.beta2);
    CHECK(back.dgamma == s.dgamma);
    CHECK(back.phi_over_pi == s.phi_over_pi);
  }
  CHECK_THROWS_AS(solution_from_rationals(Rational(1, 3), Rational(2, 3), 1,
                                          0, 1),
                  RangeViolation);
}

TEST_CASE("beta1_max flag widens and narrows the search") {
  const auto narrow = solve_diophantine(6, 2);
  const auto wide = solve_diophantine(6, 48);
  CHECK(narrow.size() < wide.size());
  for (const auto& s : narrow) {
    CHECK(s.beta1 <= 2);
  }
}

TEST_CASE("rational helpers") {
  CHECK(rational_floor(Rational(7, 2)) == 3);
  CHECK(rational_floor(Rational(-7, 2)) == -4);
  CHECK(rational_floor(Rational(6, 3)) == 2);
  CHECK(mod_two(Rational(-101, 12)) == Rational(19, 12));
  CHECK(mod_two(Rational(4)) == Rational(0));
}
