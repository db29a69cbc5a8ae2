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

#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "frchain/deform.hpp"
#include "frchain/dynamics.hpp"
#include "frchain/spectral.hpp"

using namespace frchain;

namespace {

constexpr double kPi = std::numbers::pi;

CouplingTable table_for(int N) {
  const Variant v = N % 2 == 1 ? Variant::OddN : Variant::EvenN;
  const ChainParams p = validate_params(7.0 / 6.0, 4.0 / 3.0, N, v);
  return couplings(p);
}

double off_tridiagonal_max(const Eigen::MatrixXd& m) {
  double worst = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (std::abs(i - j) > 1) {
        worst = std::max(worst, std::abs(m(i, j)));
      }
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("deformation matrix structure") {
  SUBCASE("sigma = 0 is the reversal") {
    for (int N : {5, 6}) {
      CHECK((deformation_matrix(N, 0.0) - reversal_matrix(N))
                .cwiseAbs()
                .maxCoeff() == 0.0);
    }
  }
  SUBCASE("sigma = pi/2 is the signed identity for N odd") {
    const Eigen::MatrixXd v = deformation_matrix(5, kPi / 2);
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(6, 6);
    for (int i = 0; i < 6; ++i) {
      expected(i, i) = i < 3 ? 1.0 : -1.0;
    }
    CHECK((v - expected).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("V is a symmetric involution") {
    for (int N : {5, 6}) {
      for (double sigma : {kPi / 12, kPi / 6, kPi / 5, -kPi / 7, 1.1}) {
        const Eigen::MatrixXd v = deformation_matrix(N, sigma);
        CHECK((v - v.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((v * v - Eigen::MatrixXd::Identity(N + 1, N + 1))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-14);
      }
    }
  }
}

TEST_CASE("conjugation is isospectral and stays tridiagonal") {
  for (int N : {5, 6}) {
    const JacobiMatrix m = assemble_jacobi(table_for(N));
    for (double sigma : {kPi / 12, kPi / 6, kPi / 5}) {
      const JacobiMatrix conj = conjugate(m, sigma);
      CHECK(off_tridiagonal_max(conj.mat) <= 1e-12);

      const EigenSystem before = eigensystem(m);
      const EigenSystem after = eigensystem(conj);
      for (int s = 0; s <= N; ++s) {
        CHECK(std::abs(before.values(s) - after.values(s)) <= 1e-11);
      }
    }
  }
}

TEST_CASE("conjugation edge cases") {
  const JacobiMatrix m = assemble_jacobi(table_for(5));
  SUBCASE("sigma = 0 leaves a persymmetric matrix unchanged") {
    const JacobiMatrix conj = conjugate(m, 0.0);
    CHECK((conj.mat - m.mat).cwiseAbs().maxCoeff() <= 1e-13);
  }
  SUBCASE("non-persymmetric input is refused") {
    const JacobiMatrix broken = conjugate(m, kPi / 6);
    CHECK_FALSE(check_persymmetry(broken, 1e-6));
    CHECK_THROWS_AS(conjugate(broken, kPi / 6), NotPersymmetric);
  }
  SUBCASE("conjugating twice restores the original") {
    const JacobiMatrix once = conjugate(m, kPi / 6);
    const Eigen::MatrixXd v = deformation_matrix(5, kPi / 6);
    const Eigen::MatrixXd twice = v * once.mat * v;
    CHECK((twice - m.mat).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("Q = VRV symmetry of the deformed matrix") {
    const JacobiMatrix conj = conjugate(m, kPi / 6);
    const Eigen::MatrixXd v = deformation_matrix(5, kPi / 6);
    const Eigen::MatrixXd q = v * reversal_matrix(5) * v;
    CHECK((conj.mat - q * conj.mat * q).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("closed-form deformed entries match the conjugation") {
  for (int N : {5, 6}) {
    const CouplingTable t = table_for(N);
    const JacobiMatrix m = assemble_jacobi(t);
    for (double sigma : {kPi / 12, kPi / 6, kPi / 5}) {
      const CouplingTable closed = deformed_entries(t, sigma);
      const JacobiMatrix conj = conjugate(m, sigma);
      const CouplingTable via_v = extract_table(conj);
      for (int n = 0; n <= N; ++n) {
        CHECK(std::abs(closed.B[n] - via_v.B[n]) <= 1e-12);
      }
      for (int n = 1; n <= N; ++n) {
        CHECK(std::abs(closed.J[n] - via_v.J[n]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("deformed entries special angles") {
  const CouplingTable t = table_for(5);
  SUBCASE("sigma = 0 is the identity") {
    const CouplingTable d = deformed_entries(t, 0.0);
    CHECK(d.B == t.B);
    CHECK(d.J == t.J);
  }
  SUBCASE("sigma = pi/4 disconnects the middle of an odd chain") {
    const CouplingTable d = deformed_entries(t, kPi / 4);
    CHECK(std::abs(d.J[3]) <= 1e-15);  // J_3 cos(pi/2), zero up to rounding
  }
  SUBCASE("only mid-chain entries change") {
    const CouplingTable d = deformed_entries(t, kPi / 6);
    for (int n = 0; n <= 5; ++n) {
      if (n != 2 && n != 3) {
        CHECK(d.B[n] == t.B[n]);
      }
    }
    for (int n = 1; n <= 5; ++n) {
      if (n != 3) {
        CHECK(d.J[n] == t.J[n]);
      }
    }
  }
}

TEST_CASE("predicted amplitudes") {
  SUBCASE("sigma = 0 reduces to the mirror-symmetric form") {
    const double theta = 3 * kPi / 8;
    const double phi = 19 * kPi / 12;
    const auto [xi, eta] = predicted_amplitudes(theta, 0.0, phi);
    const std::complex<double> ph = std::polar(1.0, phi);
    CHECK(std::abs(xi - ph * std::sin(2 * theta)) <= 1e-15);
    CHECK(std::abs(eta - std::complex<double>(0, 1) * ph *
                             std::cos(2 * theta)) <= 1e-15);
  }
  SUBCASE("sigma = pi/4 suppresses the transfer entirely") {
    const auto [xi, eta] = predicted_amplitudes(3 * kPi / 8, kPi / 4, 0.0);
    CHECK(std::abs(eta) <= 1e-16);
    CHECK(std::abs(std::abs(xi) - 1.0) <= 1e-15);
  }
  SUBCASE("normalization is identical on a grid") {
    for (int i = 0; i < 12; ++i) {
      for (int k = 0; k < 12; ++k) {
        const double theta = i * kPi / 24.0;
        const double sigma = -kPi / 4 + k * kPi / 22.0;
        const auto [xi, eta] = predicted_amplitudes(theta, sigma, 0.7);
        CHECK(std::abs(std::norm(xi) + std::norm(eta) - 1.0) <= 1e-14);
      }
    }
  }
}

TEST_CASE("deformed dynamics match the two-angle amplitudes") {
  const FRSolution sol = solution_from_integers(6, 14, 16, 1);
  for (int N : {5, 6}) {
    const CouplingTable t = table_for(N);
    const JacobiMatrix m = assemble_jacobi(t);
    const RevivalAngles angles = revival_angles(sol, N);
    for (double sigma : {kPi / 12, kPi / 6, kPi / 5, kPi / 4}) {
      const JacobiMatrix conj = conjugate(m, sigma);
      const Eigen::VectorXcd col = Evolver(conj).column0(sol.T());
      const auto [xi, eta] =
          predicted_amplitudes(angles.theta, sigma, angles.phi);
      CHECK(std::abs(col(0) - xi) <= 1e-7);
      CHECK(std::abs(col(N) - eta) <= 1e-7);
    }
  }
}

TEST_CASE("sigma <-> alpha maps") {
  SUBCASE("alpha = 1/2 is the undeformed chain for both parities") {
    CHECK(sigma_from_alpha(0.5, ChainParity::Odd) == doctest::Approx(0.0));
    CHECK(sigma_from_alpha(0.5, ChainParity::Even) == doctest::Approx(0.0));
  }
  SUBCASE("boundary values") {
    CHECK(sigma_from_alpha(1.0, ChainParity::Odd) ==
          doctest::Approx(-kPi / 4).epsilon(1e-14));
    CHECK(sigma_from_alpha(0.0, ChainParity::Odd) ==
          doctest::Approx(kPi / 4).epsilon(1e-14));
    CHECK(sigma_from_alpha(1.0, ChainParity::Even) ==
          doctest::Approx(kPi / 4).epsilon(1e-14));
  }
  SUBCASE("round trips on the principal branch") {
    for (ChainParity parity : {ChainParity::Odd, ChainParity::Even}) {
      for (int k = 0; k <= 20; ++k) {
        const double alpha = 0.02 + 0.96 * k / 20.0;
        const double sigma = sigma_from_alpha(alpha, parity);
        CHECK(std::abs(sigma) <= kPi / 4 + 1e-15);
        CHECK(std::abs(alpha_from_sigma(sigma, parity) - alpha) <= 1e-14);
      }
    }
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(sigma_from_alpha(-0.1, ChainParity::Odd), RangeViolation);
    CHECK_THROWS_AS(sigma_from_alpha(1.1, ChainParity::Even), RangeViolation);
    CHECK_THROWS_AS(alpha_from_sigma(1.0, ChainParity::Odd), RangeViolation);
  }
  SUBCASE("parity helper") {
    CHECK(parity_of(5) == ChainParity::Odd);
    CHECK(parity_of(6) == ChainParity::Even);
  }
}
