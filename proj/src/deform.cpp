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

#include "frchain/deform.hpp"

#include <cmath>
#include <numbers>

namespace frchain {

ChainParity parity_of(int N) {
  return N % 2 == 0 ? ChainParity::Even : ChainParity::Odd;
}

Eigen::MatrixXd deformation_matrix(int N, double sigma) {
  const int n = N + 1;
  const double s = std::sin(sigma);
  const double c = std::cos(sigma);
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int r = N - i;
    if (i == r) {
      v(i, i) = 1.0;  // fixed central site, N even
      continue;
    }
    v(i, i) = i < r ? s : -s;
    v(i, r) = c;
  }
  return v;
}

JacobiMatrix conjugate(const JacobiMatrix& m, double sigma,
                       double persym_tol) {
  if (!check_persymmetry(m, persym_tol)) {
    throw NotPersymmetric(
        "conjugation by V only preserves tridiagonality for persymmetric "
        "input");
  }
  const Eigen::MatrixXd v = deformation_matrix(m.N(), sigma);
  return JacobiMatrix{v * m.mat * v};
}

CouplingTable deformed_entries(const CouplingTable& table, double sigma) {
  CouplingTable out = table;
  const int N = table.N;
  if (N % 2 == 1) {
    const int mid = (N + 1) / 2;
    const double b = table.B[(N - 1) / 2];
    const double jmid = table.J[mid];
    out.J[mid] = jmid * std::cos(2.0 * sigma);
    out.B[(N - 1) / 2] = b + jmid * std::sin(2.0 * sigma);
    out.B[(N + 1) / 2] = b - jmid * std::sin(2.0 * sigma);
  } else {
    const int mid = N / 2;
    const double jmid = table.J[mid];
    out.J[mid] = jmid * (std::cos(sigma) + std::sin(sigma));
    out.J[mid + 1] = jmid * (std::cos(sigma) - std::sin(sigma));
  }
  return out;
}

std::pair<std::complex<double>, std::complex<double>> predicted_amplitudes(
    double theta, double sigma, double phi) {
  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> ph = std::polar(1.0, phi);
  const double s2t = std::sin(2.0 * theta);
  const double c2t = std::cos(2.0 * theta);
  const std::complex<double> xi = ph * (s2t + i * c2t * std::sin(2.0 * sigma));
  const std::complex<double> eta = i * ph * c2t * std::cos(2.0 * sigma);
  return {xi, eta};
}

double sigma_from_alpha(double alpha, ChainParity parity) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw RangeViolation("alpha must lie in [0, 1]");
  }
  if (parity == ChainParity::Odd) {
    return 0.5 * std::asin(1.0 - 2.0 * alpha);
  }
  return std::asin((std::sqrt(alpha) - std::sqrt(1.0 - alpha)) /
                   std::numbers::sqrt2);
}

double alpha_from_sigma(double sigma, ChainParity parity) {
  if (!(std::abs(sigma) <= 0.25 * std::numbers::pi + 1e-12)) {
    throw RangeViolation("sigma must lie on the principal branch [-pi/4, pi/4]");
  }
  if (parity == ChainParity::Odd) {
    return 0.5 * (1.0 - std::sin(2.0 * sigma));
  }
  const double u = std::numbers::sqrt2 * std::sin(sigma);
  const double root = 0.5 * (u + std::sqrt(2.0 - u * u));  // = sqrt(alpha)
  return root * root;
}

}  // namespace frchain
