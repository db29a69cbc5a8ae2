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

#include "frchain/chain.hpp"

#include <cmath>
#include <sstream>

namespace frchain {

namespace {

double checked_sqrt(double product, int n) {
  if (!(product > 0.0)) {
    std::ostringstream msg;
    msg << "coupling radicand non-positive at n = " << n << " (" << product
        << ")";
    throw NegativeRadicand(msg.str());
  }
  return std::sqrt(product);
}

}  // namespace

CouplingTable couplings_odd(const ChainParams& params) {
  const int N = params.N;
  const double a = params.a;
  const double c = params.c;
  const double j = (N - 1) / 2;

  CouplingTable t;
  t.N = N;
  t.variant = Variant::OddN;
  t.B.resize(N + 1);
  t.J.assign(N + 1, 0.0);
  for (int n = 0; n <= N; ++n) {
    t.B[n] = 0.5 * (a * (a + j) + c * (c + j) + n * (N - n));
  }
  for (int n = 1; n <= N; ++n) {
    const double num = n * (N + 1.0 - n) * (N - n + a + c) * (n - 1 + a + c) *
                       ((n - j - 1) * (n - j - 1) - (a - c) * (a - c));
    const double den = 4.0 * (N - 2.0 * n) * (N - 2.0 * n + 2.0);
    t.J[n] = checked_sqrt(num / den, n);
  }
  return t;
}

CouplingTable couplings_even(const ChainParams& params) {
  const int N = params.N;
  const double a = params.a;
  const double c = params.c;
  const double j = N / 2;

  CouplingTable t;
  t.N = N;
  t.variant = Variant::EvenN;
  t.B.resize(N + 1);
  t.J.assign(N + 1, 0.0);
  // N even keeps 1 +- (2n - N) odd, so neither denominator vanishes.
  for (int n = 0; n <= N; ++n) {
    t.B[n] = 0.5 * (a * a + c * c + n - n * static_cast<double>(n)) +
             0.25 * (2.0 * n + a + c) * (N - 1) +
             (n + 1.0) * (n + a + c) * (1 + 2 * a - 2 * c) /
                 (4.0 * (1 + 2.0 * n - N)) +
             n * (n - 1 + a + c) * (1 + 2 * a - 2 * c) /
                 (4.0 * (1 - 2.0 * n + N));
  }
  for (int n = 1; n <= N; ++n) {
    const double num = n * (N + 1.0 - n) * (n - 1 + a + c) * (N - n + a + c) *
                       (n - j + a - c) * (n - j + c - a - 1);
    const double den = 4.0 * (N - 2.0 * n + 1) * (N - 2.0 * n + 1);
    t.J[n] = checked_sqrt(num / den, n);
  }
  return t;
}

CouplingTable couplings_dual_hahn(const ChainParams& params) {
  const int N = params.N;
  const double a = params.a;
  const double c = a + 0.5;
  const double j = 0.5 * (N - 1);

  CouplingTable t;
  t.N = N;
  t.variant = Variant::DualHahn;
  t.B.resize(N + 1);
  t.J.assign(N + 1, 0.0);
  for (int n = 0; n <= N; ++n) {
    t.B[n] = 0.5 * (a * (a + j) + c * (c + j) + n * (N - n));
  }
  for (int n = 1; n <= N; ++n) {
    const double num =
        n * (n + 2 * a - 0.5) * (N - n + 2 * a + 0.5) * (N + 1.0 - n);
    t.J[n] = checked_sqrt(num / 16.0, n);
  }
  return t;
}

CouplingTable couplings(const ChainParams& params) {
  switch (params.variant) {
    case Variant::OddN:
      return couplings_odd(params);
    case Variant::EvenN:
      return couplings_even(params);
    case Variant::DualHahn:
      return couplings_dual_hahn(params);
  }
  throw Error("unknown variant");
}

JacobiMatrix assemble_jacobi(const CouplingTable& table) {
  const int N = table.N;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N + 1, N + 1);
  for (int n = 0; n <= N; ++n) {
    m(n, n) = table.B[n];
  }
  for (int n = 1; n <= N; ++n) {
    m(n - 1, n) = table.J[n];
    m(n, n - 1) = table.J[n];
  }
  return JacobiMatrix{std::move(m)};
}

CouplingTable extract_table(const JacobiMatrix& m) {
  const int N = m.N();
  CouplingTable t;
  t.N = N;
  t.B.resize(N + 1);
  t.J.assign(N + 1, 0.0);
  for (int n = 0; n <= N; ++n) {
    t.B[n] = m.mat(n, n);
  }
  for (int n = 1; n <= N; ++n) {
    t.J[n] = m.mat(n - 1, n);
  }
  return t;
}

bool check_persymmetry(const JacobiMatrix& m, double tol) {
  const int N = m.N();
  double worst = 0.0;
  for (int n = 0; n <= N; ++n) {
    worst = std::max(worst, std::abs(m.mat(n, n) - m.mat(N - n, N - n)));
  }
  for (int n = 1; n <= N; ++n) {
    worst =
        std::max(worst, std::abs(m.mat(n - 1, n) - m.mat(N - n, N + 1 - n)));
  }
  return worst <= tol;
}

Eigen::MatrixXd reversal_matrix(int N) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(N + 1, N + 1);
  for (int i = 0; i <= N; ++i) {
    r(i, N - i) = 1.0;
  }
  return r;
}

}  // namespace frchain
