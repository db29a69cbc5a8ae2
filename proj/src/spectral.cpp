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

#include "frchain/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace frchain {

Spectrum bilattice(const ChainParams& params) {
  const int N = params.N;
  const double a = params.a;
  const double c = params.c;
  std::vector<std::pair<double, Sublattice>> pts;
  pts.reserve(N + 1);
  switch (params.variant) {
    case Variant::OddN: {
      const int j = (N - 1) / 2;
      for (int s = 0; s <= j; ++s) {
        pts.emplace_back((s + a) * (s + a), Sublattice::A);
        pts.emplace_back((s + c) * (s + c), Sublattice::C);
      }
      break;
    }
    case Variant::EvenN: {
      const int j = N / 2;
      for (int s = 0; s <= j; ++s) {
        pts.emplace_back((s + a) * (s + a), Sublattice::A);
      }
      for (int s = 0; s <= j - 1; ++s) {
        pts.emplace_back((s + c) * (s + c), Sublattice::C);
      }
      break;
    }
    case Variant::DualHahn: {
      for (int s = 0; s <= N; ++s) {
        const double x = 0.5 * s + a;
        pts.emplace_back(x * x, s % 2 == 0 ? Sublattice::A : Sublattice::C);
      }
      break;
    }
  }
  std::sort(pts.begin(), pts.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  Spectrum sp;
  sp.values.reserve(pts.size());
  sp.sublattice.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && !(pts[i].first > pts[i - 1].first)) {
      std::ostringstream msg;
      msg << "degenerate spectrum: points " << i - 1 << " and " << i
          << " coincide at " << pts[i].first;
      throw RangeViolation(msg.str());
    }
    sp.values.push_back(pts[i].first);
    sp.sublattice.push_back(pts[i].second);
  }
  return sp;
}

EigenSystem eigensystem(const JacobiMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat);
  if (es.info() != Eigen::Success) {
    throw ConvergenceFailure("symmetric eigensolver did not converge");
  }
  EigenSystem sys;
  sys.values = es.eigenvalues();
  sys.vectors = es.eigenvectors();

  const int n = static_cast<int>(sys.values.size());
  for (int s = 0; s < n; ++s) {
    int k = 0;
    while (k < n && std::abs(sys.vectors(k, s)) <= 1e-12) {
      ++k;
    }
    if (k < n && sys.vectors(k, s) < 0.0) {
      sys.vectors.col(s) = -sys.vectors.col(s);
    }
  }
  sys.weights = sys.vectors.row(0).transpose().array().square();

  const double scale = m.mat.cwiseAbs().rowwise().sum().maxCoeff();
  for (int s = 0; s < n; ++s) {
    const double resid =
        (m.mat * sys.vectors.col(s) - sys.values(s) * sys.vectors.col(s))
            .norm();
    if (resid > 1e-12 * scale) {
      std::ostringstream msg;
      msg << "eigenpair residual " << resid << " exceeds contract for pair "
          << s;
      throw ConvergenceFailure(msg.str());
    }
  }
  return sys;
}

std::vector<double> eval_orthonormal(const CouplingTable& table, double x,
                                     int upto) {
  if (upto < 0 || upto > table.N) {
    throw RangeViolation("polynomial degree must lie in [0, N]");
  }
  std::vector<double> chi(upto + 1);
  chi[0] = 1.0;
  if (upto >= 1) {
    chi[1] = (x - table.B[0]) / table.J[1];
  }
  for (int n = 1; n < upto; ++n) {
    chi[n + 1] =
        ((x - table.B[n]) * chi[n] - table.J[n] * chi[n - 1]) / table.J[n + 1];
  }
  return chi;
}

bool mirror_signature(const CouplingTable& table, const Spectrum& spectrum,
                      double tol) {
  const int N = table.N;
  if (static_cast<int>(spectrum.values.size()) != N + 1) {
    throw RangeViolation("spectrum size does not match table");
  }
  for (int s = 0; s <= N; ++s) {
    const auto chi = eval_orthonormal(table, spectrum.values[s], N);
    const double sign = (N + s) % 2 == 0 ? 1.0 : -1.0;
    if (std::abs(chi[N] - sign) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace frchain
