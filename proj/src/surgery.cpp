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

#include "frchain/surgery.hpp"

#include <cmath>
#include <sstream>

namespace frchain {

SurgeryRatios surgery_ratios(const ChainParams& params_odd) {
  const int N = params_odd.N;
  if (N % 2 == 0) {
    throw DivisionByZero(
        "surgery ratios need odd N (2n - N vanishes at the midpoint "
        "otherwise)");
  }
  const double a = params_odd.a;
  const double c = params_odd.c;
  const double j = (N - 1) / 2;

  SurgeryRatios r;
  r.A.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    r.A[n] = (N - n) * (n - j + a - c) * (N - n - 1 + a + c) /
             (2.0 * (2.0 * n - N));
  }
  return r;
}

CouplingTable remove_top_level(const ChainParams& params_odd) {
  if (params_odd.variant != Variant::OddN) {
    throw ParityMismatch("top-level removal starts from the odd-N family");
  }
  const int N = params_odd.N;
  const CouplingTable t = couplings_odd(params_odd);
  const SurgeryRatios r = surgery_ratios(params_odd);

  CouplingTable out;
  out.N = N - 1;
  out.variant = Variant::EvenN;
  out.B.resize(N);
  out.J.assign(N, 0.0);
  for (int n = 0; n <= N - 1; ++n) {
    out.B[n] = t.B[n + 1] + r.A[n + 1] - r.A[n];
  }
  for (int n = 1; n <= N - 1; ++n) {
    const double ratio = r.A[n] / r.A[n - 1];
    if (!(ratio > 0.0)) {
      std::ostringstream msg;
      msg << "surgery ratio non-positive at n = " << n;
      throw NegativeRadicand(msg.str());
    }
    out.J[n] = t.J[n] * std::sqrt(ratio);
  }
  return out;
}

}  // namespace frchain
