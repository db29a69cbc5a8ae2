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

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "frchain/dynamics.hpp"
#include "frchain/spectral.hpp"

namespace frchain {

// Coupling-table CSV, header "n,B_n,J_n"; the J column is empty on the
// n = 0 row.  Floats carry 17 significant digits so a round trip is
// bit-exact.
void write_coupling_csv(std::ostream& out, const CouplingTable& table);
CouplingTable read_coupling_csv(std::istream& in);

// Profiles normalized to their maxima, header "n,B_norm,J_norm".
void write_profile_csv(std::ostream& out, const CouplingTable& table);

nlohmann::json to_json(const FRSolution& sol);
nlohmann::json to_json(const FRReport& report);
nlohmann::json to_json(const Spectrum& spectrum);

std::string format_double(double x);  // 17 significant digits
std::string format_rational(const Rational& r);

/// "p/q" or a bare integer.
Rational parse_rational(const std::string& text);

/// Multiples of pi ("pi/6", "3pi/8", "-pi/4", "12pi", "2") or a plain
/// decimal in radians.
double parse_angle(const std::string& text);

Variant parse_variant(const std::string& text);

}  // namespace frchain
