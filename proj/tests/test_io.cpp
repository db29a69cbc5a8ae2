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

#include <numbers>
#include <sstream>

#include "doctest.h"
#include "frchain/io.hpp"

using namespace frchain;

TEST_CASE("coupling CSV round trip is bit exact") {
  const ChainParams p = validate_params(7.0 / 6.0, 4.0 / 3.0, 5, Variant::OddN);
  const CouplingTable t = couplings_odd(p);

  std::stringstream buf;
  write_coupling_csv(buf, t);
  const CouplingTable back = read_coupling_csv(buf);

  REQUIRE(back.N == t.N);
  CHECK(back.B == t.B);  // 17 significant digits round-trip doubles exactly
  CHECK(back.J == t.J);
}

TEST_CASE("coupling CSV rejects malformed input") {
  SUBCASE("wrong header") {
    std::stringstream buf("site,B,J\n0,1.0,\n1,1.0,0.5\n");
    CHECK_THROWS_AS(read_coupling_csv(buf), ParseFailure);
  }
  SUBCASE("non-consecutive rows") {
    std::stringstream buf("n,B_n,J_n\n0,1.0,\n2,1.0,0.5\n");
    CHECK_THROWS_AS(read_coupling_csv(buf), ParseFailure);
  }
  SUBCASE("J on the first row") {
    std::stringstream buf("n,B_n,J_n\n0,1.0,0.3\n1,1.0,0.5\n");
    CHECK_THROWS_AS(read_coupling_csv(buf), ParseFailure);
  }
  SUBCASE("too short") {
    std::stringstream buf("n,B_n,J_n\n0,1.0,\n");
    CHECK_THROWS_AS(read_coupling_csv(buf), ParseFailure);
  }
}

TEST_CASE("solution JSON carries the documented fields") {
  const FRSolution sol = solution_from_integers(6, 14, 16, 1);
  const nlohmann::json j = to_json(sol);
  CHECK(j["alpha1"] == 6);
  CHECK(j["beta1"] == 14);
  CHECK(j["beta2"] == 16);
  CHECK(j["dgamma"] == 1);
  CHECK(j["a"] == "7/6");
  CHECK(j["c"] == "4/3");
  CHECK(j["theta_p"] == 3);
  CHECK(j["theta_q"] == 2);
  CHECK(j["T_over_pi"] == 6);
  CHECK(j["pst_multiple"] == 2);
  CHECK(j["phi"].get<double>() ==
        doctest::Approx(19.0 * std::numbers::pi / 12).epsilon(1e-14));

  const FRSolution no_pst = solution_from_integers(4, 2, 6, 1);
  CHECK(to_json(no_pst)["pst_multiple"].is_null());
}

TEST_CASE("spectrum JSON labels the sublattices") {
  const ChainParams p = validate_params(7.0 / 6.0, 4.0 / 3.0, 5, Variant::OddN);
  const nlohmann::json j = to_json(bilattice(p));
  REQUIRE(j["values"].size() == 6);
  CHECK(j["sublattice"] ==
        nlohmann::json::array({"a", "c", "a", "c", "a", "c"}));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7/6") == Rational(7, 6));
  CHECK(parse_rational(" -1/4 ") == Rational(-1, 4));
  CHECK(parse_rational("8/6") == Rational(4, 3));
  CHECK(parse_rational("3") == Rational(3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseFailure);
  CHECK_THROWS_AS(parse_rational("x/2"), ParseFailure);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseFailure);
}

TEST_CASE("angle parsing") {
  CHECK(parse_angle("pi/6") ==
        doctest::Approx(std::numbers::pi / 6).epsilon(1e-15));
  CHECK(parse_angle("3pi/8") ==
        doctest::Approx(3 * std::numbers::pi / 8).epsilon(1e-15));
  CHECK(parse_angle("-pi/4") ==
        doctest::Approx(-std::numbers::pi / 4).epsilon(1e-15));
  CHECK(parse_angle("12pi") ==
        doctest::Approx(12 * std::numbers::pi).epsilon(1e-15));
  CHECK(parse_angle("pi") == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(parse_angle("0") == 0.0);
  CHECK(parse_angle("0.5") == 0.5);
  CHECK_THROWS_AS(parse_angle("pie"), ParseFailure);
  CHECK_THROWS_AS(parse_angle("pi/0"), ParseFailure);
}

TEST_CASE("variant parsing") {
  CHECK(parse_variant("odd") == Variant::OddN);
  CHECK(parse_variant("even") == Variant::EvenN);
  CHECK(parse_variant("dual-hahn") == Variant::DualHahn);
  CHECK_THROWS_AS(parse_variant("spiral"), ParseFailure);
}
