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

#include "frchain/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

namespace frchain {

namespace {

std::string trimmed(const std::string& s) {
  auto begin = s.begin();
  auto end = s.end();
  while (begin != end && std::isspace(static_cast<unsigned char>(*begin))) {
    ++begin;
  }
  while (end != begin && std::isspace(static_cast<unsigned char>(*(end - 1)))) {
    --end;
  }
  return std::string(begin, end);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current += ch;
    }
  }
  fields.push_back(current);
  return fields;
}

double parse_double_field(const std::string& field, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) {
      throw std::invalid_argument(field);
    }
    return v;
  } catch (const std::exception&) {
    throw ParseFailure(std::string("bad ") + what + " value: '" + field + "'");
  }
}

nlohmann::json complex_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void write_coupling_csv(std::ostream& out, const CouplingTable& table) {
  out << "n,B_n,J_n\n";
  for (int n = 0; n <= table.N; ++n) {
    out << n << ',' << format_double(table.B[n]) << ',';
    if (n > 0) {
      out << format_double(table.J[n]);
    }
    out << '\n';
  }
}

CouplingTable read_coupling_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trimmed(line) != "n,B_n,J_n") {
    throw ParseFailure("coupling CSV must start with header 'n,B_n,J_n'");
  }
  std::vector<double> b;
  std::vector<double> j;
  j.push_back(0.0);
  int expected = 0;
  while (std::getline(in, line)) {
    if (trimmed(line).empty()) {
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw ParseFailure("coupling CSV rows need exactly 3 fields: " + line);
    }
    const long long n =
        static_cast<long long>(parse_double_field(fields[0], "site index"));
    if (n != expected) {
      throw ParseFailure("coupling CSV rows must be consecutive from 0");
    }
    b.push_back(parse_double_field(fields[1], "B_n"));
    if (n == 0) {
      if (!trimmed(fields[2]).empty()) {
        throw ParseFailure("J column must be empty on the n = 0 row");
      }
    } else {
      j.push_back(parse_double_field(fields[2], "J_n"));
    }
    ++expected;
  }
  if (expected < 2) {
    throw ParseFailure("coupling CSV needs at least two sites");
  }
  CouplingTable t;
  t.N = expected - 1;
  t.B = std::move(b);
  t.J = std::move(j);
  return t;
}

void write_profile_csv(std::ostream& out, const CouplingTable& table) {
  double bmax = 0.0;
  double jmax = 0.0;
  for (int n = 0; n <= table.N; ++n) {
    bmax = std::max(bmax, std::abs(table.B[n]));
    if (n > 0) {
      jmax = std::max(jmax, std::abs(table.J[n]));
    }
  }
  out << "n,B_norm,J_norm\n";
  for (int n = 0; n <= table.N; ++n) {
    out << n << ',' << format_double(bmax > 0 ? table.B[n] / bmax : 0.0) << ',';
    if (n > 0) {
      out << format_double(jmax > 0 ? table.J[n] / jmax : 0.0);
    }
    out << '\n';
  }
}

nlohmann::json to_json(const FRSolution& sol) {
  nlohmann::json j{
      {"alpha1", sol.alpha1},   {"beta1", sol.beta1},
      {"beta2", sol.beta2},     {"dgamma", sol.dgamma},
      {"a", format_rational(sol.a)}, {"c", format_rational(sol.c)},
      {"theta_p", sol.theta_p}, {"theta_q", sol.theta_q},
      {"T_over_pi", sol.alpha1}, {"phi", sol.phi()},
  };
  if (sol.pst_multiple) {
    j["pst_multiple"] = *sol.pst_multiple;
  } else {
    j["pst_multiple"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const FRReport& report) {
  return nlohmann::json{
      {"T", report.T},
      {"xi_measured", complex_to_json(report.xi_measured)},
      {"eta_measured", complex_to_json(report.eta_measured)},
      {"xi_predicted", complex_to_json(report.xi_predicted)},
      {"eta_predicted", complex_to_json(report.eta_predicted)},
      {"leakage", report.leakage},
      {"phi_measured", report.phi_measured},
      {"phi_predicted", report.phi_predicted},
      {"passes", report.passes},
      {"tol", report.tol},
  };
}

nlohmann::json to_json(const Spectrum& spectrum) {
  nlohmann::json labels = nlohmann::json::array();
  for (Sublattice s : spectrum.sublattice) {
    labels.push_back(s == Sublattice::A ? "a" : "c");
  }
  return nlohmann::json{{"values", spectrum.values}, {"sublattice", labels}};
}

Rational parse_rational(const std::string& text) {
  const std::string s = trimmed(text);
  try {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long num = std::stoll(s, &used);
      if (used != s.size()) {
        throw std::invalid_argument(s);
      }
      return Rational(num);
    }
    const std::string num_text = trimmed(s.substr(0, slash));
    const std::string den_text = trimmed(s.substr(slash + 1));
    const long long num = std::stoll(num_text, &used);
    if (used != num_text.size()) {
      throw std::invalid_argument(s);
    }
    const long long den = std::stoll(den_text, &used);
    if (used != den_text.size() || den == 0) {
      throw std::invalid_argument(s);
    }
    return Rational(num, den);
  } catch (const ParseFailure&) {
    throw;
  } catch (const std::exception&) {
    throw ParseFailure("expected a rational 'p/q' or integer, got '" + text +
                       "'");
  }
}

double parse_angle(const std::string& text) {
  const std::string s = trimmed(text);
  const auto pi_pos = s.find("pi");
  try {
    if (pi_pos == std::string::npos) {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) {
        throw std::invalid_argument(s);
      }
      return v;
    }
    std::string coef_text = trimmed(s.substr(0, pi_pos));
    double sign = 1.0;
    if (coef_text == "-") {
      sign = -1.0;
      coef_text.clear();
    } else if (coef_text == "+") {
      coef_text.clear();
    }
    double coef = 1.0;
    if (!coef_text.empty()) {
      std::size_t used = 0;
      coef = std::stod(coef_text, &used);
      if (used != coef_text.size()) {
        throw std::invalid_argument(s);
      }
    }
    double den = 1.0;
    const std::string rest = trimmed(s.substr(pi_pos + 2));
    if (!rest.empty()) {
      if (rest.front() != '/') {
        throw std::invalid_argument(s);
      }
      const std::string den_text = trimmed(rest.substr(1));
      std::size_t used = 0;
      den = std::stod(den_text, &used);
      if (used != den_text.size() || den == 0.0) {
        throw std::invalid_argument(s);
      }
    }
    return sign * coef * std::numbers::pi / den;
  } catch (const std::exception&) {
    throw ParseFailure("expected an angle like 'pi/6', '3pi/8' or a decimal, got '" +
                       text + "'");
  }
}

Variant parse_variant(const std::string& text) {
  const std::string s = trimmed(text);
  if (s == "odd") {
    return Variant::OddN;
  }
  if (s == "even") {
    return Variant::EvenN;
  }
  if (s == "dual-hahn" || s == "dualhahn") {
    return Variant::DualHahn;
  }
  throw ParseFailure("unknown variant '" + text +
                     "' (expected odd, even or dual-hahn)");
}

}  // namespace frchain
