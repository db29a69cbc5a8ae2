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

// Command-line front end: search the revival condition for integer
// solutions, build coupling tables, certify revival / perfect transfer
// by direct evolution, remove the top spectral level, deform, and dump
// plot-ready data.  Exit codes: 0 all checks pass, 1 a requested check
// failed, 2 usage or validation error.

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frchain/chain.hpp"
#include "frchain/deform.hpp"
#include "frchain/dynamics.hpp"
#include "frchain/io.hpp"
#include "frchain/params.hpp"
#include "frchain/spectral.hpp"
#include "frchain/surgery.hpp"

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

struct ModelFlags {
  std::string a_text;
  std::string c_text;
  std::string variant_text;
  std::string from_csv;
  int N = 0;
  std::vector<std::string> overrides;
};

struct SolutionFlags {
  std::optional<long long> alpha1;
  std::optional<long long> beta1;
  std::optional<long long> beta2;
  std::optional<long long> dgamma;
  std::optional<long long> t_over_pi;
  std::string theta_text;
  std::string phi_text;
};

void add_model_options(CLI::App* cmd, ModelFlags& flags, bool allow_csv) {
  cmd->add_option("-a,--a", flags.a_text, "bi-lattice offset a, rational p/q");
  cmd->add_option("-c,--c", flags.c_text,
                  "second offset c, rational p/q (defaults to a + 1/2 for "
                  "dual-hahn)");
  cmd->add_option("-N,--sites-minus-one", flags.N,
                  "N; the chain has N+1 sites");
  cmd->add_option("--variant", flags.variant_text,
                  "odd, even or dual-hahn (default: parity of N)");
  if (allow_csv) {
    cmd->add_option("--from-csv", flags.from_csv,
                    "load the coupling table from CSV instead of building it");
    cmd->add_option("--override", flags.overrides,
                    "perturb one entry, e.g. 'J3*=1.01' or 'B2=4.5'");
  }
}

frchain::Variant resolve_variant(const ModelFlags& flags) {
  if (!flags.variant_text.empty()) {
    return frchain::parse_variant(flags.variant_text);
  }
  return flags.N % 2 == 1 ? frchain::Variant::OddN : frchain::Variant::EvenN;
}

frchain::ChainParams resolve_params(const ModelFlags& flags) {
  if (flags.a_text.empty()) {
    throw frchain::ParseFailure("missing -a (or --from-csv)");
  }
  if (flags.N < 1) {
    throw frchain::ParseFailure("missing or invalid -N");
  }
  const frchain::Variant variant = resolve_variant(flags);
  const frchain::Rational a = frchain::parse_rational(flags.a_text);
  const double a_val = boost::rational_cast<double>(a);
  double c_val = 0.0;
  if (flags.c_text.empty()) {
    if (variant != frchain::Variant::DualHahn) {
      throw frchain::ParseFailure("missing -c");
    }
    c_val = a_val + 0.5;
  } else {
    const frchain::Rational c = frchain::parse_rational(flags.c_text);
    if (variant == frchain::Variant::DualHahn &&
        c != a + frchain::Rational(1, 2)) {
      throw frchain::RangeViolation(
          "dual-hahn requires c = a + 1/2 (omit -c to derive it)");
    }
    c_val = variant == frchain::Variant::DualHahn
                ? a_val + 0.5
                : boost::rational_cast<double>(c);
  }
  return frchain::validate_params(a_val, c_val, flags.N, variant);
}

void apply_override(frchain::CouplingTable& table, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq < 2) {
    throw frchain::ParseFailure("override must look like J3*=1.01 or B2=4.5");
  }
  const bool scale = spec[eq - 1] == '*';
  const std::string name = spec.substr(0, scale ? eq - 1 : eq);
  const char kind = name.empty() ? '?' : name[0];
  long long index = -1;
  try {
    index = std::stoll(name.substr(1));
  } catch (const std::exception&) {
    index = -1;
  }
  const double value = frchain::parse_angle(spec.substr(eq + 1));
  if (kind == 'J' && index >= 1 && index <= table.N) {
    table.J[index] = scale ? table.J[index] * value : value;
  } else if (kind == 'B' && index >= 0 && index <= table.N) {
    table.B[index] = scale ? table.B[index] * value : value;
  } else {
    throw frchain::ParseFailure("override names J1..JN or B0..BN: " + spec);
  }
}

frchain::CouplingTable resolve_table(const ModelFlags& flags) {
  frchain::CouplingTable table;
  if (!flags.from_csv.empty()) {
    std::ifstream in(flags.from_csv);
    if (!in) {
      throw frchain::ParseFailure("cannot open " + flags.from_csv);
    }
    table = frchain::read_coupling_csv(in);
    if (flags.N > 0 && flags.N != table.N) {
      throw frchain::ParseFailure("-N disagrees with the CSV table");
    }
  } else {
    table = frchain::couplings(resolve_params(flags));
  }
  for (const std::string& spec : flags.overrides) {
    apply_override(table, spec);
  }
  return table;
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw frchain::ParseFailure("cannot write " + out_path);
  }
  out << text;
}

std::pair<long long, long long> parse_theta_fraction(const std::string& text) {
  const frchain::Rational r = frchain::parse_rational(text);
  if (r < 0) {
    throw frchain::ParseFailure("theta fraction must be non-negative");
  }
  return {r.numerator(), r.denominator()};
}

json model_json(const frchain::CouplingTable& table) {
  json j{{"N", table.N}};
  if (table.variant) {
    j["variant"] = frchain::variant_name(*table.variant);
  }
  return j;
}

// ---------------------------------------------------------------- search

struct SearchOptions {
  long long alpha1_max = 0;
  std::optional<long long> beta1_max;
  bool pst_only = false;
  std::string theta_text;
  std::string format = "json";
  std::string out_path;
};

int run_search(const SearchOptions& opt) {
  auto sols = frchain::solve_diophantine(opt.alpha1_max, opt.beta1_max);
  if (opt.pst_only) {
    std::erase_if(sols,
                  [](const auto& s) { return !s.pst_multiple.has_value(); });
  }
  if (!opt.theta_text.empty()) {
    const auto [p, q] = parse_theta_fraction(opt.theta_text);
    std::erase_if(sols, [p, q](const auto& s) {
      return s.theta_p != p || s.theta_q != q;
    });
  }
  std::ostringstream text;
  if (opt.format == "csv") {
    text << "alpha1,beta1,beta2,dgamma,a,c,theta_p,theta_q,T_over_pi,phi,"
            "pst_multiple\n";
    for (const auto& s : sols) {
      text << s.alpha1 << ',' << s.beta1 << ',' << s.beta2 << ',' << s.dgamma
           << ',' << frchain::format_rational(s.a) << ','
           << frchain::format_rational(s.c) << ',' << s.theta_p << ','
           << s.theta_q << ',' << s.alpha1 << ','
           << frchain::format_double(s.phi()) << ',';
      if (s.pst_multiple) {
        text << *s.pst_multiple;
      }
      text << '\n';
    }
  } else {
    json arr = json::array();
    for (const auto& s : sols) {
      arr.push_back(frchain::to_json(s));
    }
    text << arr.dump(2) << '\n';
  }
  write_text(opt.out_path, text.str());
  return 0;
}

// ----------------------------------------------------------------- build

struct BuildOptions {
  ModelFlags model;
  std::string plot_data_path;
  std::string out_path;
};

int run_build(const BuildOptions& opt) {
  const frchain::CouplingTable table = resolve_table(opt.model);
  std::ostringstream csv;
  frchain::write_coupling_csv(csv, table);
  write_text(opt.out_path, csv.str());
  if (!opt.plot_data_path.empty()) {
    std::ostringstream profile;
    frchain::write_profile_csv(profile, table);
    write_text(opt.plot_data_path, profile.str());
  }
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  ModelFlags model;
  SolutionFlags sol;
  bool pst = false;
  bool block_form = false;
  double tol = 1e-7;
  std::string out_path;
};

std::optional<frchain::FRSolution> resolve_solution(const ModelFlags& model,
                                                    const SolutionFlags& sf) {
  if (sf.alpha1 || sf.beta1 || sf.beta2 || sf.dgamma) {
    if (!(sf.alpha1 && sf.beta1 && sf.beta2 && sf.dgamma)) {
      throw frchain::ParseFailure(
          "--alpha1, --beta1, --beta2, --dgamma must be given together");
    }
    return frchain::solution_from_integers(*sf.alpha1, *sf.beta1, *sf.beta2,
                                           *sf.dgamma);
  }
  if (sf.t_over_pi && !sf.theta_text.empty() && !model.a_text.empty() &&
      !model.c_text.empty()) {
    const auto [p, q] = parse_theta_fraction(sf.theta_text);
    try {
      return frchain::solution_from_rationals(
          frchain::parse_rational(model.a_text),
          frchain::parse_rational(model.c_text), *sf.t_over_pi, p, q);
    } catch (const frchain::RangeViolation& e) {
      std::cerr << "note: not an exact revival solution (" << e.what()
                << "); falling back to an ad-hoc check\n";
      return std::nullopt;
    }
  }
  return std::nullopt;
}

int run_verify(const VerifyOptions& opt) {
  const frchain::CouplingTable table = resolve_table(opt.model);
  const frchain::JacobiMatrix m = frchain::assemble_jacobi(table);
  const auto sol = resolve_solution(opt.model, opt.sol);

  json out{{"model", model_json(table)}, {"tol", opt.tol}};
  bool passes = false;
  frchain::FRReport report;
  if (sol) {
    report = frchain::verify_fr(m, *sol, opt.tol);
    passes = report.passes;
    out["solution"] = frchain::to_json(*sol);
    out["checks"]["fr"] = report.passes;
    if (opt.pst) {
      const bool ok = frchain::verify_pst(m, *sol, opt.tol);
      out["checks"]["pst"] = ok;
      out["pst_time_over_pi"] = *sol->pst_multiple * sol->alpha1;
      passes = passes && ok;
    }
    if (opt.block_form) {
      const bool ok = frchain::block_form_check(m, *sol, opt.tol);
      out["checks"]["block_form"] = ok;
      passes = passes && ok;
    }
  } else {
    if (!opt.sol.t_over_pi) {
      throw frchain::ParseFailure(
          "identify the solution by --alpha1/--beta1/--beta2/--dgamma or by "
          "-a/-c/--T-over-pi/--theta");
    }
    if (opt.pst || opt.block_form) {
      throw frchain::ParseFailure(
          "--pst/--block-form need an exact solution record");
    }
    double theta = 0.0;
    if (!opt.sol.theta_text.empty()) {
      const auto [p, q] = parse_theta_fraction(opt.sol.theta_text);
      theta = kPi * static_cast<double>(p) / (4.0 * static_cast<double>(q));
    }
    const double phi = opt.sol.phi_text.empty()
                           ? 0.0
                           : frchain::parse_angle(opt.sol.phi_text);
    const double t_revival = kPi * static_cast<double>(*opt.sol.t_over_pi);
    report = frchain::certify_fr(frchain::Evolver(m), t_revival, theta, phi,
                                 opt.tol);
    passes = report.passes;
    out["checks"]["fr"] = report.passes;
  }
  out["report"] = frchain::to_json(report);
  out["passes"] = passes;
  write_text(opt.out_path, out.dump(2) + "\n");
  return passes ? 0 : 1;
}

// ---------------------------------------------------------------- evolve

struct EvolveOptions {
  ModelFlags model;
  std::string t_max_text;
  long long samples = 201;
  std::string out_path;
};

int run_evolve(const EvolveOptions& opt) {
  const frchain::CouplingTable table = resolve_table(opt.model);
  const double t_max = frchain::parse_angle(opt.t_max_text);
  if (t_max < 0) {
    throw frchain::ParseFailure("--t-max must be non-negative");
  }
  long long samples = opt.samples;
  if (t_max == 0.0) {
    samples = 1;
  } else if (samples < 2) {
    throw frchain::ParseFailure("--samples must be at least 2");
  }
  const frchain::Evolver ev(frchain::assemble_jacobi(table));
  std::ostringstream csv;
  csv << "t,site,abs_amplitude,re,im\n";
  for (long long k = 0; k < samples; ++k) {
    const double t = samples == 1 ? 0.0
                                  : t_max * static_cast<double>(k) /
                                        static_cast<double>(samples - 1);
    const Eigen::VectorXcd col = ev.column0(t);
    for (int site = 0; site <= table.N; ++site) {
      csv << frchain::format_double(t) << ',' << site << ','
          << frchain::format_double(std::abs(col(site))) << ','
          << frchain::format_double(col(site).real()) << ','
          << frchain::format_double(col(site).imag()) << '\n';
    }
  }
  write_text(opt.out_path, csv.str());
  return 0;
}

// --------------------------------------------------------------- surgery

struct SurgeryOptions {
  ModelFlags model;
  bool check = false;
  std::string out_path;
};

int run_surgery(const SurgeryOptions& opt) {
  ModelFlags model = opt.model;
  if (model.variant_text.empty()) {
    model.variant_text = "odd";
  }
  const frchain::ChainParams params = resolve_params(model);
  const frchain::CouplingTable surgered = frchain::remove_top_level(params);
  std::ostringstream csv;
  frchain::write_coupling_csv(csv, surgered);
  write_text(opt.out_path, csv.str());

  if (!opt.check) {
    return 0;
  }
  const frchain::ChainParams even = frchain::validate_params(
      params.a, params.c, params.N - 1, frchain::Variant::EvenN);
  const frchain::CouplingTable direct = frchain::couplings_even(even);
  double table_residual = 0.0;
  for (int n = 0; n <= surgered.N; ++n) {
    table_residual =
        std::max(table_residual, std::abs(surgered.B[n] - direct.B[n]));
  }
  for (int n = 1; n <= surgered.N; ++n) {
    table_residual =
        std::max(table_residual, std::abs(surgered.J[n] - direct.J[n]));
  }
  const frchain::EigenSystem sys =
      frchain::eigensystem(frchain::assemble_jacobi(surgered));
  const frchain::Spectrum target = frchain::bilattice(even);
  double spectrum_residual = 0.0;
  for (int s = 0; s <= surgered.N; ++s) {
    spectrum_residual =
        std::max(spectrum_residual, std::abs(sys.values(s) - target.values[s]));
  }
  const bool ok = table_residual <= 1e-12 && spectrum_residual <= 1e-10;
  json out{{"table_residual", table_residual},
           {"spectrum_residual", spectrum_residual},
           {"passes", ok}};
  std::cerr << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- deform

struct DeformOptions {
  ModelFlags model;
  std::string sigma_text;
  std::optional<double> alpha;
  bool check = false;
  std::string out_path;
};

int run_deform(const DeformOptions& opt) {
  const frchain::ChainParams params = resolve_params(opt.model);
  const frchain::ChainParity parity = frchain::parity_of(params.N);
  double sigma = 0.0;
  if (!opt.sigma_text.empty() && opt.alpha) {
    throw frchain::ParseFailure("give either --sigma or --alpha, not both");
  }
  if (!opt.sigma_text.empty()) {
    sigma = frchain::parse_angle(opt.sigma_text);
  } else if (opt.alpha) {
    sigma = frchain::sigma_from_alpha(*opt.alpha, parity);
  } else {
    throw frchain::ParseFailure("deform needs --sigma or --alpha");
  }

  const frchain::CouplingTable table = frchain::couplings(params);
  const frchain::CouplingTable deformed =
      frchain::deformed_entries(table, sigma);
  std::ostringstream csv;
  frchain::write_coupling_csv(csv, deformed);
  write_text(opt.out_path, csv.str());

  json sidecar{
      {"sigma", sigma},
      {"parity", parity == frchain::ChainParity::Odd ? "odd" : "even"}};
  try {
    sidecar["alpha"] =
        opt.alpha ? *opt.alpha : frchain::alpha_from_sigma(sigma, parity);
  } catch (const frchain::RangeViolation&) {
    sidecar["alpha"] = nullptr;  // sigma outside the principal branch
  }
  if (opt.out_path.empty()) {
    std::cerr << sidecar.dump(2) << "\n";
  } else {
    std::ofstream meta(opt.out_path + ".meta.json");
    meta << sidecar.dump(2) << "\n";
  }

  if (!opt.check) {
    return 0;
  }
  const frchain::JacobiMatrix conj =
      frchain::conjugate(frchain::assemble_jacobi(table), sigma);
  double residual = 0.0;
  const frchain::CouplingTable via_v = frchain::extract_table(conj);
  for (int n = 0; n <= table.N; ++n) {
    residual = std::max(residual, std::abs(deformed.B[n] - via_v.B[n]));
  }
  for (int n = 1; n <= table.N; ++n) {
    residual = std::max(residual, std::abs(deformed.J[n] - via_v.J[n]));
  }
  double off_band = 0.0;
  for (int i = 0; i <= table.N; ++i) {
    for (int jcol = 0; jcol <= table.N; ++jcol) {
      if (std::abs(i - jcol) > 1) {
        off_band = std::max(off_band, std::abs(conj.mat(i, jcol)));
      }
    }
  }
  const bool ok = residual <= 1e-12 && off_band <= 1e-12;
  json out{{"conjugation_residual", residual},
           {"off_tridiagonal", off_band},
           {"passes", ok}};
  std::cerr << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- report

struct ReportOptions {
  ModelFlags model;
  SolutionFlags sol;
  double tol = 1e-7;
  std::string out_path;
};

int run_report(const ReportOptions& opt) {
  const frchain::ChainParams params = resolve_params(opt.model);
  const frchain::CouplingTable table = frchain::couplings(params);
  const frchain::JacobiMatrix m = frchain::assemble_jacobi(table);
  const auto sol = resolve_solution(opt.model, opt.sol);
  if (!sol) {
    throw frchain::ParseFailure(
        "report needs the solution integers --alpha1/--beta1/--beta2/--dgamma "
        "(or -a/-c/--T-over-pi/--theta forming an exact solution)");
  }

  json checks;
  checks["persymmetry"] = frchain::check_persymmetry(m, 1e-12);

  const frchain::EigenSystem sys = frchain::eigensystem(m);
  const frchain::Spectrum sp = frchain::bilattice(params);
  double spectrum_residual = 0.0;
  for (int s = 0; s <= table.N; ++s) {
    spectrum_residual =
        std::max(spectrum_residual, std::abs(sys.values(s) - sp.values[s]));
  }
  checks["spectrum"] = spectrum_residual <= 1e-10;
  checks["mirror_signature"] = frchain::mirror_signature(table, sp, 1e-8);

  const frchain::FRReport report = frchain::verify_fr(m, *sol, opt.tol);
  checks["fr"] = report.passes;
  checks["block_form"] = frchain::block_form_check(m, *sol, opt.tol);
  if (sol->pst_multiple) {
    checks["pst"] = frchain::verify_pst(m, *sol, opt.tol);
  }

  bool passes = true;
  for (const auto& [key, value] : checks.items()) {
    passes = passes && value.get<bool>();
  }
  json out{{"model", model_json(table)},
           {"solution", frchain::to_json(*sol)},
           {"spectrum_residual", spectrum_residual},
           {"report", frchain::to_json(report)},
           {"checks", checks},
           {"passes", passes},
           {"tol", opt.tol}};
  write_text(opt.out_path, out.dump(2) + "\n");
  return passes ? 0 : 1;
}

void add_solution_options(CLI::App* cmd, SolutionFlags& sf) {
  cmd->add_option("--alpha1", sf.alpha1, "solution integer alpha1");
  cmd->add_option("--beta1", sf.beta1, "solution integer beta1");
  cmd->add_option("--beta2", sf.beta2, "solution integer beta2");
  cmd->add_option("--dgamma", sf.dgamma, "solution integer gamma2 - gamma1");
  cmd->add_option("--T-over-pi", sf.t_over_pi, "revival time in units of pi");
  cmd->add_option("--theta", sf.theta_text,
                  "revival angle as p/q with theta = pi p / (4 q)");
  cmd->add_option("--phi", sf.phi_text,
                  "global phase for ad-hoc checks, e.g. '19pi/12'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "analytic XX chains with fractional revival on quadratic bi-lattices"};
  app.require_subcommand(1);

  SearchOptions search;
  CLI::App* cmd_search = app.add_subcommand(
      "search", "enumerate integer solutions of the revival condition");
  cmd_search
      ->add_option("--alpha1-max", search.alpha1_max, "largest alpha1 (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_search->add_option("--beta1-max", search.beta1_max,
                         "cap on beta1 (default 8*alpha1 per alpha1)");
  cmd_search->add_flag("--pst-only", search.pst_only,
                       "keep only solutions with a perfect-transfer time");
  cmd_search->add_option("--theta", search.theta_text,
                         "keep only solutions with this reduced p/q");
  cmd_search->add_option("--format", search.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_search->add_option("--out", search.out_path, "write to file");

  BuildOptions build;
  CLI::App* cmd_build =
      app.add_subcommand("build", "emit the coupling table as CSV");
  add_model_options(cmd_build, build.model, false);
  cmd_build->add_option("--plot-data", build.plot_data_path,
                        "also write normalized profiles to this path");
  cmd_build->add_option("--out", build.out_path, "write to file");

  VerifyOptions verify;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "certify revival/transfer against the closed form");
  add_model_options(cmd_verify, verify.model, true);
  add_solution_options(cmd_verify, verify.sol);
  cmd_verify->add_flag("--pst", verify.pst, "also check perfect transfer");
  cmd_verify->add_flag("--block-form", verify.block_form,
                       "also check the whole propagator at T");
  cmd_verify->add_option("--tol", verify.tol, "certification tolerance")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--out", verify.out_path, "write report to file");

  EvolveOptions evolve;
  CLI::App* cmd_evolve =
      app.add_subcommand("evolve", "sample site amplitudes over time as CSV");
  add_model_options(cmd_evolve, evolve.model, true);
  cmd_evolve->add_option("--t-max", evolve.t_max_text, "end time, e.g. 12pi")
      ->required();
  cmd_evolve->add_option("--samples", evolve.samples,
                         "number of time samples (>= 2)");
  cmd_evolve->add_option("--out", evolve.out_path, "write to file");

  SurgeryOptions surgery;
  CLI::App* cmd_surgery = app.add_subcommand(
      "surgery", "remove the top spectral level of an odd-N chain");
  add_model_options(cmd_surgery, surgery.model, false);
  cmd_surgery->add_flag("--check", surgery.check,
                        "compare against the closed-form even family");
  cmd_surgery->add_option("--out", surgery.out_path, "write to file");

  DeformOptions deform;
  CLI::App* cmd_deform = app.add_subcommand(
      "deform", "apply the isospectral mid-chain deformation");
  add_model_options(cmd_deform, deform.model, false);
  cmd_deform->add_option("--sigma", deform.sigma_text,
                         "deformation angle, e.g. pi/6");
  cmd_deform->add_option("--alpha", deform.alpha,
                         "equivalent alpha in [0, 1] instead of sigma");
  cmd_deform->add_flag("--check", deform.check,
                       "compare the closed form against V J V");
  cmd_deform->add_option("--out", deform.out_path, "write to file");

  ReportOptions report;
  CLI::App* cmd_report = app.add_subcommand(
      "report", "run the full certification battery for one model");
  add_model_options(cmd_report, report.model, false);
  add_solution_options(cmd_report, report.sol);
  cmd_report->add_option("--tol", report.tol, "certification tolerance")
      ->check(CLI::PositiveNumber);
  cmd_report->add_option("--out", report.out_path, "write report to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_search)) return run_search(search);
    if (app.got_subcommand(cmd_build)) return run_build(build);
    if (app.got_subcommand(cmd_verify)) return run_verify(verify);
    if (app.got_subcommand(cmd_evolve)) return run_evolve(evolve);
    if (app.got_subcommand(cmd_surgery)) return run_surgery(surgery);
    if (app.got_subcommand(cmd_deform)) return run_deform(deform);
    if (app.got_subcommand(cmd_report)) return run_report(report);
  } catch (const frchain::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
