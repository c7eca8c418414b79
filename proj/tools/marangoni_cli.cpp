// Command-line driver: VIM + Pade closure, RK4 shooting oracle, profile and report output.
//
//   marangoni momentum    --k 0 --out velocity.csv
//   marangoni temperature --k 0 --pr 5 --format json
//   marangoni compare     --k 0 --range 0:3
//   marangoni params      --k 0 --dsigma-dt 2 --m 3 --rho 4 --mu 5

#include "marangoni/errors.hpp"
#include "marangoni/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace marangoni;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kConfigError = 2, kClosureFailure = 3, kShootingFailure = 4 };

std::pair<double, double> parse_pair(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError(std::string(flag) + " expects LO:HI, got '" + text + "'");
  try {
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw DomainError(std::string(flag) + " expects LO:HI, got '" + text + "'");
  }
}

Rational parse_exact(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string(flag) + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marangoni boundary-layer similarity solver (VIM + Pade closure, RK4 shooting oracle)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags override it");

  std::string k_text = "0", pr_text = "5", m_text;
  std::optional<unsigned> pade_l;
  unsigned pade_l_momentum = 2, iterations = 1;
  double eta_max = 10.0, step = 1e-3, threshold = 0.05;
  std::size_t samples = 101;
  std::string range_text, bracket_text, shoot_bracket_text, out_path, report_path, format = "csv";
  bool timings = false, no_temperature = false;
  double dsigma_dt = 1.0, rho = 1.0, mu = 1.0;

  app.add_option("--k", k_text, "surface temperature power-law exponent (>= -1); exact decimal or p/q");
  app.add_option("--pr", pr_text, "Prandtl number");
  app.add_option("--m", m_text, "surface temperature gradient coefficient; adds theta = m g to temperature output");
  app.add_option("--pade-l", pade_l, "diagonal Pade order L of the command's closure (default 2 momentum, 3 temperature)");
  app.add_option("--pade-l-momentum", pade_l_momentum, "Pade order of the momentum stage under temperature/compare");
  app.add_option("--iterations", iterations, "VIM correction steps (>= 1)");
  app.add_option("--eta-max", eta_max, "shooting domain length");
  app.add_option("--step", step, "RK4 step");
  app.add_option("--samples", samples, "number of profile samples");
  app.add_option("--range", range_text, "profile sample range LO:HI");
  app.add_option("--bracket", bracket_text, "closure bracket LO:HI for the free constant");
  app.add_option("--shoot-bracket", shoot_bracket_text, "shooting bracket LO:HI for the oracle's initial slope");
  app.add_option("--threshold", threshold, "deviation marking the end of the agreement range");
  app.add_option("--out", out_path, "output file (stdout when omitted)");
  app.add_option("--report", report_path, "also write the JSON report here");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--timings", timings, "add wall-clock timings to the report (not reproducible)");
  app.add_flag("--no-temperature", no_temperature, "compare: momentum columns only");
  app.add_option("--dsigma-dt", dsigma_dt, "surface-tension temperature coefficient");
  app.add_option("--rho", rho, "density");
  app.add_option("--mu", mu, "dynamic viscosity");

  auto* momentum = app.add_subcommand("momentum", "velocity profile F, F', F''")->fallthrough();
  auto* temperature = app.add_subcommand("temperature", "temperature profile g, g'")->fallthrough();
  auto* compare = app.add_subcommand("compare", "joint VIM / RK4 table and deviation summary")->fallthrough();
  auto* params = app.add_subcommand("params", "similarity scalings C1, C2 and exponents a, b, t")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    const Rational k = parse_exact(k_text, "--k");

    if (params->parsed()) {
      const double m = m_text.empty() ? 1.0 : to_double(parse_exact(m_text, "--m"));
      emit(params_command(k, {dsigma_dt, m, rho, mu}).dump(2) + "\n", out_path);
      return kOk;
    }

    RunConfig config;
    config.k = k;
    config.pr = parse_exact(pr_text, "--pr");
    if (!m_text.empty()) config.m = parse_exact(m_text, "--m");
    config.pade_l_momentum = pade_l_momentum;
    if (pade_l) (temperature->parsed() ? config.pade_l_temperature : config.pade_l_momentum) = *pade_l;
    config.iterations = iterations;
    config.eta_max = eta_max;
    config.step = step;
    config.samples = samples;
    config.deviation_threshold = threshold;
    if (!range_text.empty()) {
      auto [lo, hi] = parse_pair(range_text, "--range");
      config.range = SampleRange{lo, hi};
    }
    if (!bracket_text.empty()) {
      auto [lo, hi] = parse_pair(bracket_text, "--bracket");
      (temperature->parsed() ? config.temperature_bracket : config.momentum_bracket) = Bracket{lo, hi};
    }
    if (!shoot_bracket_text.empty()) {
      auto [lo, hi] = parse_pair(shoot_bracket_text, "--shoot-bracket");
      (temperature->parsed() ? config.temperature_shooting_bracket : config.momentum_shooting_bracket) =
          Bracket{lo, hi};
    }

    const auto started = std::chrono::steady_clock::now();
    CommandOutput result;
    if (momentum->parsed())
      result = momentum_command(config);
    else if (temperature->parsed())
      result = temperature_command(config);
    else
      result = compare_command(config, !no_temperature);
    if (timings) {
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - started;
      result.report["non_golden"] = {{"elapsed_ms", elapsed.count()}};
    }

    if (format == "json") {
      auto doc = result.report;
      doc["profile"] = to_json(result.profile);
      emit(doc.dump(2) + "\n", out_path);
    } else {
      emit(to_csv(result.profile), out_path);
    }
    if (!report_path.empty()) emit(result.report.dump(2) + "\n", report_path);
    return kOk;
  } catch (const DomainError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ClosureError& e) {
    std::cerr << "closure failed: " << e.what() << "\n";
    return kClosureFailure;
  } catch (const ShootingError& e) {
    std::cerr << "shooting failed: " << e.what() << "\n";
    return kShootingFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
