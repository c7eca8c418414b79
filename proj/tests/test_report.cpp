#include "doctest.h"

#include "marangoni/errors.hpp"
#include "marangoni/report.hpp"
#include "marangoni/serialize.hpp"
#include "marangoni/vim.hpp"

#include <cmath>
#include <sstream>

using namespace marangoni;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cells_in(line);
    std::string cell;
    while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

void check_csv(const CommandOutput& out, std::size_t samples) {
  const auto rows = parse_csv(to_csv(out.profile));
  REQUIRE(rows.size() == samples + 1);
  CHECK(rows.front() == out.profile.columns);
  CHECK(rows.front().front() == "eta");
  const double h = std::stod(rows[2][0]) - std::stod(rows[1][0]);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].size() == out.profile.columns.size());
    if (i > 1) CHECK(std::abs(std::stod(rows[i][0]) - std::stod(rows[i - 1][0]) - h) <= 1e-12);
    // 17 significant digits round-trip.
    for (std::size_t c = 0; c < rows[i].size(); ++c) CHECK(std::stod(rows[i][c]) == out.profile.rows[i - 1][c]);
  }
}

RunConfig with_k(const Rational& k) {
  RunConfig c;
  c.k = k;
  return c;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("momentum command") {
  RunConfig config;
  const auto out = momentum_command(config);
  CHECK(out.profile.columns == std::vector<std::string>{"eta", "F", "dF", "ddF"});
  check_csv(out, 101);
  CHECK(out.profile.rows.front()[1] == 0.0);
  CHECK(out.profile.rows.front()[3] == -1.0);
  CHECK(out.profile.rows.back()[0] == 5.0);

  const auto& m = out.report["momentum"];
  CHECK(std::abs(m["free_constant"].get<double>() - 0.3046259590) <= 1e-9);
  CHECK(std::abs(m["surface_velocity"].get<double>() - 1.3046259583) <= 1e-9);
  CHECK(m["closure"]["roots"].size() == 1);
  CHECK(m["reference_k0"]["closure_constant_c"].get<double>() == 1.364053270);
  CHECK(m["constants"]["A"] == "1/1");
  CHECK(m["constants"]["C"] == "-1/1");
  CHECK(m["oracle"]["shooting_parameter"].get<double>() == doctest::Approx(1.2961575407).epsilon(1e-9));
  for (const auto* key : {"F", "dF", "ddF"}) {
    CHECK(m["deviation"][key]["max_abs"].get<double>() >= 0.0);
    CHECK(m["deviation"][key]["mean_abs"].get<double>() >= 0.0);
  }
  CHECK(exp_poly_from_json(m["solution"]) == momentum_solution(make_params(0), parse_rational(m["free_constant_exact"].get<std::string>())));
}

TEST_CASE("momentum command, other exponents") {
  for (const auto& k : {Rational(1, 2), Rational(-1, 2)}) {
    auto config = with_k(k);
    const auto out = momentum_command(config);
    CHECK(out.profile.rows.front()[1] == 0.0);
    CHECK(out.profile.rows.front()[3] == -to_double(k + 1));
    CHECK_FALSE(out.report["momentum"].contains("reference_k0"));
  }
}

TEST_CASE("momentum command, k = -1") {
  const auto out = momentum_command(with_k(-1));
  for (const auto& row : out.profile.rows)
    for (std::size_t c = 1; c < row.size(); ++c) CHECK(row[c] == 0.0);
}

TEST_CASE("temperature command") {
  RunConfig config;
  config.samples = 41;
  config.m = Rational(5, 2);
  const auto out = temperature_command(config);
  CHECK(out.profile.columns == std::vector<std::string>{"eta", "g", "dg", "theta"});
  check_csv(out, 41);
  CHECK(out.profile.rows.front()[1] == 1.0);
  CHECK(out.profile.rows.back()[0] == 4.0);
  for (const auto& row : out.profile.rows) CHECK(row[3] == doctest::Approx(2.5 * row[1]).epsilon(1e-15));
  const auto& t = out.report["temperature"];
  CHECK(t.contains("limited_range_eta"));
  CHECK(t["oracle"]["shooting_parameter"].get<double>() == doctest::Approx(-2.782726057).epsilon(1e-9));
  CHECK(t["closure"]["roots"].size() >= 1);
}

TEST_CASE("temperature command, k = -1") {
  const auto out = temperature_command(with_k(-1));
  CHECK(out.profile.columns.size() == 3);
  for (const auto& row : out.profile.rows) {
    CHECK(row[1] == 1.0);
    CHECK(row[2] == 0.0);
  }
}

TEST_CASE("compare command") {
  RunConfig config;
  const auto out = compare_command(config);
  CHECK(out.profile.columns ==
        std::vector<std::string>{"eta", "F_vim", "F_rk4", "dF_vim", "dF_rk4", "dg_vim", "dg_rk4"});
  check_csv(out, 101);
  CHECK(out.profile.rows.back()[0] == 3.0);
  const auto& d = out.report["deviation"];
  for (const auto* key : {"F", "dF", "dg"}) CHECK(d[key]["max_abs"].get<double>() >= 0.0);

  const auto momentum_only = compare_command(config, false);
  CHECK(momentum_only.profile.columns.size() == 5);
  CHECK(momentum_only.report["deviation"]["dF"] == d["dF"]);
}

TEST_CASE("compare command, k = -1") {
  const auto out = compare_command(with_k(-1));
  const auto& d = out.report["deviation"];
  for (const auto* key : {"F", "dF", "dg"}) {
    CHECK(d[key]["max_abs"].get<double>() == 0.0);
    CHECK(d[key]["mean_abs"].get<double>() == 0.0);
  }
}

TEST_CASE("determinism") {
  RunConfig config;
  config.samples = 31;
  const auto a = compare_command(config);
  const auto b = compare_command(config);
  CHECK(to_csv(a.profile) == to_csv(b.profile));
  CHECK(a.report.dump() == b.report.dump());
  const auto ta = temperature_command(config);
  const auto tb = temperature_command(config);
  CHECK(ta.report.dump() == tb.report.dump());
}

TEST_CASE("params command") {
  const auto j = params_command(0, {1, 1, 1, 1});
  CHECK(j["C1"] == 1.0);
  CHECK(j["C2"] == 1.0);
  CHECK(j["exact"]["a"] == "1/3");
  CHECK(j["exact"]["b"] == "2/3");
  CHECK(j["exact"]["t"] == "-1/1");
  const auto k1 = params_command(1, {1, 1, 1, 1});
  CHECK(k1["a"] == 1.0);
  CHECK(k1["b"] == 1.0);
  CHECK(k1["t"] == -2.0);
  CHECK_THROWS_AS(params_command(0, {0, 1, 1, 1}), DomainError);
}

TEST_CASE("configuration errors") {
  RunConfig config;
  config.samples = 1;
  CHECK_THROWS_AS(momentum_command(config), DomainError);
  config = {};
  config.range = SampleRange{0.0, 11.0};
  CHECK_THROWS_AS(momentum_command(config), DomainError);
  config = {};
  config.iterations = 0;
  CHECK_THROWS_AS(momentum_command(config), DomainError);
  config = {};
  config.pade_l_temperature = 0;
  CHECK_THROWS_AS(temperature_command(config), DomainError);
  config = {};
  config.step = 0.003;
  CHECK_THROWS_AS(momentum_command(config), DomainError);
  config = {};
  config.momentum_bracket = Bracket{1.0, 0.0};
  CHECK_THROWS_AS(momentum_command(config), DomainError);
}

TEST_CASE("failure kinds") {
  RunConfig config;
  config.momentum_bracket = Bracket{1.0, 2.0};
  CHECK_THROWS_AS(momentum_command(config), ClosureError);
  config = {};
  config.momentum_shooting_bracket = Bracket{2.0, 3.0};
  CHECK_THROWS_AS(momentum_command(config), ShootingError);
}

}
