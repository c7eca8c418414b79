#include "doctest.h"

#include "marangoni/bvp.hpp"
#include "marangoni/params.hpp"

#include <cmath>

using namespace marangoni;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Repository-golden oracle values at h = 1e-3, eta_max = 10.
constexpr double kSurfaceSlopeK0 = 1.2961575407;
constexpr double kWallGradientK0Pr5 = -2.782726057;

double rk4_exp(double h) {
  const VectorField<1> f = [](double, const State<1>& y) { return y; };
  return rk4_integrate<1>(f, State<1>::Constant(1.0), h, 1.0).states.back()(0);
}

}  // namespace

TEST_SUITE("bvp") {

TEST_CASE("rk4 constant field") {
  const VectorField<1> f = [](double, const State<1>&) { return State<1>::Zero(); };
  const auto sol = rk4_integrate<1>(f, State<1>::Constant(1.0), 0.1, 1.0);
  REQUIRE(sol.states.size() == 11);
  for (const auto& y : sol.states) CHECK(y(0) == 1.0);
}

TEST_CASE("rk4 exponential") {
  const double y1 = rk4_exp(0.1);
  CHECK(std::abs(y1 - std::exp(1.0)) / std::exp(1.0) <= 1e-6);
}

TEST_CASE("rk4 Riccati") {
  const VectorField<1> f = [](double, const State<1>& y) { return State<1>::Constant(-y(0) * y(0)); };
  const auto sol = rk4_integrate<1>(f, State<1>::Constant(1.0), 1e-3, 1.0);
  CHECK(std::abs(sol.states.back()(0) - 0.5) <= 1e-8);
  CHECK(std::abs(sol.at(0.5, 0) - 1.0 / 1.5) <= 1e-8);
}

TEST_CASE("rk4 grid") {
  const VectorField<1> f = [](double, const State<1>& y) { return y; };
  const auto sol = rk4_integrate<1>(f, State<1>::Constant(1.0), 1e-3, 2.0);
  REQUIRE(sol.grid.size() == 2001);
  CHECK(sol.grid.front() == 0.0);
  CHECK(sol.eta_max() == 2.0);
  for (std::size_t i = 1; i < sol.grid.size(); ++i) CHECK(std::abs(sol.grid[i] - sol.grid[i - 1] - 1e-3) <= 1e-12);
  CHECK_THROWS_AS(step_count(0.3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(step_count(0.0, 1.0), std::invalid_argument);
  CHECK(step_count(0.25, 1.0) == 4);
}

TEST_CASE("rk4 blowup") {
  const VectorField<1> f = [](double, const State<1>& y) { return State<1>::Constant(y(0) * y(0)); };
  try {
    rk4_integrate<1>(f, State<1>::Constant(1.0), 1e-2, 2.0);
    FAIL("expected IntegrationBlowup");
  } catch (const IntegrationBlowup& e) {
    CHECK(e.eta() > 0.9);
    CHECK(e.eta() <= 2.0);
    CHECK(std::string(e.what()).find("node") != std::string::npos);
  }
}

TEST_CASE("rk4 order of convergence") {
  for (double h : {0.2, 0.1, 0.05}) {
    const double reference = (16 * rk4_exp(h / 4) - rk4_exp(h / 2)) / 15;
    const double coarse = std::abs(rk4_exp(h) - reference);
    const double fine = std::abs(rk4_exp(h / 2) - reference);
    CHECK(coarse / fine >= 12.0);
    const double exact_ratio = std::abs(rk4_exp(h) - std::exp(1.0)) / std::abs(rk4_exp(h / 2) - std::exp(1.0));
    CHECK(exact_ratio >= 12.0);
  }
}

TEST_CASE("momentum shooting, k = 0") {
  const auto params = make_params(0);
  const auto sol = shoot_momentum(params);
  CHECK(std::abs(sol.shooting_parameter - kSurfaceSlopeK0) <= 1e-9);
  CHECK(std::abs(sol.terminal_residual) <= kShootingResidualTolerance);
  CHECK(sol.states.front()(0) == 0.0);
  CHECK(sol.states.front()(1) == sol.shooting_parameter);
  CHECK(sol.states.front()(2) == -1.0);
  CHECK(sol.grid.size() == 10001);
  CHECK(std::abs(sol.shooting_parameter - 1.3046259583) < 0.01);
}

TEST_CASE("momentum terminal residual is positive at both default bracket ends") {
  const auto params = make_params(0);
  CHECK(momentum_shot(params, 0.5, 1e-3, 10.0) > 0);
  CHECK(momentum_shot(params, 3.0, 1e-3, 10.0) > 0);
  // The sign changes lie inside: a spurious root undershooting below F' = 0 and the physical one.
  CHECK(momentum_shot(params, 1.25, 1e-3, 10.0) < 0);
}

TEST_CASE("momentum grid independence") {
  const auto params = make_params(0);
  const auto coarse = shoot_momentum(params, {10.0, 1e-3, {-0.5, 3.0}});
  const auto fine = shoot_momentum(params, {10.0, 5e-4, {-0.5, 3.0}});
  CHECK(std::abs(coarse.shooting_parameter - fine.shooting_parameter) <= 1e-6);
}

TEST_CASE("momentum far-field flatness") {
  for (const auto& k : {q(-1, 2), q(0), q(1, 2)}) {
    const auto sol = shoot_momentum(make_params(k));
    const std::size_t start = 3 * (sol.states.size() - 1) / 4;
    for (std::size_t i = start + 1; i < sol.states.size(); ++i)
      CHECK(std::abs(sol.states[i](1)) <= std::abs(sol.states[i - 1](1)));
  }
}

TEST_CASE("momentum shooting, other exponents") {
  CHECK(shoot_momentum(make_params(q(-1, 2))).shooting_parameter == doctest::Approx(1.0826355853).epsilon(1e-9));
  CHECK(shoot_momentum(make_params(q(1, 2))).shooting_parameter == doctest::Approx(1.4562687759).epsilon(1e-9));
  const auto k1 = shoot_momentum(make_params(1), {8.0, 1e-3, {-0.5, 3.0}});
  CHECK(std::abs(k1.terminal_residual) <= kShootingResidualTolerance);
  CHECK(k1.states.front()(2) == -2.0);
}

TEST_CASE("momentum shooting, k = -1") {
  const auto sol = shoot_momentum(make_params(-1));
  CHECK(sol.shooting_parameter == 0.0);
  for (const auto& y : sol.states) CHECK(y.norm() == 0.0);
}

TEST_CASE("momentum shooting errors") {
  const auto params = make_params(0);
  try {
    shoot_momentum(params, {10.0, 1e-3, {2.0, 3.0}});
    FAIL("expected ShootingError");
  } catch (const ShootingError& e) {
    CHECK(std::string(e.what()).find("shooting bracket") != std::string::npos);
  }
  CHECK_THROWS_AS(shoot_momentum(params, {10.0, 1e-3, {3.0, 2.0}}), std::invalid_argument);
}

TEST_CASE("temperature shooting, k = 0, Pr = 5") {
  const auto params = make_params(0, 5);
  const auto momentum = shoot_momentum(params);
  const auto sol = shoot_temperature(params, momentum);
  CHECK(std::abs(sol.shooting_parameter - kWallGradientK0Pr5) <= 1e-8);
  CHECK(std::abs(sol.terminal_residual) <= kShootingResidualTolerance);
  CHECK(sol.states.front()(0) == 1.0);
  CHECK(sol.grid == momentum.grid);
}

TEST_CASE("temperature shooting, small Pr") {
  double previous = std::numeric_limits<double>::infinity();
  for (const auto& pr : {q(1), q(1, 10), q(1, 100)}) {
    const auto params = make_params(0, pr);
    const double slope = shoot_temperature(params, shoot_momentum(params)).shooting_parameter;
    CHECK(std::abs(slope) < previous);
    previous = std::abs(slope);
  }
  const auto params = make_params(0, q(1, 1000000));
  CHECK(std::abs(shoot_temperature(params, shoot_momentum(params)).shooting_parameter) < 1e-5);
}

TEST_CASE("temperature shooting, k = -1") {
  const auto params = make_params(-1, 5);
  const auto sol = shoot_temperature(params, shoot_momentum(params));
  CHECK(sol.shooting_parameter == 0.0);
  for (const auto& y : sol.states) {
    CHECK(y(0) == 1.0);
    CHECK(y(1) == 0.0);
  }
}

TEST_CASE("temperature shooting errors") {
  const auto params = make_params(0, 5);
  const auto momentum = shoot_momentum(params);
  CHECK_THROWS_AS(shoot_temperature(params, momentum, {0.0, 5.0}), ShootingError);
}

}
