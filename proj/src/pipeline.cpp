#include "marangoni/pipeline.hpp"

#include "marangoni/errors.hpp"
#include "marangoni/vim.hpp"

#include <cmath>
#include <limits>

namespace marangoni {

namespace {

void check_bracket(const std::optional<Bracket>& b, const char* what) {
  if (b && !(b->lo < b->hi)) throw DomainError(std::string(what) + " bracket must satisfy lo < hi");
}

std::size_t closest_root(const ClosureResult& closure, double target, const std::function<double(double)>& slope_at) {
  std::size_t best = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < closure.roots.size(); ++i) {
    const double gap = std::abs(slope_at(closure.roots[i].b) - target);
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  return best;
}

}  // namespace

Bracket default_momentum_bracket(const Rational& k) { return {-to_double(k + 1), 3.0}; }

void validate(const RunConfig& config, SampleRange range) {
  if (config.iterations < 1) throw DomainError("iterations must be at least 1");
  if (config.pade_l_momentum < 1 || config.pade_l_temperature < 1) throw DomainError("Pade order L must be at least 1");
  if (!(config.step > 0)) throw DomainError("step must be positive");
  if (!(config.eta_max >= config.step)) throw DomainError("eta_max must be at least one step");
  if (!(range.lo >= 0 && range.hi <= config.eta_max && range.lo <= range.hi))
    throw DomainError("sample range must lie within [0, eta_max]");
  if (config.samples < 2) throw DomainError("at least two samples are required");
  check_bracket(config.momentum_bracket, "momentum closure");
  check_bracket(config.temperature_bracket, "temperature closure");
  check_bracket(config.momentum_shooting_bracket, "momentum shooting");
  check_bracket(config.temperature_shooting_bracket, "temperature shooting");
  try {
    step_count(config.step, config.eta_max);
  } catch (const std::invalid_argument& e) {
    throw DomainError(e.what());
  }
}

std::vector<double> sample_grid(SampleRange range, std::size_t samples) {
  std::vector<double> grid(samples);
  for (std::size_t i = 0; i < samples; ++i)
    grid[i] = i + 1 == samples ? range.hi
                               : range.lo + (range.hi - range.lo) * static_cast<double>(i) /
                                                static_cast<double>(samples - 1);
  return grid;
}

SeriesFactory momentum_slope_series(const SimilarityParams& params, unsigned order, unsigned iterations) {
  return [params, order, iterations](const Rational& b) {
    return taylor(differentiate(momentum_solution(params, b, iterations)), 2 * order);
  };
}

SeriesFactory temperature_slope_series(const SimilarityParams& params, const ExpPoly& flow, unsigned order,
                                       unsigned iterations) {
  return [params, flow, order, iterations](const Rational& b) {
    return taylor(differentiate(temperature_solution(params, flow, b, iterations)), 2 * order);
  };
}

MomentumRun run_momentum(const RunConfig& config) {
  MomentumRun run;
  run.params = make_params(config.k, config.pr, config.m ? to_double(*config.m) : 1.0);
  const unsigned order = config.pade_l_momentum;

  run.oracle = shoot_momentum(run.params, {config.eta_max, config.step, config.momentum_shooting_bracket});

  const auto series = momentum_slope_series(run.params, order, config.iterations);
  run.closure = solve_free_parameter(series, order, config.momentum_bracket.value_or(default_momentum_bracket(config.k)));
  run.closure.preferred = closest_root(run.closure, run.oracle.shooting_parameter, [&](double b) {
    return eval(differentiate(momentum_solution(run.params, from_double(b), config.iterations)), 0.0);
  });

  run.free_constant = from_double(run.closure.best().b);
  const auto bc = apply_momentum_bcs(run.params.k);
  run.constant_a = bc.a;
  run.constant_c = bc.c;
  run.solution = momentum_solution(run.params, run.free_constant, config.iterations);
  run.slope_pade = pade_from_taylor(series(run.free_constant), order, order);
  return run;
}

TemperatureRun run_temperature(const RunConfig& config) {
  TemperatureRun run;
  run.momentum = run_momentum(config);
  const auto& params = run.momentum.params;
  const unsigned order = config.pade_l_temperature;

  run.oracle = shoot_temperature(params, run.momentum.oracle, config.temperature_shooting_bracket);

  const auto series = temperature_slope_series(params, run.momentum.solution, order, config.iterations);
  run.closure = solve_free_parameter(series, order, config.temperature_bracket.value_or(kTemperatureClosureBracket));
  run.closure.preferred = closest_root(run.closure, run.oracle.shooting_parameter, [&](double b) {
    return eval(differentiate(temperature_solution(params, run.momentum.solution, from_double(b), config.iterations)),
                0.0);
  });

  run.free_constant = from_double(run.closure.best().b);
  run.solution = temperature_solution(params, run.momentum.solution, run.free_constant, config.iterations);
  run.slope_pade = pade_from_taylor(series(run.free_constant), order, order);
  return run;
}

DeviationStats deviation(const std::vector<double>& a, const std::vector<double>& b) {
  DeviationStats s;
  if (a.empty()) return s;
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    s.max_abs = std::max(s.max_abs, d);
    sum += d;
  }
  s.mean_abs = sum / static_cast<double>(a.size());
  return s;
}

std::optional<double> first_exceedance(const std::vector<double>& grid, const std::vector<double>& a,
                                       const std::vector<double>& b, double threshold) {
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (std::abs(a[i] - b[i]) > threshold) return grid[i];
  return std::nullopt;
}

}  // namespace marangoni
