#include "marangoni/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace marangoni {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct ShotRoot {
  double s;
  double residual;
};

/// Bisection down to kShootingBisectionWidth followed by two secant polishing steps that are kept
/// only when they stay inside the bracket and reduce |r|.
template <typename Residual>
std::optional<ShotRoot> refine(const Residual& r, double lo, double hi, double r_lo, double r_hi) {
  while (hi - lo > kShootingBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    const double r_mid = r(mid);
    if (std::isnan(r_mid)) return std::nullopt;
    if (r_mid == 0.0) return ShotRoot{mid, 0.0};
    if ((r_mid > 0) == (r_lo > 0)) {
      lo = mid;
      r_lo = r_mid;
    } else {
      hi = mid;
      r_hi = r_mid;
    }
  }
  ShotRoot best = std::abs(r_lo) <= std::abs(r_hi) ? ShotRoot{lo, r_lo} : ShotRoot{hi, r_hi};
  double x0 = lo, f0 = r_lo, x1 = hi, f1 = r_hi;
  for (int i = 0; i < 2 && f1 != f0; ++i) {
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!(x2 >= lo && x2 <= hi)) break;
    const double f2 = r(x2);
    if (!std::isfinite(f2)) break;
    if (std::abs(f2) < std::abs(best.residual)) best = {x2, f2};
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
  }
  return best;
}

template <typename Residual>
double guarded(const Residual& r, double s) {
  try {
    return r(s);
  } catch (const IntegrationBlowup&) {
    return kNaN;
  }
}

std::vector<double> scan_nodes(Bracket bracket, double step) {
  const auto intervals = std::max(1, static_cast<int>(std::ceil((bracket.hi - bracket.lo) / step - 1e-9)));
  std::vector<double> nodes(intervals + 1);
  for (int i = 0; i <= intervals; ++i)
    nodes[i] = i == intervals ? bracket.hi : bracket.lo + (bracket.hi - bracket.lo) * i / intervals;
  return nodes;
}

State<3> momentum_start(const SimilarityParams& params, double s) {
  return {0.0, s, -(to_double(params.k) + 1.0)};
}

/// F'(eta_max), or an infinity carrying the sign of F' just before the shot blew up.
double signed_terminal_slope(const VectorField<3>& field, const State<3>& y0, double h, double eta_max) {
  const std::size_t n = step_count(h, eta_max);
  State<3> y = y0;
  for (std::size_t i = 0; i < n; ++i) {
    const State<3> next = rk4_step(field, static_cast<double>(i) * h, y, h);
    if (!next.allFinite() || std::abs(next(1)) > 1e150)
      return std::copysign(std::numeric_limits<double>::infinity(), y(1));
    y = next;
  }
  return y(1);
}

}  // namespace

std::size_t step_count(double h, double eta_max) {
  if (!(h > 0)) throw std::invalid_argument("step must be positive");
  if (!(eta_max >= h)) throw std::invalid_argument("eta_max must be at least one step");
  const double n = std::round(eta_max / h);
  if (std::abs(n * h - eta_max) > 1e-9 * std::max(1.0, eta_max))
    throw std::invalid_argument("eta_max must be an integer multiple of the step");
  return static_cast<std::size_t>(n);
}

VectorField<3> momentum_field(const SimilarityParams& params) {
  const double a = to_double(params.a);
  const double b = to_double(params.b);
  return [a, b](double, const State<3>& y) -> State<3> { return {y(1), y(2), a * y(1) * y(1) - b * y(0) * y(2)}; };
}

VectorField<5> coupled_field(const SimilarityParams& params) {
  const double a = to_double(params.a);
  const double b = to_double(params.b);
  const double t = to_double(params.t);
  const double pr = to_double(params.pr);
  return [a, b, t, pr](double, const State<5>& y) -> State<5> {
    State<5> d;
    d << y(1), y(2), a * y(1) * y(1) - b * y(0) * y(2), y(4), pr * (-b * y(0) * y(4) - t * y(1) * y(3));
    return d;
  };
}

double momentum_shot(const SimilarityParams& params, double s, double h, double eta_max) {
  return rk4_integrate(momentum_field(params), momentum_start(params, s), h, eta_max).states.back()(1);
}

NumericSolution<3> shoot_momentum(const SimilarityParams& params, const ShootingConfig& config) {
  if (!(config.bracket.lo < config.bracket.hi)) throw std::invalid_argument("shooting bracket must satisfy lo < hi");
  step_count(config.step, config.eta_max);
  const auto field = momentum_field(params);
  auto r = [&](double s) {
    return signed_terminal_slope(field, momentum_start(params, s), config.step, config.eta_max);
  };

  const auto nodes = scan_nodes(config.bracket, kShootingScanStep);
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = r(nodes[i]);

  std::vector<ShotRoot> roots;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (values[i] == 0.0) {
      roots.push_back({nodes[i], 0.0});
      continue;
    }
    if (i + 1 == nodes.size()) break;
    if (std::isnan(values[i]) || std::isnan(values[i + 1]) || values[i + 1] == 0.0 ||
        (values[i] > 0) == (values[i + 1] > 0))
      continue;
    if (auto root = refine(r, nodes[i], nodes[i + 1], values[i], values[i + 1])) roots.push_back(*root);
  }
  if (roots.empty()) {
    std::ostringstream msg;
    msg << "shooting bracket [" << config.bracket.lo << ", " << config.bracket.hi
        << "] holds no sign change of F'(eta_max): r(lo) = " << values.front() << ", r(hi) = " << values.back();
    throw ShootingError(msg.str());
  }

  std::optional<NumericSolution<3>> best;
  double best_floor = -std::numeric_limits<double>::infinity();
  for (const auto& root : roots) {
    if (!std::isfinite(root.residual)) continue;
    auto sol = rk4_integrate(field, momentum_start(params, root.s), config.step, config.eta_max);
    double floor = std::numeric_limits<double>::infinity();
    for (const auto& y : sol.states) floor = std::min(floor, y(1));
    if (!best || floor > best_floor) {
      best_floor = floor;
      sol.shooting_parameter = root.s;
      sol.terminal_residual = sol.states.back()(1);
      best = std::move(sol);
    }
  }
  if (!best) throw ShootingError("every momentum shooting root blew up before eta_max; try a smaller eta_max");
  if (!(std::abs(best->terminal_residual) <= kShootingResidualTolerance)) {
    std::ostringstream msg;
    msg << "momentum shooting stalled: |F'(eta_max)| = " << std::abs(best->terminal_residual) << " at s = "
        << best->shooting_parameter;
    throw ShootingError(msg.str());
  }
  return *best;
}

NumericSolution<2> shoot_temperature(const SimilarityParams& params, const NumericSolution<3>& momentum,
                                     Bracket bracket) {
  if (!(bracket.lo < bracket.hi)) throw std::invalid_argument("shooting bracket must satisfy lo < hi");
  const double h = momentum.step;
  const double eta_max = momentum.eta_max();
  const auto field = coupled_field(params);
  const State<3> f0 = momentum.states.front();
  auto start = [&](double sigma) {
    State<5> y;
    y << f0(0), f0(1), f0(2), 1.0, sigma;
    return y;
  };
  auto residual = [&](double sigma) { return rk4_integrate(field, start(sigma), h, eta_max).states.back()(4); };
  auto r = [&](double sigma) { return guarded(residual, sigma); };

  const auto nodes = scan_nodes(bracket, kShootingScanStep);
  std::vector<double> values(nodes.size(), kNaN);
  std::optional<ShotRoot> root;
  for (std::size_t i = 0; i < nodes.size() && !root; ++i) {
    values[i] = r(nodes[i]);
    if (values[i] == 0.0) {
      root = ShotRoot{nodes[i], 0.0};
    } else if (i > 0 && std::isfinite(values[i - 1]) && std::isfinite(values[i]) &&
               (values[i - 1] > 0) != (values[i] > 0)) {
      root = refine(r, nodes[i - 1], nodes[i], values[i - 1], values[i]);
    }
  }
  if (!root) {
    std::ostringstream msg;
    msg << "shooting bracket [" << bracket.lo << ", " << bracket.hi << "] holds no sign change of g'(eta_max)";
    throw ShootingError(msg.str());
  }

  const auto joint = rk4_integrate(field, start(root->s), h, eta_max);
  NumericSolution<2> sol;
  sol.step = h;
  sol.grid = joint.grid;
  sol.states.reserve(joint.states.size());
  for (const auto& y : joint.states) sol.states.emplace_back(y(3), y(4));
  sol.shooting_parameter = root->s;
  sol.terminal_residual = joint.states.back()(4);
  if (!(std::abs(sol.terminal_residual) <= kShootingResidualTolerance)) {
    std::ostringstream msg;
    msg << "temperature shooting stalled: |g'(eta_max)| = " << std::abs(sol.terminal_residual);
    throw ShootingError(msg.str());
  }
  return sol;
}

}  // namespace marangoni
