#pragma once

#include "marangoni/errors.hpp"
#include "marangoni/pade.hpp"
#include "marangoni/params.hpp"

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace marangoni {

template <int N>
using State = Eigen::Matrix<double, N, 1>;

template <int N>
using VectorField = std::function<State<N>(double, const State<N>&)>;

/// Grid-sampled solution of an initial- or boundary-value problem.
template <int N>
struct NumericSolution {
  std::vector<double> grid;     ///< 0, h, 2h, ..., eta_max
  std::vector<State<N>> states;
  double step = 0.0;
  double shooting_parameter = 0.0;  ///< fitted initial slope, when shot
  double terminal_residual = 0.0;   ///< far-field target at eta_max, when shot

  double eta_max() const { return grid.back(); }

  /// Component `i` at eta, linearly interpolated between grid nodes.
  double at(double eta, int i) const {
    if (eta <= 0.0) return states.front()(i);
    const double pos = eta / step;
    auto node = static_cast<std::size_t>(std::floor(pos));
    if (node + 1 >= grid.size()) return states.back()(i);
    const double w = pos - static_cast<double>(node);
    if (w < 1e-9) return states[node](i);
    if (w > 1.0 - 1e-9) return states[node + 1](i);
    return (1.0 - w) * states[node](i) + w * states[node + 1](i);
  }
};

/// Non-finite state during integration.
class IntegrationBlowup : public ShootingError {
 public:
  IntegrationBlowup(std::size_t node, double eta)
      : ShootingError("integration blew up at node " + std::to_string(node) + " (eta = " + std::to_string(eta) +
                      "); try a smaller eta_max"),
        node_(node),
        eta_(eta) {}

  std::size_t node() const { return node_; }
  double eta() const { return eta_; }

 private:
  std::size_t node_;
  double eta_;
};

/// Number of uniform steps covering [0, eta_max]; eta_max must be a multiple of h.
std::size_t step_count(double h, double eta_max);

/// One classical RK4 step from (x, y).
template <int N>
State<N> rk4_step(const VectorField<N>& f, double x, const State<N>& y, double h) {
  const State<N> k1 = f(x, y);
  const State<N> k2 = f(x + 0.5 * h, y + 0.5 * h * k1);
  const State<N> k3 = f(x + 0.5 * h, y + 0.5 * h * k2);
  const State<N> k4 = f(x + h, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Classical fourth-order Runge-Kutta on the uniform grid 0, h, ..., eta_max.
template <int N>
NumericSolution<N> rk4_integrate(const VectorField<N>& f, const State<N>& y0, double h, double eta_max) {
  const std::size_t n = step_count(h, eta_max);
  NumericSolution<N> sol;
  sol.step = h;
  sol.grid.resize(n + 1);
  sol.states.resize(n + 1);
  sol.grid[0] = 0.0;
  sol.states[0] = y0;
  State<N> y = y0;
  for (std::size_t i = 0; i < n; ++i) {
    y = rk4_step(f, static_cast<double>(i) * h, y, h);
    if (!y.allFinite()) throw IntegrationBlowup(i + 1, static_cast<double>(i + 1) * h);
    sol.grid[i + 1] = static_cast<double>(i + 1) * h;
    sol.states[i + 1] = y;
  }
  return sol;
}

struct ShootingConfig {
  double eta_max = 10.0;
  double step = 1e-3;
  Bracket bracket{-0.5, 3.0};
};

inline constexpr double kShootingScanStep = 0.05;
inline constexpr double kShootingBisectionWidth = 1e-10;
inline constexpr double kShootingResidualTolerance = 1e-8;

/// (F, F', F'') -> (F', F'', a F'^2 - b F F'')
VectorField<3> momentum_field(const SimilarityParams& params);

/// (F, F', F'', g, g') with g'' = Pr (-b F g' - t F' g)
VectorField<5> coupled_field(const SimilarityParams& params);

/// F'(eta_max) for the initial slope s, with F(0) = 0 and F''(0) = -(k+1).
double momentum_shot(const SimilarityParams& params, double s, double h, double eta_max);

/// Shoots on s = F'(0) so that F'(eta_max) = 0. Every sign change of the terminal residual in the
/// bracket is refined; the root whose profile undershoots least below F' = 0 is returned.
NumericSolution<3> shoot_momentum(const SimilarityParams& params, const ShootingConfig& config = {});

inline constexpr Bracket kTemperatureShootingBracket{-10.0, 10.0};

/// Shoots on g'(0) so that g'(eta_max) = 0, integrating (F, F', F'', g, g') jointly from the fitted
/// momentum slope on the momentum solution's grid. The returned states are (g, g').
NumericSolution<2> shoot_temperature(const SimilarityParams& params, const NumericSolution<3>& momentum,
                                     Bracket bracket = kTemperatureShootingBracket);

}  // namespace marangoni
