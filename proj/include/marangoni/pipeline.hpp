#pragma once

#include "marangoni/bvp.hpp"
#include "marangoni/exp_poly.hpp"
#include "marangoni/pade.hpp"
#include "marangoni/params.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace marangoni {

struct SampleRange {
  double lo;
  double hi;
};

struct RunConfig {
  Rational k{0};
  Rational pr{5};
  std::optional<Rational> m;  ///< emit theta = m g when set
  unsigned pade_l_momentum = 2;
  unsigned pade_l_temperature = 3;
  unsigned iterations = 1;
  double eta_max = 10.0;
  double step = 1e-3;
  std::size_t samples = 101;
  std::optional<SampleRange> range;  ///< per-command default when unset
  std::optional<Bracket> momentum_bracket;
  std::optional<Bracket> temperature_bracket;
  Bracket momentum_shooting_bracket{-0.5, 3.0};
  Bracket temperature_shooting_bracket = kTemperatureShootingBracket;
  double deviation_threshold = 0.05;
};

/// B in [-(k+1), 3], i.e. a nonnegative surface velocity F'(0) = B + k + 1.
Bracket default_momentum_bracket(const Rational& k);
inline constexpr Bracket kTemperatureClosureBracket{-2.0, 2.0};
inline constexpr SampleRange kMomentumRange{0.0, 5.0};
inline constexpr SampleRange kTemperatureRange{0.0, 4.0};
inline constexpr SampleRange kCompareRange{0.0, 3.0};

/// Throws DomainError on an inconsistent configuration.
void validate(const RunConfig& config, SampleRange range);

std::vector<double> sample_grid(SampleRange range, std::size_t samples);

struct MomentumRun {
  SimilarityParams params;
  ClosureResult closure;
  Rational free_constant;     ///< B* at the preferred root, exact value of the double root
  Rational constant_a;
  Rational constant_c;
  ExpPoly solution;           ///< F_n(B*)
  PadeApproximant slope_pade; ///< [L/L] of F_n' at B*
  NumericSolution<3> oracle;
};

struct TemperatureRun {
  MomentumRun momentum;
  ClosureResult closure;
  Rational free_constant;
  ExpPoly solution;           ///< g_n(B*)
  PadeApproximant slope_pade; ///< [L/L] of g_n' at B*
  NumericSolution<2> oracle;
};

/// Taylor series of F_n' through order 2L, as a function of the free constant B.
SeriesFactory momentum_slope_series(const SimilarityParams& params, unsigned order, unsigned iterations);

/// Taylor series of g_n' through order 2L for the flow F, as a function of B.
SeriesFactory temperature_slope_series(const SimilarityParams& params, const ExpPoly& flow, unsigned order,
                                       unsigned iterations);

/// Closes F_n with the [L/L] far-field condition and runs the RK4 oracle. Among several closure
/// roots the one whose F'(0) is closest to the oracle's is preferred.
MomentumRun run_momentum(const RunConfig& config);

/// Runs the momentum stage, then closes g_n using F_n(B*) as the flow; the root whose g'(0) is
/// closest to the oracle's is preferred.
TemperatureRun run_temperature(const RunConfig& config);

struct DeviationStats {
  double max_abs = 0.0;
  double mean_abs = 0.0;
};

DeviationStats deviation(const std::vector<double>& a, const std::vector<double>& b);

/// First sample where |a - b| exceeds the threshold; nullopt when it never does.
std::optional<double> first_exceedance(const std::vector<double>& grid, const std::vector<double>& a,
                                       const std::vector<double>& b, double threshold);

}  // namespace marangoni
