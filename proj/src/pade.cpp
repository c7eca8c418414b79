#include "marangoni/pade.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace marangoni {

namespace {

struct ClosureSample {
  double phi = std::numeric_limits<double>::quiet_NaN();
  double q_lead = std::numeric_limits<double>::quiet_NaN();
  bool polynomial = false;
  bool vanishing = false;  ///< numerator identically zero
};

ClosureSample sample(const SeriesFactory& make_series, unsigned order, double b) {
  const auto series = make_series(from_double(b));
  ClosureSample s;
  try {
    const auto approx = pade_from_taylor(series, order, order);
    const Eigen::Index lead = approx.order_m();
    s.polynomial = lead == 0;
    s.phi = to_double(approx.numerator(s.polynomial ? 0 : order));
    s.q_lead = to_double(approx.denominator(lead));
    s.vanishing = true;
    for (Eigen::Index i = 0; i < approx.numerator.size(); ++i) s.vanishing = s.vanishing && is_zero(approx.numerator(i));
  } catch (const DegeneratePadeError&) {
  }
  return s;
}

}  // namespace

double closure_function(const SeriesFactory& make_series, unsigned order, double b) {
  return sample(make_series, order, b).phi;
}

ClosureResult solve_free_parameter(const SeriesFactory& make_series, unsigned order, Bracket bracket) {
  if (order < 1) throw std::invalid_argument("closure order must be at least 1");
  if (!(bracket.lo < bracket.hi)) throw std::invalid_argument("closure bracket must satisfy lo < hi");

  const auto intervals = static_cast<int>(std::ceil((bracket.hi - bracket.lo) / kClosureScanStep - 1e-9));
  std::vector<double> nodes(intervals + 1);
  std::vector<ClosureSample> samples(intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    nodes[i] = i == intervals ? bracket.hi : bracket.lo + (bracket.hi - bracket.lo) * i / intervals;
    samples[i] = sample(make_series, order, nodes[i]);
  }

  ClosureResult result;
  result.order = order;
  result.bracket = bracket;
  std::size_t spurious = 0;

  auto accept = [&](double b) {
    const auto s = sample(make_series, order, b);
    if (!(std::abs(s.q_lead) >= kSpuriousPoleTolerance) || (s.polynomial && !s.vanishing)) {
      ++spurious;
      return;
    }
    result.roots.push_back({b, s.phi, s.q_lead});
  };

  for (int i = 0; i <= intervals; ++i) {
    if (samples[i].phi == 0.0) {
      accept(nodes[i]);
      continue;
    }
    if (i == intervals) break;
    const double f_lo = samples[i].phi;
    const double f_hi = samples[i + 1].phi;
    if (!std::isfinite(f_lo) || !std::isfinite(f_hi) || f_hi == 0.0 || (f_lo > 0) == (f_hi > 0)) continue;

    double lo = nodes[i], hi = nodes[i + 1], phi_lo = f_lo;
    bool lost = false;
    while (hi - lo > kClosureTolerance) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double phi_mid = closure_function(make_series, order, mid);
      if (!std::isfinite(phi_mid)) {
        lost = true;
        break;
      }
      if (phi_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((phi_mid > 0) == (phi_lo > 0)) {
        lo = mid;
        phi_lo = phi_mid;
      } else {
        hi = mid;
      }
    }
    if (lost) continue;
    const double root = 0.5 * (lo + hi);
    // A sign change through a pole of phi grows instead of vanishing.
    if (std::abs(closure_function(make_series, order, root)) > std::min(std::abs(f_lo), std::abs(f_hi)))
      continue;
    accept(root);
  }

  if (result.roots.empty()) {
    std::ostringstream msg;
    msg.precision(10);
    if (spurious > 0) {
      msg << "spurious pole: closure root(s) in [" << bracket.lo << ", " << bracket.hi
          << "] have a vanishing denominator lead q_" << order;
    } else {
      msg << "no closure root for [" << order << "/" << order << "] in [" << bracket.lo << ", " << bracket.hi
          << "]: phi(lo) = " << samples.front().phi << ", phi(hi) = " << samples.back().phi;
    }
    throw ClosureError(msg.str());
  }
  return result;
}

}  // namespace marangoni
