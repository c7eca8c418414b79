#include "marangoni/vim.hpp"

#include "marangoni/errors.hpp"

#include <utility>

namespace marangoni {

CorrectionFunctional momentum_functional(const SimilarityParams& params) {
  return {2, Rational(-1, 2), ResidualKind::momentum, params, {}};
}

CorrectionFunctional temperature_functional(const SimilarityParams& params, ExpPoly flow) {
  return {1, Rational(1), ResidualKind::temperature, params, std::move(flow)};
}

ExpPoly momentum_residual(const ExpPoly& f, const SimilarityParams& params) {
  const ExpPoly d1 = differentiate(f);
  const ExpPoly d2 = differentiate(d1);
  const ExpPoly d3 = differentiate(d2);
  return d3 - scale(d1 * d1, params.a) + scale(f * d2, params.b);
}

ExpPoly temperature_residual(const ExpPoly& g, const ExpPoly& flow, const SimilarityParams& params) {
  const ExpPoly g1 = differentiate(g);
  const ExpPoly g2 = differentiate(g1);
  const Rational convect = params.pr * params.b;
  const Rational source = params.pr * params.t;
  return g2 + scale(flow * g1, convect) + scale(differentiate(flow) * g, source);
}

ExpPoly residual(const ExpPoly& u, const CorrectionFunctional& cf) {
  switch (cf.residual) {
    case ResidualKind::momentum:
      return momentum_residual(u, cf.params);
    case ResidualKind::temperature:
      return temperature_residual(u, cf.flow, cf.params);
  }
  return {};
}

VimState correction_step(const VimState& state, const CorrectionFunctional& cf) {
  VimState next = state;
  next.iterate = state.iterate + integrate_kernel(residual(state.iterate, cf), cf.kernel_power, cf.kernel_scale);
  ++next.iterations;
  return next;
}

VimState iterate(VimState state, const CorrectionFunctional& cf, unsigned steps) {
  for (unsigned i = 0; i < steps; ++i) state = correction_step(state, cf);
  return state;
}

ExpPoly momentum_initial(const Rational& a, const Rational& b, const Rational& c) {
  return ExpPoly::constant(a) + ExpPoly::monomial(b, 1, 0) + ExpPoly::monomial(c, 0, 1);
}

MomentumBoundaryConstants apply_momentum_bcs(const Rational& k) {
  if (k < -1)
    throw DomainError("power-law exponent k = " + to_fraction_string(k) + " is below the minimum -1");
  const Rational c = -(k + 1);
  return {-c, c};
}

ExpPoly temperature_initial(const Rational& b, const Rational& c) {
  return ExpPoly::monomial(b, 1, 0) + ExpPoly::monomial(c, 0, 1);
}

Rational apply_temperature_bcs() { return 1; }

ExpPoly theta_from_g(const ExpPoly& g, const Rational& m) { return scale(g, m); }

VimState momentum_start(const SimilarityParams& params, const Rational& b) {
  const auto bc = apply_momentum_bcs(params.k);
  return {momentum_initial(bc.a, b, bc.c), 0, bc.a, b, bc.c};
}

VimState temperature_start(const Rational& b) {
  const Rational c = apply_temperature_bcs();
  return {temperature_initial(b, c), 0, Rational(0), b, c};
}

ExpPoly momentum_solution(const SimilarityParams& params, const Rational& b, unsigned steps) {
  return iterate(momentum_start(params, b), momentum_functional(params), steps).iterate;
}

ExpPoly temperature_solution(const SimilarityParams& params, const ExpPoly& flow, const Rational& b,
                             unsigned steps) {
  return iterate(temperature_start(b), temperature_functional(params, flow), steps).iterate;
}

}  // namespace marangoni
