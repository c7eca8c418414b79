#pragma once

#include "marangoni/exp_poly.hpp"
#include "marangoni/params.hpp"
#include "marangoni/rational.hpp"

namespace marangoni {

enum class ResidualKind { momentum, temperature };

/// Correction functional u_{n+1} = u_n + integral_0^eta lambda(tau) R(u_n)(tau) d tau with the
/// polynomial multiplier lambda(tau) = kernel_scale * (tau - eta)^kernel_power.
struct CorrectionFunctional {
  unsigned kernel_power = 0;
  Rational kernel_scale;
  ResidualKind residual = ResidualKind::momentum;
  SimilarityParams params;
  ExpPoly flow;  ///< stream function F entering the temperature residual; unused for momentum
};

/// lambda = -(tau - eta)^2 / 2
CorrectionFunctional momentum_functional(const SimilarityParams& params);

/// lambda = (tau - eta), with the flow F held fixed across iterations.
CorrectionFunctional temperature_functional(const SimilarityParams& params, ExpPoly flow);

/// An iterate of the scheme started from A + B eta + C e^{-eta}. B is the free constant that the
/// far-field closure fixes; A and C come from the boundary conditions at eta = 0.
struct VimState {
  ExpPoly iterate;
  unsigned iterations = 0;
  Rational constant_a;
  Rational constant_b;
  Rational constant_c;
};

/// R(F) = F''' - a F'^2 + b F F''
ExpPoly momentum_residual(const ExpPoly& f, const SimilarityParams& params);

/// R(g) = g'' + Pr b F g' + Pr t F' g
ExpPoly temperature_residual(const ExpPoly& g, const ExpPoly& flow, const SimilarityParams& params);

ExpPoly residual(const ExpPoly& u, const CorrectionFunctional& cf);

VimState correction_step(const VimState& state, const CorrectionFunctional& cf);

/// Applies correction_step `steps` times.
VimState iterate(VimState state, const CorrectionFunctional& cf, unsigned steps);

/// F_0 = A + B eta + C e^{-eta}
ExpPoly momentum_initial(const Rational& a, const Rational& b, const Rational& c);

struct MomentumBoundaryConstants {
  Rational a;
  Rational c;
};

/// F(0) = 0 and F''(0) = -(k+1) on the initial guess give C = -(k+1), A = k+1. The p = 2 kernel
/// leaves value, slope and curvature at 0 untouched, so every iterate inherits them.
MomentumBoundaryConstants apply_momentum_bcs(const Rational& k);

/// g_0 = B eta + C e^{-eta}
ExpPoly temperature_initial(const Rational& b, const Rational& c);

/// g(0) = 1 fixes C = 1.
Rational apply_temperature_bcs();

/// theta = m g
ExpPoly theta_from_g(const ExpPoly& g, const Rational& m);

VimState momentum_start(const SimilarityParams& params, const Rational& b);
VimState temperature_start(const Rational& b);

/// Closed-form momentum iterate F_n for a given free constant B.
ExpPoly momentum_solution(const SimilarityParams& params, const Rational& b, unsigned steps = 1);

/// Closed-form temperature iterate g_n for a given free constant B and flow F.
ExpPoly temperature_solution(const SimilarityParams& params, const ExpPoly& flow, const Rational& b,
                             unsigned steps = 1);

}  // namespace marangoni
