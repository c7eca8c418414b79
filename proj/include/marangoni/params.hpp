#pragma once

#include "marangoni/rational.hpp"

namespace marangoni {

/// Coefficients of the similarity equations
///   F''' = a F'^2 - b F F''
///   theta'' = Pr (-b F theta' - t F' theta)
struct SimilarityExponents {
  Rational a;
  Rational b;
  Rational t;
};

struct SimilarityParams {
  Rational k;   ///< surface temperature power-law exponent, k >= -1
  Rational a;
  Rational b;
  Rational t;
  Rational pr;  ///< Prandtl number, > 0; taken as an independent input
  double m = 1.0;  ///< surface temperature gradient coefficient, theta(0) = m
};

/// a = (2k+1)/3, b = (k+2)/3, t = -1-k. Throws DomainError for k < -1.
SimilarityExponents derive_exponents(const Rational& k);

/// Builds the full parameter set; throws DomainError for k < -1 or pr <= 0.
SimilarityParams make_params(const Rational& k, const Rational& pr = Rational(1), double m = 1.0);

/// Fluid properties entering the similarity scalings.
struct PhysicalParams {
  double dsigma_dT = 1.0;  ///< surface-tension temperature coefficient
  double m = 1.0;
  double rho = 1.0;        ///< density, > 0
  double mu = 1.0;         ///< dynamic viscosity, > 0
};

struct ScalingConstants {
  double c1;
  double c2;
};

/// C1 = cbrt(dsigma_dT m rho / mu^2), C2 = cbrt(rho^2 / (dsigma_dT m mu)), using real
/// (sign-preserving) cube roots. Throws DomainError on rho <= 0, mu <= 0 or dsigma_dT * m == 0.
ScalingConstants scaling_constants(const PhysicalParams& p);

}  // namespace marangoni
