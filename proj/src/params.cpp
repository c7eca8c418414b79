#include "marangoni/params.hpp"

#include "marangoni/errors.hpp"

#include <cmath>

namespace marangoni {

namespace {

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

}  // namespace

SimilarityExponents derive_exponents(const Rational& k_in) {
  const Rational k = canonical(k_in);
  if (k < -1)
    throw DomainError("power-law exponent k = " + to_fraction_string(k) + " is below the minimum -1");
  return {(2 * k + 1) / 3, (k + 2) / 3, -1 - k};
}

SimilarityParams make_params(const Rational& k, const Rational& pr, double m) {
  if (sgn(pr) <= 0) throw DomainError("Prandtl number must be positive");
  auto e = derive_exponents(k);
  return {canonical(k), e.a, e.b, e.t, canonical(pr), m};
}

ScalingConstants scaling_constants(const PhysicalParams& p) {
  if (!(p.rho > 0)) throw DomainError("density must be positive");
  if (!(p.mu > 0)) throw DomainError("viscosity must be positive");
  const double forcing = p.dsigma_dT * p.m;
  if (forcing == 0.0)
    throw DomainError("degenerate forcing: dsigma/dT * m = 0 makes C2 = cbrt(rho^2 / (dsigma/dT m mu)) undefined");
  return {std::cbrt(forcing * p.rho / (p.mu * p.mu)), std::cbrt(p.rho * p.rho / (forcing * p.mu))};
}

}  // namespace marangoni
