#include "doctest.h"

#include "marangoni/errors.hpp"
#include "marangoni/params.hpp"

#include <cmath>

using namespace marangoni;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_SUITE("params") {

TEST_CASE("derive_exponents") {
  auto e = derive_exponents(0);
  CHECK(e.a == q(1, 3));
  CHECK(e.b == q(2, 3));
  CHECK(e.t == -1);
  e = derive_exponents(1);
  CHECK(e.a == 1);
  CHECK(e.b == 1);
  CHECK(e.t == -2);
  e = derive_exponents(-1);
  CHECK(e.a == q(-1, 3));
  CHECK(e.b == q(1, 3));
  CHECK(e.t == 0);
  CHECK_THROWS_AS(derive_exponents(q(-3, 2)), DomainError);
}

TEST_CASE("exponent identities") {
  for (const auto& k : {q(-1), q(-1, 2), q(0), q(1, 2), q(1), q(2)}) {
    const auto e = derive_exponents(k);
    CHECK(e.a + e.b == k + 1);
    CHECK(e.a - e.b == (k - 1) / 3);
    CHECK(e.t == -1 - k);
  }
}

TEST_CASE("make_params") {
  const auto p = make_params(q(1, 2), q(5), 2.5);
  CHECK(p.a == q(2, 3));
  CHECK(p.b == q(5, 6));
  CHECK(p.pr == 5);
  CHECK(p.m == 2.5);
  CHECK_THROWS_AS(make_params(0, 0), DomainError);
  CHECK_THROWS_AS(make_params(0, -1), DomainError);
  CHECK_THROWS_AS(make_params(-2), DomainError);
}

TEST_CASE("scaling_constants") {
  auto c = scaling_constants({1, 1, 1, 1});
  CHECK(c.c1 == 1.0);
  CHECK(c.c2 == 1.0);

  c = scaling_constants({8, 1, 1, 1});
  CHECK(c.c1 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(c.c2 == doctest::Approx(0.5).epsilon(1e-15));

  c = scaling_constants({2, 3, 4, 5});
  CHECK(c.c1 * c.c1 * c.c1 == doctest::Approx(24.0 / 25.0).epsilon(1e-14));
  CHECK(c.c2 * c.c2 * c.c2 == doctest::Approx(16.0 / 30.0).epsilon(1e-14));
  CHECK(c.c1 == doctest::Approx(0.98639).epsilon(1e-4));
  CHECK(c.c2 == doctest::Approx(0.81103).epsilon(1e-4));
}

TEST_CASE("negative forcing keeps the sign") {
  const auto c = scaling_constants({-8, 1, 1, 1});
  CHECK(c.c1 == doctest::Approx(-2.0));
  CHECK(c.c2 == doctest::Approx(-0.5));
}

TEST_CASE("product of scalings") {
  for (double rho : {1.0, 8.0, 27.0})
    for (double mu : {1.0, 8.0, 64.0}) {
      const auto c = scaling_constants({1, 1, rho, mu});
      CHECK(c.c1 * c.c2 == doctest::Approx(rho / mu).epsilon(1e-14));
    }
}

TEST_CASE("invalid physical inputs") {
  CHECK_THROWS_AS(scaling_constants({0, 1, 1, 1}), DomainError);
  CHECK_THROWS_AS(scaling_constants({1, 0, 1, 1}), DomainError);
  CHECK_THROWS_AS(scaling_constants({1, 1, 0, 1}), DomainError);
  CHECK_THROWS_AS(scaling_constants({1, 1, 1, -1}), DomainError);
}

TEST_CASE("non-canonical inputs are normalized") {
  const auto p = make_params(Rational(0, 2), Rational(10, 2));
  CHECK(p.k.get_den() == 1);
  CHECK(p.pr.get_den() == 1);
  CHECK(p.a == q(1, 3));
  CHECK(derive_exponents(Rational(2, 4)).t == q(-3, 2));
}

}
