#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace marangoni {

/// Exact arbitrary-precision rational; the coefficient field of the symbolic pipeline.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal such as "-0.3046259590" or "1.5e-3".
/// The decimal form is converted exactly (no binary rounding).
Rational parse_rational(std::string_view text);

/// Canonical "numerator/denominator" rendering, e.g. "1/1", "-2/3".
std::string to_fraction_string(const Rational& q);

/// Exact value of a binary double.
Rational from_double(double x);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

}  // namespace marangoni

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };

  static inline mpq_class epsilon() { return 0; }
  static inline mpq_class dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
