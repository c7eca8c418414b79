#pragma once

#include "marangoni/errors.hpp"
#include "marangoni/rational.hpp"

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace marangoni {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// [L/M] rational approximant p(x)/q(x) with q(0) = 1.
template <typename Scalar>
struct BasicPade {
  Vector<Scalar> numerator;    ///< p_0 .. p_L
  Vector<Scalar> denominator;  ///< q_0 = 1 .. q_M

  int order_l() const { return static_cast<int>(numerator.size()) - 1; }
  int order_m() const { return static_cast<int>(denominator.size()) - 1; }
};

using PadeApproximant = BasicPade<Rational>;

namespace detail {

template <typename Scalar>
double magnitude(const Scalar& x) {
  return std::abs(to_double(x));
}

/// Solves A x = rhs by Gaussian elimination with partial pivoting. Returns false when A is
/// singular (exactly, for rational scalars).
template <typename Scalar>
bool gauss_solve(Matrix<Scalar> a, Vector<Scalar> rhs, Vector<Scalar>& x) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    double best = -1.0;
    for (Eigen::Index r = col; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      if (double m = magnitude(a(r, col)); m > best) {
        best = m;
        pivot = r;
      }
    }
    if (pivot < 0) return false;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      std::swap(rhs(pivot), rhs(col));
    }
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const Scalar factor = a(r, col) / a(col, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      rhs(r) -= factor * rhs(col);
    }
  }
  x.resize(n);
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    Scalar acc = rhs(r);
    for (Eigen::Index c = r + 1; c < n; ++c) acc -= a(r, c) * x(c);
    x(r) = acc / a(r, r);
  }
  return true;
}

}  // namespace detail

/**
 * Builds the [L/M] approximant matching c_0..c_{L+M}.
 *
 * The denominator solves the M x M Toeplitz system
 *     sum_{j=1..M} q_j c_{L+i-j} = -c_{L+i},   i = 1..M   (c_n = 0 for n < 0),
 * and the numerator follows by convolution, p_i = sum_{j<=min(i,M)} q_j c_{i-j}.
 * A series whose coefficients c_{L+1..L+M} all vanish yields the denominator [1].
 */
template <typename Scalar>
BasicPade<Scalar> pade_from_taylor(std::span<const Scalar> c, unsigned l, unsigned m) {
  if (c.size() < static_cast<std::size_t>(l + m + 1))
    throw std::invalid_argument("Pade [" + std::to_string(l) + "/" + std::to_string(m) + "] needs " +
                                std::to_string(l + m + 1) + " Taylor coefficients, got " +
                                std::to_string(c.size()));
  auto coeff = [&](long n) { return n < 0 ? Scalar(0) : c[static_cast<std::size_t>(n)]; };

  Vector<Scalar> q_tail;
  Vector<Scalar> rhs(m);
  bool homogeneous = true;
  for (unsigned i = 1; i <= m; ++i) {
    rhs(i - 1) = -coeff(static_cast<long>(l + i));
    homogeneous = homogeneous && is_zero(rhs(i - 1));
  }
  if (homogeneous) {
    q_tail.resize(0);
  } else {
    Matrix<Scalar> toeplitz(m, m);
    for (unsigned i = 1; i <= m; ++i)
      for (unsigned j = 1; j <= m; ++j) toeplitz(i - 1, j - 1) = coeff(static_cast<long>(l + i) - j);
    if (!detail::gauss_solve(toeplitz, rhs, q_tail))
      throw DegeneratePadeError("degenerate Pade [" + std::to_string(l) + "/" + std::to_string(m) +
                                "]: singular Toeplitz system");
  }

  BasicPade<Scalar> out;
  out.denominator.resize(q_tail.size() + 1);
  out.denominator(0) = Scalar(1);
  for (Eigen::Index j = 0; j < q_tail.size(); ++j) out.denominator(j + 1) = q_tail(j);

  out.numerator.resize(l + 1);
  for (unsigned i = 0; i <= l; ++i) {
    Scalar acc(0);
    for (Eigen::Index j = 0; j < out.denominator.size() && j <= static_cast<Eigen::Index>(i); ++j)
      acc += out.denominator(j) * c[i - j];
    out.numerator(i) = acc;
  }
  return out;
}

template <typename Scalar>
BasicPade<Scalar> pade_from_taylor(const std::vector<Scalar>& c, unsigned l, unsigned m) {
  return pade_from_taylor(std::span<const Scalar>(c), l, m);
}

/// Maclaurin coefficients of p/q through `order`; q(0) = 1 makes the recursion exact.
template <typename Scalar>
std::vector<Scalar> expand(const BasicPade<Scalar>& r, unsigned order) {
  std::vector<Scalar> c(order + 1, Scalar(0));
  for (unsigned n = 0; n <= order; ++n) {
    Scalar acc = n < r.numerator.size() ? Scalar(r.numerator(n)) : Scalar(0);
    for (Eigen::Index j = 1; j < r.denominator.size() && j <= static_cast<Eigen::Index>(n); ++j)
      acc -= r.denominator(j) * c[n - j];
    c[n] = acc;
  }
  return c;
}

template <typename Scalar>
double evaluate(const BasicPade<Scalar>& r, double x) {
  auto horner = [x](const Vector<Scalar>& v) {
    double acc = 0.0;
    for (Eigen::Index i = v.size() - 1; i >= 0; --i) acc = acc * x + to_double(v(i));
    return acc;
  };
  return horner(r.numerator) / horner(r.denominator);
}

/// Limit of p(x)/q(x) as x -> +infinity from the highest nonzero coefficients of p and q.
template <typename Scalar>
double farfield_limit(const BasicPade<Scalar>& r) {
  auto degree = [](const Vector<Scalar>& v) {
    Eigen::Index d = v.size() - 1;
    while (d >= 0 && is_zero(v(d))) --d;
    return d;
  };
  const Eigen::Index dp = degree(r.numerator);
  const Eigen::Index dq = degree(r.denominator);
  if (dq < 0) {
    if (dp < 0) throw std::invalid_argument("invalid approximant: numerator and denominator vanish");
    throw std::invalid_argument("invalid approximant: denominator vanishes");
  }
  if (dp < 0 || dp < dq) return 0.0;
  const double ratio = to_double(Scalar(r.numerator(dp) / r.denominator(dq)));
  if (dp == dq) return ratio;
  return ratio > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

struct Bracket {
  double lo;
  double hi;
};

/// Root of the far-field closure function phi(B).
struct ClosureRoot {
  double b;
  double numerator_lead;    ///< phi at the root
  double denominator_lead;  ///< q_L at the root (q_0 = 1 for a polynomial approximant)
};

struct ClosureResult {
  std::vector<ClosureRoot> roots;  ///< ascending in b
  std::size_t preferred = 0;
  unsigned order = 0;
  Bracket bracket{};

  const ClosureRoot& best() const { return roots.at(preferred); }
};

using SeriesFactory = std::function<std::vector<Rational>(const Rational& b)>;

inline constexpr double kClosureScanStep = 0.05;
inline constexpr double kClosureTolerance = 1e-12;
inline constexpr double kSpuriousPoleTolerance = 1e-9;

/// phi(B): the numerator coefficient p_L of the [L/L] approximant of make_series(B), whose vanishing
/// sends the approximant to 0 as eta -> infinity. When the series makes the Toeplitz system
/// homogeneous the approximant is a polynomial and phi is its constant term p_0 instead; such a
/// root is kept only if the whole numerator vanishes there.
double closure_function(const SeriesFactory& make_series, unsigned order, double b);

/// Scans the bracket in steps of kClosureScanStep, bisects every sign change of phi to a width of
/// kClosureTolerance and drops pole crossings. Throws ClosureError when no root is found and
/// when every root sits on a vanishing q_L (spurious pole).
ClosureResult solve_free_parameter(const SeriesFactory& make_series, unsigned order, Bracket bracket);

}  // namespace marangoni
