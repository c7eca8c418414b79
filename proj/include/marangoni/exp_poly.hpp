#pragma once

#include "marangoni/rational.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace marangoni {

/// Total coefficient count above which ring operations report a warning.
inline constexpr std::size_t kTermCountWarning = 10000;

/// Sink for term-count warnings. Defaults to a line on std::clog.
inline std::function<void(std::size_t)>& term_count_warning_handler() {
  static std::function<void(std::size_t)> handler = [](std::size_t n) {
    std::clog << "warning: exp-polynomial grew to " << n << " coefficients\n";
  };
  return handler;
}

/**
 * Element of the ring of exp-polynomials
 *
 *     f(eta) = sum_k P_k(eta) * exp(-k * eta),   k = 0, 1, 2, ...
 *
 * stored as a map from the decay index k to the ascending coefficient list of P_k.
 * Values are kept canonical: no empty polynomial, no trailing zero coefficient.
 * Two values representing the same function therefore compare equal.
 */
template <typename Scalar>
class BasicExpPoly {
 public:
  using Polynomial = std::vector<Scalar>;
  using TermMap = std::map<unsigned, Polynomial>;

  BasicExpPoly() = default;
  explicit BasicExpPoly(TermMap terms) : terms_(std::move(terms)) { canonicalize(); }

  static BasicExpPoly constant(const Scalar& c) { return monomial(c, 0, 0); }

  /// c * eta^power * exp(-decay * eta)
  static BasicExpPoly monomial(const Scalar& c, unsigned power, unsigned decay) {
    TermMap t;
    Polynomial p(power + 1, Scalar(0));
    p[power] = c;
    t.emplace(decay, std::move(p));
    return BasicExpPoly(std::move(t));
  }

  /// Like monomial() but with the decay rate given as a rational; rejects rates that are not
  /// nonnegative integers, which lie outside the ring.
  static BasicExpPoly with_decay_rate(const Scalar& c, unsigned power, const Rational& rate) {
    if (rate.get_den() != 1 || sgn(rate) < 0 || !rate.get_num().fits_uint_p())
      throw std::invalid_argument("exp-polynomial decay rates must be nonnegative integers, got " +
                                  to_fraction_string(rate));
    return monomial(c, power, static_cast<unsigned>(rate.get_num().get_ui()));
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Number of stored coefficients, zeros inside a polynomial included.
  std::size_t coefficient_count() const {
    std::size_t n = 0;
    for (const auto& [k, p] : terms_) n += p.size();
    return n;
  }

  /// Coefficient of eta^power * exp(-decay * eta); zero when absent.
  Scalar coefficient(unsigned decay, unsigned power) const {
    auto it = terms_.find(decay);
    if (it == terms_.end() || power >= it->second.size()) return Scalar(0);
    return it->second[power];
  }

  friend bool operator==(const BasicExpPoly& a, const BasicExpPoly& b) { return a.terms_ == b.terms_; }

 private:
  void canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      auto& p = it->second;
      while (!p.empty() && marangoni::is_zero(p.back())) p.pop_back();
      it = p.empty() ? terms_.erase(it) : std::next(it);
    }
  }

  TermMap terms_;
};

using ExpPoly = BasicExpPoly<Rational>;

namespace detail {

template <typename Scalar>
void accumulate(std::vector<Scalar>& into, const std::vector<Scalar>& p, const Scalar& factor) {
  if (into.size() < p.size()) into.resize(p.size(), Scalar(0));
  for (std::size_t i = 0; i < p.size(); ++i) into[i] += factor * p[i];
}

template <typename Scalar>
void check_size(const BasicExpPoly<Scalar>& f) {
  if (auto n = f.coefficient_count(); n > kTermCountWarning) {
    if (auto& h = term_count_warning_handler()) h(n);
  }
}

/// Binomial coefficient as a Scalar.
template <typename Scalar>
Scalar binomial(unsigned n, unsigned r) {
  Scalar c(1);
  for (unsigned i = 1; i <= r; ++i) {
    c *= Scalar(n - r + i);
    c /= Scalar(i);
  }
  return c;
}

}  // namespace detail

template <typename Scalar>
BasicExpPoly<Scalar> scale(const BasicExpPoly<Scalar>& f, const std::type_identity_t<Scalar>& s) {
  if (is_zero(s)) return {};
  auto t = f.terms();
  for (auto& [k, p] : t)
    for (auto& c : p) c *= s;
  return BasicExpPoly<Scalar>(std::move(t));
}

template <typename Scalar>
BasicExpPoly<Scalar> add(const BasicExpPoly<Scalar>& f, const BasicExpPoly<Scalar>& g) {
  auto t = f.terms();
  for (const auto& [k, p] : g.terms()) detail::accumulate(t[k], p, Scalar(1));
  return BasicExpPoly<Scalar>(std::move(t));
}

template <typename Scalar>
BasicExpPoly<Scalar> subtract(const BasicExpPoly<Scalar>& f, const BasicExpPoly<Scalar>& g) {
  auto t = f.terms();
  for (const auto& [k, p] : g.terms()) detail::accumulate(t[k], p, Scalar(-1));
  return BasicExpPoly<Scalar>(std::move(t));
}

/// Pointwise product: decay indices add, polynomial parts convolve.
template <typename Scalar>
BasicExpPoly<Scalar> mul(const BasicExpPoly<Scalar>& f, const BasicExpPoly<Scalar>& g) {
  typename BasicExpPoly<Scalar>::TermMap t;
  for (const auto& [kf, pf] : f.terms()) {
    for (const auto& [kg, pg] : g.terms()) {
      auto& out = t[kf + kg];
      if (out.size() < pf.size() + pg.size() - 1) out.resize(pf.size() + pg.size() - 1, Scalar(0));
      for (std::size_t i = 0; i < pf.size(); ++i) {
        if (is_zero(pf[i])) continue;
        for (std::size_t j = 0; j < pg.size(); ++j) out[i + j] += pf[i] * pg[j];
      }
    }
  }
  BasicExpPoly<Scalar> r(std::move(t));
  detail::check_size(r);
  return r;
}

/// d/deta (eta^m e^{-k eta}) = (m eta^{m-1} - k eta^m) e^{-k eta}
template <typename Scalar>
BasicExpPoly<Scalar> differentiate(const BasicExpPoly<Scalar>& f) {
  typename BasicExpPoly<Scalar>::TermMap t;
  for (const auto& [k, p] : f.terms()) {
    std::vector<Scalar> d(p.size(), Scalar(0));
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (m > 0) d[m - 1] += Scalar(static_cast<unsigned long>(m)) * p[m];
      if (k > 0) d[m] -= Scalar(k) * p[m];
    }
    t.emplace(k, std::move(d));
  }
  return BasicExpPoly<Scalar>(std::move(t));
}

template <typename Scalar>
BasicExpPoly<Scalar> differentiate(const BasicExpPoly<Scalar>& f, unsigned order) {
  BasicExpPoly<Scalar> d = f;
  for (unsigned i = 0; i < order; ++i) d = differentiate(d);
  return d;
}

/// eta -> integral over [0, eta] of tau^n f(tau) d tau, in closed form.
///   k = 0:  eta^{n+1} / (n+1)
///   k > 0:  n!/k^{n+1} * (1 - e^{-k eta} sum_{r<=n} (k eta)^r / r!)
template <typename Scalar>
BasicExpPoly<Scalar> integrate_moment(const BasicExpPoly<Scalar>& f, unsigned n) {
  typename BasicExpPoly<Scalar>::TermMap t;
  for (const auto& [k, p] : f.terms()) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (is_zero(p[j])) continue;
      const unsigned power = n + static_cast<unsigned>(j);
      if (k == 0) {
        auto& poly = t[0];
        if (poly.size() < power + 2) poly.resize(power + 2, Scalar(0));
        poly[power + 1] += p[j] / Scalar(power + 1);
        continue;
      }
      // n!/k^{n+1}, then the partial exponential series times e^{-k eta}
      Scalar lead(1);
      for (unsigned i = 1; i <= power; ++i) lead *= Scalar(i);
      for (unsigned i = 0; i <= power; ++i) lead /= Scalar(k);
      lead *= p[j];
      detail::accumulate(t[0], std::vector<Scalar>{Scalar(1)}, lead);
      std::vector<Scalar> series(power + 1, Scalar(0));
      Scalar term(1);
      for (unsigned r = 0; r <= power; ++r) {
        if (r > 0) {
          term *= Scalar(k);
          term /= Scalar(r);
        }
        series[r] = -lead * term;
      }
      detail::accumulate(t[k], series, Scalar(1));
    }
  }
  return BasicExpPoly<Scalar>(std::move(t));
}

/**
 * Closed form of eta -> integral_0^eta s * (tau - eta)^p * f(tau) d tau.
 *
 * The kernel is expanded by the binomial theorem,
 *   (tau - eta)^p = sum_i C(p, i) tau^i (-eta)^{p - i},
 * so the result is a finite combination of moments of f times powers of eta.
 */
template <typename Scalar>
BasicExpPoly<Scalar> integrate_kernel(const BasicExpPoly<Scalar>& f, unsigned p,
                                      const std::type_identity_t<Scalar>& s) {
  BasicExpPoly<Scalar> result;
  if (f.is_zero() || is_zero(s)) return result;
  for (unsigned i = 0; i <= p; ++i) {
    Scalar c = s * detail::binomial<Scalar>(p, i);
    if ((p - i) % 2 == 1) c = -c;
    auto moment = integrate_moment(f, i);
    result = add(result, mul(BasicExpPoly<Scalar>::monomial(c, p - i, 0), moment));
  }
  detail::check_size(result);
  return result;
}

template <typename Scalar>
double eval(const BasicExpPoly<Scalar>& f, double eta) {
  if (eta == 0.0) {
    Scalar at_zero(0);
    for (const auto& [k, p] : f.terms()) at_zero += p.front();
    return to_double(at_zero);
  }
  double sum = 0.0;
  for (const auto& [k, p] : f.terms()) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * eta + to_double(*it);
    sum += acc * std::exp(-static_cast<double>(k) * eta);
  }
  return sum;
}

/// Exact Maclaurin coefficients c_0..c_order, expanding e^{-k eta} = sum_j (-k)^j eta^j / j!.
template <typename Scalar>
std::vector<Scalar> taylor(const BasicExpPoly<Scalar>& f, unsigned order) {
  std::vector<Scalar> c(order + 1, Scalar(0));
  for (const auto& [k, p] : f.terms()) {
    std::vector<Scalar> ser(order + 1, Scalar(0));
    Scalar term(1);
    for (unsigned j = 0; j <= order; ++j) {
      if (j > 0) {
        term *= Scalar(-static_cast<long>(k));
        term /= Scalar(j);
      }
      ser[j] = term;
    }
    for (std::size_t m = 0; m < p.size() && m <= order; ++m) {
      if (is_zero(p[m])) continue;
      for (std::size_t j = 0; m + j <= order; ++j) c[m + j] += p[m] * ser[j];
    }
  }
  return c;
}

template <typename Scalar>
BasicExpPoly<Scalar> operator+(const BasicExpPoly<Scalar>& f, const BasicExpPoly<Scalar>& g) {
  return add(f, g);
}
template <typename Scalar>
BasicExpPoly<Scalar> operator-(const BasicExpPoly<Scalar>& f, const BasicExpPoly<Scalar>& g) {
  return subtract(f, g);
}
template <typename Scalar>
BasicExpPoly<Scalar> operator-(const BasicExpPoly<Scalar>& f) {
  return scale(f, Scalar(-1));
}
template <typename Scalar>
BasicExpPoly<Scalar> operator*(const BasicExpPoly<Scalar>& f, const BasicExpPoly<Scalar>& g) {
  return mul(f, g);
}
template <typename Scalar>
BasicExpPoly<Scalar> operator*(const std::type_identity_t<Scalar>& s, const BasicExpPoly<Scalar>& f) {
  return scale(f, s);
}

}  // namespace marangoni
