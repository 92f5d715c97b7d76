#pragma once

#include "ezl/bernoulli.hpp"
#include "ezl/jet.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace ezl {

namespace detail {

inline int stirling_radius() {
  // e^{-2 pi R} below the working precision.
  const double digits = static_cast<double>(Real::default_precision());
  return static_cast<int>(std::ceil(0.4 * digits)) + 2;
}

inline Real real_part(const Complex& z) { return z.re; }
inline Real real_part(const Jet& j) { return j.constant().re; }

inline Real modulus(const Complex& z) { return abs(z); }
inline Real modulus(const Jet& j) { return abs(j.constant()); }

// B_{2k} / (2k (2k-1)) = b_k * (2k-2)!, cached per working precision; index 0 holds log(2 pi) / 2.
inline const Real& stirling_coefficient(int k) {
  thread_local std::map<unsigned, std::vector<Real>> cache;
  std::vector<Real>& coef = cache[Real::default_precision()];
  if (coef.empty()) {
    coef.push_back(Real(0.5) * log(Real(2) * pi()));
  }
  while (static_cast<int>(coef.size()) <= k) {
    const int j = static_cast<int>(coef.size());
    coef.push_back(bernoulli_scaled(j)[j - 1] * factorial_real(2 * j - 2));
  }
  return coef[k];
}

// log Gamma(w) by the Stirling series; needs |w| >= stirling_radius().
template <class T>
T log_gamma_stirling(const T& w) {
  const Real half(0.5);
  T result = (w - Complex(half)) * log(w) - w;
  result += Complex(stirling_coefficient(0));
  const T inv = reciprocal(w);
  const T inv2 = inv * inv;
  T power = inv;
  const Real target = pow(Real(10), -static_cast<long>(Real::default_precision()) - 2);
  Real prev = -1;
  for (int k = 1; k <= 200; ++k) {
    T term = power * stirling_coefficient(k);
    Real mag = magnitude(term);
    result += term;
    if (mag < target * (1 + magnitude(result))) {
      break;
    }
    if (prev >= 0 && mag > prev) {
      break;
    }
    prev = mag;
    power *= inv2;
  }
  return result;
}

}  // namespace detail

/// Gamma function for Complex or Jet arguments: Stirling series after an
/// upward shift, reflection for Re w < 1/2.
template <class T>
T gamma(const T& w) {
  long k = 0;
  if (is_integer(constant(w), k) && k <= 0) {
    throw Error(ErrorKind::OnSingularHyperplane, "Gamma pole at a non-positive integer");
  }
  if (detail::real_part(w) < Real(0.5)) {
    // Gamma(w) = pi / (sin(pi w) Gamma(1 - w))
    T one_minus = Complex(1) - w;
    T s = sin(w * pi());
    return reciprocal(s * gamma(one_minus)) * Complex(pi());
  }
  const int radius = detail::stirling_radius();
  T shifted = w;
  T product = w * Complex(0) + Complex(1);
  int n = 0;
  while (detail::modulus(shifted) < Real(radius)) {
    product *= shifted;
    shifted += Complex(1);
    ++n;
  }
  T result = exp(detail::log_gamma_stirling(shifted));
  if (n > 0) {
    result = result * reciprocal(product);
  }
  return result;
}

/// 1/Gamma(w); exact zero at non-positive integers.
template <class T>
T rgamma(const T& w) {
  if (detail::real_part(w) < Real(0.5)) {
    // 1/Gamma(w) = sin(pi w) Gamma(1 - w) / pi
    T one_minus = Complex(1) - w;
    long k = 0;
    T s = sin(w * pi());
    if (is_integer(constant(w), k)) {
      // sin(pi k) is exactly zero.
      s[0] = Complex(0);
    }
    return s * gamma(one_minus) * Complex(Real(1) / pi());
  }
  return reciprocal(gamma(w));
}

template <>
inline Complex rgamma<Complex>(const Complex& w) {
  long k = 0;
  if (is_integer(w, k) && k <= 0) {
    return Complex(0);
  }
  if (w.re < Real(0.5)) {
    return sin(w * pi()) * gamma(Complex(1) - w) * Complex(Real(1) / pi());
  }
  return reciprocal(gamma(w));
}

}  // namespace ezl
