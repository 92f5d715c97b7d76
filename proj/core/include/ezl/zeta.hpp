#pragma once

#include "ezl/numeric.hpp"

#include <vector>

namespace ezl {

/// Riemann zeta on C \ {1}.
Complex zeta(const Complex& s, const PrecisionContext& ctx = PrecisionContext());

/// n-th derivative of zeta at s != 1.
Complex zeta_deriv(int n, const Complex& s, const PrecisionContext& ctx = PrecisionContext());

/// Taylor coefficients zeta^{(k)}(s)/k!, k = 0..order, at s != 1.
std::vector<Complex> zeta_taylor(const Complex& s, int order, const PrecisionContext& ctx = PrecisionContext());

/// gamma_n: the coefficient of (s-1)^n in zeta(s) - 1/(s-1).
Real stieltjes(int n, const PrecisionContext& ctx = PrecisionContext());

/// gamma_0 .. gamma_{n_max}.
std::vector<Real> stieltjes_table(int n_max, const PrecisionContext& ctx = PrecisionContext());

/// The more common normalisation (-1)^n n! gamma_n.
Real stieltjes_classical(int n, const PrecisionContext& ctx = PrecisionContext());

/// One-variable expansion of zeta at an integer center: Taylor
/// coefficients, or at m = 1 the pole 1/(s-1) plus gamma_n.
struct ZetaLaurent1D {
  int center = 0;
  bool has_pole = false;
  std::vector<Complex> coefficients;

  /// Truncated expansion at s.
  Complex evaluate(const Complex& s) const;
};

ZetaLaurent1D laurent_at(int m, int order, const PrecisionContext& ctx = PrecisionContext());

namespace detail {

// Versions that assume an active PrecisionScope; `tol` is absolute.
Complex zeta_raw(const Complex& s, const Real& tol);
std::vector<Complex> zeta_taylor_raw(const Complex& s, int order, const Real& tol);
std::vector<Real> stieltjes_raw(int n_max, const Real& tol);

}  // namespace detail

}  // namespace ezl
