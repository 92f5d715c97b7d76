#include "ezl/zeta.hpp"

#include "ezl/contour.hpp"
#include "ezl/em_series.hpp"

namespace ezl {

namespace detail {

Complex zeta_raw(const Complex& s, const Real& tol) {
  if (s == Complex(1)) {
    throw Error(ErrorKind::PoleAt1, "zeta has a pole at s = 1");
  }
  return em_zeta(ComplexTraits{}, std::vector<Complex>{s}, tol).value;
}

std::vector<Complex> zeta_taylor_raw(const Complex& s, int order, const Real& tol) {
  if (s == Complex(1)) {
    throw Error(ErrorKind::PoleAt1, "zeta has a pole at s = 1");
  }
  if (order == 0) {
    return {zeta_raw(s, tol)};
  }
  if (s.re > 1) {
    auto layout = jet_layout(1, order);
    Jet j = em_zeta(JetTraits{}, std::vector<Jet>{Jet::variable(layout, 0, s)}, tol).value;
    return j.coefficients();
  }
  // Contour on zeta(w) - 1/(w-1), which is entire; the polar part is added
  // back exactly.
  auto regular = [&](const Complex& w) { return zeta_raw(w, tol) - reciprocal(w - Complex(1)); };
  auto res = contour_coefficients(regular, s, Real(0.25), 0, order, tol * 10);
  std::vector<Complex> out = std::move(res.coefficients);
  const Complex d = s - Complex(1);
  Complex p = reciprocal(d);
  for (int k = 0; k <= order; ++k) {
    // (s-1)^{-1} expanded at s: sum_k (-1)^k (w-s)^k / d^{k+1}
    out[k] += (k % 2 == 0) ? p : -p;
    p = p / d;
  }
  return out;
}

std::vector<Real> stieltjes_raw(int n_max, const Real& tol) {
  auto layout = jet_layout(1, n_max + 1);
  PoleTraits traits{std::make_shared<LinearFormRegistry>(1)};
  PoleJet z = em_zeta(traits, std::vector<Jet>{Jet::variable(layout, 0, Complex(1))}, tol).value;
  Jet cleared = z.times_denominators({1});
  std::vector<Real> out;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(cleared[n + 1].re);
  }
  return out;
}

}  // namespace detail

Complex zeta(const Complex& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return detail::zeta_raw(rescaled(s), ctx.inner_tol());
}

std::vector<Complex> zeta_taylor(const Complex& s, int order, const PrecisionContext& ctx) {
  if (order < 0) {
    throw Error(ErrorKind::InvalidArgument, "order must be non-negative");
  }
  PrecisionScope scope(ctx);
  return detail::zeta_taylor_raw(rescaled(s), order, ctx.inner_tol());
}

Complex zeta_deriv(int n, const Complex& s, const PrecisionContext& ctx) {
  if (n < 0) {
    throw Error(ErrorKind::InvalidArgument, "derivative order must be non-negative");
  }
  if (n == 0) {
    return zeta(s, ctx);
  }
  PrecisionScope scope(ctx);
  auto coef = detail::zeta_taylor_raw(rescaled(s), n, ctx.inner_tol());
  return coef[n] * factorial_real(n);
}

std::vector<Real> stieltjes_table(int n_max, const PrecisionContext& ctx) {
  if (n_max < 0) {
    throw Error(ErrorKind::InvalidArgument, "order must be non-negative");
  }
  PrecisionScope scope(ctx);
  return detail::stieltjes_raw(n_max, ctx.inner_tol());
}

Real stieltjes(int n, const PrecisionContext& ctx) { return stieltjes_table(n, ctx)[n]; }

Real stieltjes_classical(int n, const PrecisionContext& ctx) {
  Real g = stieltjes(n, ctx);
  PrecisionScope scope(ctx);
  Real out = g * factorial_real(n);
  return (n % 2 == 0) ? out : Real(-out);
}

Complex ZetaLaurent1D::evaluate(const Complex& s) const {
  const Complex d = s - Complex(center);
  Complex sum(0);
  for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k) {
    sum = sum * d + coefficients[k];
  }
  if (has_pole) {
    sum += reciprocal(d);
  }
  return sum;
}

ZetaLaurent1D laurent_at(int m, int order, const PrecisionContext& ctx) {
  if (order < 0) {
    throw Error(ErrorKind::InvalidArgument, "order must be non-negative");
  }
  ZetaLaurent1D out;
  out.center = m;
  out.has_pole = (m == 1);
  if (m == 1) {
    for (auto& g : stieltjes_table(order, ctx)) {
      out.coefficients.emplace_back(g);
    }
  } else {
    out.coefficients = zeta_taylor(Complex(m), order, ctx);
  }
  return out;
}

}  // namespace ezl
