#pragma once

#include "ezl/jet.hpp"
#include "ezl/mellin_barnes.hpp"

#include <vector>

namespace ezl::detail {

// 2 Re(x), used when f(-t) = conj f(t).
inline Complex fold_conjugate(const Complex& z) { return Complex(z.re * 2, Real(0)); }

inline Jet fold_conjugate(Jet j) {
  for (int i = 0; i < j.size(); ++i) {
    j[i] = Complex(j[i].re * 2, Real(0));
  }
  return j;
}

template <class V>
struct LineOutcome {
  V value;
  Real error;
  int nodes = 0;
  Real extent;
  Real step;
};

// (1/2 pi) int f(t) dt over the real line for an integrand with exponential
// decay beyond |t| = guard. Trapezoid rule with step halving; nodes of coarser
// levels are reused.
template <class V, class F>
LineOutcome<V> integrate_line(F&& f, const Real& guard, bool symmetric, const Real& tol, const MBConfig& cfg) {
  const Real h0 = cfg.h0;
  const Real quiet = tol / 100;
  int nodes = 0;
  auto eval = [&](const Real& t) {
    ++nodes;
    return f(t);
  };

  V sum = eval(Real(0));
  auto march = [&](int sign) {
    long k = 1;
    int calm = 0;
    long last = 0;
    Real stop(-1);
    while (true) {
      Real t = h0 * k;
      if (t > cfg.t_max) {
        throw Error(ErrorKind::PrecisionUnreachable, "Mellin-Barnes integrand does not decay within the line limit");
      }
      V v = eval(t * sign);
      const bool small = magnitude(v) * h0 < quiet;
      sum += symmetric ? fold_conjugate(v) : v;
      calm = small ? calm + 1 : 0;
      if (stop < 0 && t > guard && calm >= 2) {
        stop = t + cfg.t_extra;
      }
      if (stop >= 0 && t >= stop) {
        last = k;
        break;
      }
      ++k;
    }
    return last;
  };
  const long k_hi = march(1);
  const long k_lo = symmetric ? k_hi : march(-1);

  Real h = h0;
  V total = sum * Complex(h);
  Real estimate(-1);
  for (int level = 1; level <= cfg.max_levels; ++level) {
    const long scale = 1L << level;
    h = h0 / scale;
    V fresh = sum * Complex(0);
    for (long j = 1; j < k_hi * scale; j += 2) {
      V v = eval(h * j);
      fresh += symmetric ? fold_conjugate(v) : v;
    }
    if (!symmetric) {
      for (long j = 1; j < k_lo * scale; j += 2) {
        fresh += eval(-(h * j));
      }
    }
    V next = total * Complex(Real(0.5));
    next += fresh * Complex(h);
    const Real diff = magnitude(next - total);
    const Real size = std::max(magnitude(next), tol);
    total = std::move(next);
    // The trapezoid error squares at each halving for analytic integrands.
    estimate = 10 * diff * diff / size;
    if (level >= 2 && diff < size / 10 && estimate <= tol / 10) {
      break;
    }
    if (level == cfg.max_levels) {
      throw Error(ErrorKind::PrecisionUnreachable, "Mellin-Barnes quadrature did not converge");
    }
  }
  const Real two_pi = 2 * pi();
  // Truncated tails on both sides, each bounded by the last quiet node.
  const Real tail = 2 * quiet / (pi() * h0) * 2;
  LineOutcome<V> out;
  out.value = total * Complex(Real(1) / two_pi);
  out.error = (estimate + tail) / two_pi;
  out.nodes = nodes;
  out.extent = h0 * std::max(k_hi, k_lo);
  out.step = h;
  return out;
}

// The Mellin-Barnes line integral for Complex or Jet (Taylor in s) arguments;
// the caller checks the region.
template <class T>
LineOutcome<T> line_integral(const std::vector<T>& s, int M, const Real& tol, const MBConfig& cfg);

}  // namespace ezl::detail
