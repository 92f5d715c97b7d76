#pragma once

#include "ezl/bernoulli.hpp"
#include "ezl/pole_jet.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ezl {

/// Scalar policies for the Euler-Maclaurin engine. Arg is the type of the
/// arguments s_j, Value the type of the result; inverse() is the only place
/// a division by an argument-dependent quantity happens.
struct ComplexTraits {
  using Arg = Complex;
  using Value = Complex;
  Value lift(const Arg& a) const { return a; }
  Arg one(const Arg&) const { return Complex(1); }
  Value inverse(const Arg& d) const {
    if (d.is_zero()) {
      throw Error(ErrorKind::OnSingularHyperplane, "argument on a polar hyperplane");
    }
    return reciprocal(d);
  }
};

struct JetTraits {
  using Arg = Jet;
  using Value = Jet;
  Value lift(const Arg& a) const { return a; }
  Arg one(const Arg& a) const { return Jet(a.layout(), Complex(1)); }
  Value inverse(const Arg& d) const {
    if (d.constant().is_zero()) {
      throw Error(ErrorKind::OnSingularHyperplane, "expansion center on a polar hyperplane");
    }
    return reciprocal(d);
  }
};

/// Polar factors with vanishing constant term stay symbolic.
struct PoleTraits {
  using Arg = Jet;
  using Value = PoleJet;
  LinearFormRegistryPtr registry;
  Value lift(const Arg& a) const { return PoleJet(registry, a); }
  Arg one(const Arg& a) const { return Jet(a.layout(), Complex(1)); }
  Value inverse(const Arg& d) const { return PoleJet(registry, Jet(d.layout(), Complex(1))).divided_by(d); }
};

template <class V>
struct EmOutcome {
  V value;
  Real error;
  int n = 0;
};

struct EmOptions {
  /// Head length; 0 picks it from the precision and argument size.
  int n = 0;
  int max_n = 20000;
};

namespace detail {

struct EmDiverged {};

inline std::vector<int> smallest_prime_factors(int n) {
  std::vector<int> spf(n + 1, 0);
  for (int i = 2; i <= n; ++i) {
    if (spf[i] == 0) {
      for (int j = i; j <= n; j += i) {
        if (spf[j] == 0) {
          spf[j] = i;
        }
      }
    }
  }
  return spf;
}

inline Real arg_size(const Complex& z) { return abs(z); }
inline Real arg_size(const Jet& j) { return abs(j.constant()); }

template <class Traits>
class EmSeries {
 public:
  using Arg = typename Traits::Arg;
  using Value = typename Traits::Value;

  EmSeries(const Traits& traits, const std::vector<Arg>& s) : tr_(traits), s_(s) {}

  EmOutcome<Value> evaluate(int n, const Real& tol) {
    n_ = n;
    n_real_ = Real(n);
    compute_head();
    const int r = static_cast<int>(s_.size());
    Real err(0);
    Value tail_value = tail(r, s_[r - 1], ns_[r - 1], tol, err);
    Value total = tr_.lift(head_[r]);
    total += tail_value;
    return {std::move(total), err, n};
  }

 private:
  static constexpr int kMaxBernoulli = 400;

  void compute_head() {
    const int r = static_cast<int>(s_.size());
    const auto spf = smallest_prime_factors(n_);
    const Arg one = tr_.one(s_[0]);
    std::vector<std::vector<Arg>> pw(r, std::vector<Arg>(n_ + 1, one));
    for (int j = 0; j < r; ++j) {
      const Arg neg = -s_[j];
      for (int k = 2; k <= n_; ++k) {
        const int p = spf[k];
        pw[j][k] = (p == k) ? pow(k, neg) : pw[j][p] * pw[j][k / p];
      }
    }
    head_.assign(r + 1, one * Complex(0));
    head_[0] = one;
    for (int k = 1; k <= n_; ++k) {
      for (int j = std::min(k, r); j >= 1; --j) {
        head_[j] += pw[j - 1][k] * head_[j - 1];
      }
    }
    ns_.clear();
    for (int j = 0; j < r; ++j) {
      ns_.push_back(pw[j][n_]);
    }
  }

  // N^{-e} for the exponent shifts e = -1, 0, 1, 3, 5, ...
  Real shift_weight(int e) const {
    if (e == -1) {
      return n_real_;
    }
    if (e == 0) {
      return Real(1);
    }
    return pow(n_real_, -e);
  }

  // Sum over the last k indices above N, with prefix s_1..s_{k-1} and last
  // argument u; nu = N^{-u}.
  Value tail(int k, const Arg& u, const Arg& nu, const Real& tol, Real& err) {
    const Real nu_mag = magnitude(nu);
    const Real tiny = pow(Real(10), -static_cast<long>(4 * Real::default_precision()));
    const bool leaf = (k == 1);
    const Arg* prefix_head = leaf ? nullptr : &head_[k - 1];

    auto branch = [&](int e, const Real& weight, const Real& child_tol, Real& child_err) {
      Arg base = nu * weight;
      if (leaf) {
        return tr_.lift(base);
      }
      Value x = tr_.lift(*prefix_head * base);
      Arg next_u = s_[k - 2] + u + Complex(e);
      Arg next_nu = ns_[k - 2] * base;
      x += tail(k - 1, next_u, next_nu, child_tol, child_err);
      return x;
    };

    // i = 0: c_0 = 1/(u - 1), e = -1.
    Value c0 = tr_.inverse(u - Complex(1));
    Real w0 = magnitude(c0) * n_real_;
    Real child_err(0);
    Value result = branch(-1, n_real_, tol / (8 * std::max(magnitude(c0), tiny)), child_err);
    result *= c0;
    err += child_err * magnitude(c0);
    Real scale = magnitude(result) / std::max(w0 * nu_mag, tiny);

    // i = 1: c_1 = -1/2, e = 0.
    {
      Real w1(0.5);
      Real cerr(0);
      Value x = branch(0, Real(1), tol / 4, cerr);
      x *= Complex(Real(-0.5));
      err += cerr / 2;
      scale = std::max(scale, magnitude(x) / std::max(w1 * nu_mag, tiny));
      result += x;
    }

    // i = m + 1: c = B_{2m}/(2m)! (u)_{2m-1}, e = 2m - 1.
    Arg poch = u;
    Real prev_w(-1);
    for (int m = 1;; ++m) {
      if (m > kMaxBernoulli) {
        throw EmDiverged{};
      }
      const int e = 2 * m - 1;
      Arg c = poch * bernoulli_scaled(m)[m - 1];
      const Real weight = shift_weight(e);
      const Real w = magnitude(c) * weight;
      const Real predicted = w * nu_mag * std::max(scale, Real(1));
      if (predicted < tol / 8) {
        err += predicted;
        break;
      }
      if (prev_w >= 0 && w > prev_w && m > 2) {
        throw EmDiverged{};
      }
      prev_w = w;
      Real cerr(0);
      Value x = branch(e, weight, tol / (8 * std::max(magnitude(c), tiny)), cerr);
      x *= c;
      err += cerr * magnitude(c);
      scale = std::max(scale, magnitude(x) / std::max(w * nu_mag, tiny));
      result += x;
      poch *= (u + Complex(2 * m - 1)) * (u + Complex(2 * m));
    }
    return result;
  }

  Traits tr_;
  std::vector<Arg> s_;
  int n_ = 0;
  Real n_real_;
  std::vector<Arg> head_;
  std::vector<Arg> ns_;
};

}  // namespace detail

/// zeta_r(s) by Euler-Maclaurin continuation of the nested series: the
/// partial sums up to N plus the tail expanded level by level. Valid off the
/// polar hyperplanes; `tol` is absolute.
template <class Traits>
EmOutcome<typename Traits::Value> em_zeta(const Traits& traits, const std::vector<typename Traits::Arg>& s,
                                          const Real& tol, const EmOptions& opt = {}) {
  if (s.empty()) {
    throw Error(ErrorKind::InvalidArgument, "depth must be at least 1");
  }
  Real size(0);
  for (const auto& x : s) {
    size += detail::arg_size(x);
  }
  const double digits = static_cast<double>(Real::default_precision());
  const double extent = size.convert_to<double>() + static_cast<double>(s.size());
  int n = opt.n;
  const bool fixed = (n > 0);
  if (!fixed) {
    n = std::max(16, static_cast<int>(std::ceil((digits * 2.3026 + extent + 10) / 3.14159265358979)));
  }
  detail::EmSeries<Traits> engine(traits, s);
  while (true) {
    try {
      return engine.evaluate(n, tol);
    } catch (const detail::EmDiverged&) {
      if (fixed || n >= opt.max_n) {
        throw Error(ErrorKind::PrecisionUnreachable, "Euler-Maclaurin tail did not reach the tolerance");
      }
      n = std::min(opt.max_n, static_cast<int>(std::ceil(n * 1.6)));
    }
  }
}

}  // namespace ezl
