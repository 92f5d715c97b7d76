#include "ezl/bernoulli.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <mutex>

namespace ezl {

namespace {

using Rational = boost::multiprecision::mpq_rational;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// b_n = B_n / n!, from sum_{j=0}^{n} b_j / (n+1-j)! = 0 for n >= 1.
const std::vector<Rational>& scaled_rationals(int n_max) {
  static std::vector<Rational> b{Rational(1)};
  static std::vector<Rational> inv_fact{Rational(1)};
  while (static_cast<int>(inv_fact.size()) <= n_max + 2) {
    inv_fact.push_back(inv_fact.back() / Rational(static_cast<long>(inv_fact.size())));
  }
  while (static_cast<int>(b.size()) <= n_max) {
    const int n = static_cast<int>(b.size());
    Rational sum(0);
    for (int j = 0; j < n; ++j) {
      if (j >= 3 && j % 2 == 1) {
        continue;
      }
      sum += b[j] * inv_fact[n + 1 - j];
    }
    b.push_back((n >= 3 && n % 2 == 1) ? Rational(0) : Rational(-sum));
  }
  return b;
}

Real to_real(const Rational& q) {
  Real out;
  mpfr_set_q(out.backend().data(), q.backend().data(), MPFR_RNDN);
  return out;
}

}  // namespace

const std::vector<Real>& bernoulli_scaled(int count) {
  static thread_local std::vector<Real> cache;
  static thread_local unsigned cached_precision = 0;
  const unsigned prec = Real::default_precision();
  if (prec != cached_precision) {
    cache.clear();
    cached_precision = prec;
  }
  if (static_cast<int>(cache.size()) < count) {
    const int grown = (count + 31) / 32 * 32;
    std::lock_guard<std::mutex> lock(cache_mutex());
    const auto& b = scaled_rationals(2 * grown);
    for (int k = static_cast<int>(cache.size()) + 1; k <= grown; ++k) {
      cache.push_back(to_real(b[2 * k]));
    }
  }
  return cache;
}

Real bernoulli(int n) {
  if (n < 0) {
    throw Error(ErrorKind::InvalidArgument, "Bernoulli index must be non-negative");
  }
  Rational value;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    value = scaled_rationals(n)[n];
  }
  for (int k = 2; k <= n; ++k) {
    value *= k;
  }
  return to_real(value);
}

}  // namespace ezl
