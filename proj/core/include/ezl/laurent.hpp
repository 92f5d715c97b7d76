#pragma once

#include "ezl/laurent_expansion.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ezl {

struct ExpansionOptions {
  /// Largest accepted truncation order.
  int order_cap = 6;
};

/// Expansion of zeta_r at m in (Z>=1)^r by the stuffle plan: interior
/// factors by Taylor series, factors at (1,...,1) by the multiple Stieltjes
/// expansion, products collected over their polar factors.
LaurentExpansion expand_positive(const IntPoint& m, int order, const PrecisionContext& ctx = PrecisionContext(),
                                 const ExpansionOptions& opt = {});

/// expand_positive or expand_nonpositive, by the center.
LaurentExpansion expand_at(const IntPoint& m, int order, const PrecisionContext& ctx = PrecisionContext(),
                           const ExpansionOptions& opt = {});

/// gamma_(n_1..n_r): near (1,...,1),
/// zeta_r(s) = prod_{k=2}^r 1/(s(k,r) - (r-k+1)) * (1/(s(1,r) - r) + sum_n gamma_n (s-1)^n).
Complex multiple_stieltjes(const MultiIndex& n, const PrecisionContext& ctx = PrecisionContext(),
                           const ExpansionOptions& opt = {});

/// All gamma_n with |n| <= total in depth r, graded then lexicographic.
std::vector<std::pair<MultiIndex, Complex>> multiple_stieltjes_table(int r, int total,
                                                                     const PrecisionContext& ctx = PrecisionContext(),
                                                                     const ExpansionOptions& opt = {});

/// gamma_(n1, n2) for n1 = 0..count-1 (depth 2). No order cap.
std::vector<Complex> stieltjes_slice(int n2, int count, const PrecisionContext& ctx = PrecisionContext());

/// A_{n2}(s1) = (-1)^{n2} / (s1-1)^{n2+1} + sum_{n1 < count} gamma_(n1,n2) (s1-1)^{n1}.
Complex stieltjes_a(int n2, const Complex& s1, int count, const PrecisionContext& ctx = PrecisionContext());

/// gamma_2(s1) = zeta(s1) gamma - zeta_2(1, s1) - zeta(s1 + 1), Re s1 > 1.
Complex gamma2_euler(const Complex& s1, const PrecisionContext& ctx = PrecisionContext());

/// One-variable expansion of zeta_r with every coordinate equal to 1 in m
/// replaced by s, the others fixed.
struct RestrictedExpansion {
  IntPoint center;
  /// 1-based indices set equal to s.
  std::vector<int> restricted;
  /// Power of (s-1) carried by coefficients[0].
  int lowest = 0;
  std::vector<Complex> coefficients;

  int pole_order() const { return lowest < 0 ? -lowest : 0; }
  /// Coefficient of (s-1)^power; zero outside the stored range.
  Complex coefficient(int power) const;
  Complex evaluate(const Complex& s) const;
};

/// Coefficients of (s-1)^k for k <= order.
RestrictedExpansion restricted_expand(const IntPoint& m, int order, const PrecisionContext& ctx = PrecisionContext(),
                                      const ExpansionOptions& opt = {});

/// sum_{|n| = total} gamma_n in depth r, from the multiple Stieltjes table and
/// from the diagonal expansion; ConsistencyFailure when they disagree.
Complex stieltjes_sum(int total, int r, const PrecisionContext& ctx = PrecisionContext(),
                      const ExpansionOptions& opt = {});

struct PoleCheckReport {
  bool bounded = false;
  /// |G| per direction and radius.
  std::vector<std::vector<Real>> sizes;
};

/// Numeric check that zeta_r minus its leading polar fraction, times the
/// remaining polar factors, stays bounded as s -> m along seeded random
/// directions at radii 1e-2, 1e-3, 1e-4.
PoleCheckReport lemma1_pole_report(const IntPoint& m, const PrecisionContext& ctx = PrecisionContext(),
                                   std::uint32_t seed = 1, int directions = 5);
bool lemma1_pole_check(const IntPoint& m, const PrecisionContext& ctx = PrecisionContext(), std::uint32_t seed = 1);

}  // namespace ezl
