#pragma once

#include "ezl/numeric.hpp"

#include <string>
#include <vector>

namespace ezl {

/// One displayed term of a near-point formula, evaluated at the offsets.
struct NearPointTerm {
  std::string label;
  Complex value;
  /// Polar factor the term carries, e.g. "1/(eps1+eps2)"; empty when regular.
  std::string pole;
};

struct NearPointValue {
  std::vector<NearPointTerm> terms;
  /// Sum of the terms: the formula with its O-terms dropped.
  Complex finite_part;
  /// The dropped remainder, e.g. {"O(|eps2|)", "O(|eps1+eps2|)"}.
  std::vector<std::string> error_terms;

  std::vector<NearPointTerm> principal() const;
  std::string error_order() const;
};

/// zeta_2(m1+eps1, m2+eps2) for m2 <= 0, with the integral term dropped:
/// 1/(m2-1+eps2) zeta(m1+m2-1+eps1+eps2)
///   + sum_{k=0}^{M_2(m)} binom(-m2-eps2, k) zeta(-k) zeta(m1+m2+k+eps1+eps2) + O(|eps2|).
NearPointValue zeta2_near(const IntPoint& m, const ComplexPoint& eps, const PrecisionContext& ctx = PrecisionContext());

/// The three closed-form groups for m1 <= 0, m2 <= 0:
/// zeta(m1+m2-1)/(m2-1), the terms k = 0..-m2, and
/// (-1)^{1-m1-m2}/(1-m1-m2)! (m2+eps2)...(-m1+eps2)/(eps1+eps2) zeta(m1+m2-1).
NearPointValue zeta2_corollary(const IntPoint& m, const ComplexPoint& eps,
                               const PrecisionContext& ctx = PrecisionContext());

/// Summand k of the middle group: (-1)^k/k! m2(m2+1)...(m2+k-1) zeta(-k) zeta(m1+m2+k).
/// Exactly zero once the product contains 0.
Complex zeta2_corollary_summand(const IntPoint& m, int k, const PrecisionContext& ctx = PrecisionContext());

struct NearPointOutcome {
  bool indeterminate = false;
  /// Why no value is given, when indeterminate.
  std::string reason;
  NearPointValue value;
};

/// zeta_3 near m: for m3 <= 0 the recursion with its integral term dropped;
/// for m2 <= 0 < m3 - 1 the harmonic product that moves s2 last.
/// Indeterminate for m2 <= 0, m3 = 1; UnsupportedCenter elsewhere.
NearPointOutcome zeta3_near(const IntPoint& m, const ComplexPoint& eps, const PrecisionContext& ctx = PrecisionContext());

}  // namespace ezl
