#pragma once

#include "ezl/numeric.hpp"

namespace ezl {

/// The tube Re s(j,r) > r-j+1, 1 <= j <= r, with s(j,r) = s_j + ... + s_r.
struct DomainDescriptor {
  int depth = 1;

  bool contains(const ComplexPoint& s) const;
};

/// True iff s lies in the absolute-convergence domain of zeta_r, r = s.size().
bool in_domain(const ComplexPoint& s);

struct SeriesOptions {
  /// Explicit number of summed terms per index; 0 chooses it from the precision.
  int n = 0;
  /// Upper limit on composite terms (n times depth).
  long long term_budget = 10'000'000;
};

struct SeriesResult {
  Complex value;
  /// Estimated size of everything not included.
  Real tail_bound;
  int n = 0;
};

/// zeta_r(s) inside the convergence domain.
Complex ez_value(const ComplexPoint& s, const PrecisionContext& ctx = PrecisionContext());
SeriesResult ez_value_detailed(const ComplexPoint& s, const PrecisionContext& ctx, const SeriesOptions& opt = {});

/// Partial derivative d^{l_1}...d^{l_r} zeta_r at q inside the domain.
Complex ez_deriv(const MultiIndex& l, const ComplexPoint& q, const PrecisionContext& ctx = PrecisionContext());
SeriesResult ez_deriv_detailed(const MultiIndex& l, const ComplexPoint& q, const PrecisionContext& ctx,
                               const SeriesOptions& opt = {});

}  // namespace ezl
