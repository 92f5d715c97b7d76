#pragma once

#include "ezl/jet.hpp"
#include "ezl/laurent_expansion.hpp"

#include <string>
#include <vector>

namespace ezl {

/// Contour and quadrature settings for the Mellin-Barnes recursion. The
/// line Re z = M - eta is integrated by the trapezoid rule starting at step
/// h0, halving until the estimate meets the tolerance; the truncation point
/// is found by marching outward until the integrand is negligible.
struct MBConfig {
  Real eta{0.5};
  Real h0{1.0 / 3};
  /// Hard limit on |Im z|.
  Real t_max{1000};
  /// Extra range added beyond the adaptive truncation point.
  Real t_extra{0};
  int max_levels = 10;
};

/// Re(s_j + ... + s_r) > r - j - M + eta for all j.
struct RegionCheck {
  int depth = 2;
  int M = 1;
  Real eta{0.5};

  bool contains(const ComplexPoint& s) const;
  /// Smallest Re s(j,r) - (r - j - M + eta) over j.
  Real margin(const ComplexPoint& s) const;
};

/// max_j { r - j - (m_j + ... + m_r) }.
int capital_m(const IntPoint& m);

bool region_ok(const ComplexPoint& s, int M, const Real& eta = Real(0.5));

struct MBIntegral {
  Complex value;
  Real error;
  int nodes = 0;
  /// Truncation of the line: |Im z| <= extent.
  Real extent;
  /// Final trapezoid step.
  Real step;
};

/// I(s; alpha) = (1/2 pi i) int_(alpha) Gamma(s_r+z) Gamma(-z)
/// zeta_{r-1}(s_1,...,s_{r-2}, s_{r-1}+s_r+z) zeta(-z) dz.
Complex mb_integral(const ComplexPoint& s, const Real& alpha, const PrecisionContext& ctx = PrecisionContext(),
                    const MBConfig& cfg = {});
MBIntegral mb_integral_detailed(const ComplexPoint& s, const Real& alpha, const PrecisionContext& ctx,
                                const MBConfig& cfg = {});

/// Name of a singular hyperplane through s ("s2=1", "s1+s2=0", ...), or
/// empty when s avoids all of them.
std::string singular_hyperplane(const ComplexPoint& s);

/// M used by ez_eval_mb at s: the least M >= max(M_r(round s) + 1, 1)
/// leaving every region margin at least 1/4.
int contour_index(const ComplexPoint& s, const Real& eta = Real(0.5));

struct MBResult {
  Complex value;
  Real error;
  int M = 0;
};

/// zeta_r(s) for any s off the singular hyperplanes, by the Mellin-Barnes
/// recursion down to depth 1. `M` = 0 picks contour_index(s).
Complex ez_eval_mb(const ComplexPoint& s, const PrecisionContext& ctx = PrecisionContext(), const MBConfig& cfg = {});
MBResult ez_eval_mb_detailed(const ComplexPoint& s, const PrecisionContext& ctx, const MBConfig& cfg = {},
                             int M = 0);

/// (1/Gamma(s_r)) I(s; M - eta), the last term of the recursion.
Complex integral_branch(const ComplexPoint& s, int M, const PrecisionContext& ctx = PrecisionContext(),
                        const MBConfig& cfg = {});

/// d^n F_z(s) at s = k, F_z(s) = Gamma(s_l+z)/Gamma(s_l) zeta_{l-1}(s_1,...,s_{l-2}, s_{l-1}+s_l+z),
/// l = k.size() >= 2.
Complex f_deriv(const MultiIndex& n, const IntPoint& k, const Complex& z,
                const PrecisionContext& ctx = PrecisionContext());

/// Row a of Pascal's triangle.
std::vector<long long> redistribute_merged_variable(int a);

struct NonpositiveOptions {
  int order_cap = 6;
  MBConfig mb;
};

/// Expansion of zeta_r at an integer point outside (Z>=1)^r, r >= 2: the
/// 1/(s_r - 1) term and the residue terms expanded recursively, the integral
/// term by termwise Taylor expansion under the integral sign.
LaurentExpansion expand_nonpositive(const IntPoint& m, int order, const PrecisionContext& ctx = PrecisionContext(),
                                    const NonpositiveOptions& opt = {});

namespace detail {

/// Absolute target of the Mellin-Barnes routines for a context.
Real mb_tol(const PrecisionContext& ctx);

// Versions assuming an active PrecisionScope; `tol` is absolute.
MBResult ez_eval_mb_raw(const ComplexPoint& s, int M, const Real& tol, const MBConfig& cfg);
MBIntegral mb_integral_raw(const ComplexPoint& s, int M, const Real& tol, const MBConfig& cfg);

}  // namespace detail

}  // namespace ezl
