#pragma once

#include "ezl/numeric.hpp"

#include <functional>
#include <vector>

namespace ezl {

struct ContourResult {
  /// Coefficient of (w - center)^n for n = min_order..max_order.
  std::vector<Complex> coefficients;
  int min_order = 0;
  int nodes = 0;
  /// Largest change seen at the final node doubling.
  Real change;
};

/// Laurent/Taylor coefficients of f on the annulus through the circle
/// |w - center| = radius, by the trapezoid rule with node doubling until two
/// successive node counts agree within `tol`.
ContourResult contour_coefficients(const std::function<Complex(const Complex&)>& f, const Complex& center,
                                   const Real& radius, int min_order, int max_order, const Real& tol,
                                   int initial_nodes = 64, int max_nodes = 4096);

/// Taylor coefficients of f over the polydisc |w_k - center_k| = radius,
/// indexed by the total-degree monomials of `orders` (graded then
/// lexicographic, as JetLayout). Nodes per variable double until stable.
struct PolydiscResult {
  std::vector<MultiIndex> monomials;
  std::vector<Complex> coefficients;
  int nodes = 0;
  Real change;
};

PolydiscResult polydisc_coefficients(const std::function<Complex(const ComplexPoint&)>& f, const ComplexPoint& center,
                                     const Real& radius, int order, const Real& tol, int initial_nodes = 16,
                                     int max_nodes = 256);

}  // namespace ezl
