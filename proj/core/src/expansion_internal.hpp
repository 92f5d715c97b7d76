#pragma once

#include "ezl/mellin_barnes.hpp"
#include "ezl/pole_jet.hpp"

#include <vector>

namespace ezl::detail {

// Row i: the offset of source variable i as an integer combination of the
// target offsets.
using LinearMap = std::vector<std::vector<int>>;

// J(x_1..x_k) with x_i = sum_j map[i][j] e_j, on the target layout.
Jet substitute(const Jet& j, const LinearMap& map, const JetLayoutPtr& target);

// Same for a pole jet; denominator forms are pulled back and re-registered.
PoleJet substitute(const PoleJet& p, const LinearMap& map, const LinearFormRegistryPtr& registry,
                   const JetLayoutPtr& target);

// 1 / d for an affine jet, symbolic when d vanishes at the center.
PoleJet pole_reciprocal(const LinearFormRegistryPtr& registry, const Jet& d);

// zeta_r at an integer point as a pole jet in the offsets s - m, on a layout
// of order >= 1. `tol` is absolute; a PrecisionScope must be active.
PoleJet positive_pole_jet(const IntPoint& m, int order, const LinearFormRegistryPtr& registry, const Real& tol);
PoleJet nonpositive_pole_jet(const IntPoint& m, int order, const LinearFormRegistryPtr& registry, const Real& tol,
                             const MBConfig& cfg);
PoleJet integer_pole_jet(const IntPoint& m, int order, const LinearFormRegistryPtr& registry, const Real& tol,
                         const MBConfig& cfg);

// The regular part A of the expansion at (1,...,1) in k variables:
// zeta_k = (1/prod_{i>=2} delta_i) (1/delta_1 + A), delta_i = s(i,k) - (k-i+1).
// Computed on `layout`, which must hold one order more than the caller reads.
Jet stieltjes_jet(int k, const JetLayoutPtr& layout, const Real& tol);

}  // namespace ezl::detail
