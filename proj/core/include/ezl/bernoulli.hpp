#pragma once

#include "ezl/numeric.hpp"

#include <vector>

namespace ezl {

/// B_{2k}/(2k)! for k = 1..count at the current default precision. The
/// exact rationals are computed once and shared.
const std::vector<Real>& bernoulli_scaled(int count);

/// B_n as a Real (B_1 = -1/2).
Real bernoulli(int n);

}  // namespace ezl
