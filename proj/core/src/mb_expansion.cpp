#include "expansion_internal.hpp"
#include "ezl/gamma.hpp"
#include "ezl/mellin_barnes.hpp"
#include "ezl/zeta.hpp"
#include "line_quadrature.hpp"

#include <algorithm>

namespace ezl {

namespace detail {

PoleJet nonpositive_pole_jet(const IntPoint& m, int order, const LinearFormRegistryPtr& registry, const Real& tol,
                             const MBConfig& cfg) {
  const int r = static_cast<int>(m.size());
  auto layout = jet_layout(r, order);
  std::vector<Jet> s;
  for (int i = 0; i < r; ++i) {
    s.push_back(Jet::variable(layout, i, Complex(m[i])));
  }
  const Jet& last = s[r - 1];
  const int M = std::max(capital_m(m) + 1, 1);

  // Offsets of the merged point: e'_{r-1} = e_{r-1} + e_r.
  LinearMap merge(r - 1, std::vector<int>(r, 0));
  for (int i = 0; i < r - 1; ++i) {
    merge[i][i] = 1;
  }
  merge[r - 2][r - 1] = 1;
  auto merged = [&](int shift, const Real& sub_tol) {
    IntPoint mp(m.begin(), m.end() - 1);
    mp.back() += m[r - 1] + shift;
    auto sub_registry = std::make_shared<LinearFormRegistry>(r - 1);
    PoleJet sub = integer_pole_jet(mp, order, sub_registry, sub_tol, cfg);
    return substitute(sub, merge, registry, layout);
  };

  PoleJet total = pole_reciprocal(registry, last - Complex(1)) * merged(-1, tol / 10);
  Jet binom(layout, Complex(1));
  for (int k = 0; k < M; ++k) {
    if (k > 0) {
      // binom(-s_r, k) = binom(-s_r, k-1) (-s_r - k + 1) / k
      binom *= (Complex(1 - k) - last) * Complex(Real(1) / k);
    }
    if (k >= 2 && k % 2 == 0) {
      continue;
    }
    Jet c = binom * zeta_raw(Complex(-k), tol);
    total += merged(k, tol / (10 * (1 + magnitude(c)))) * c;
  }
  Jet g = rgamma(last);
  auto integral = line_integral<Jet>(s, M, tol / (10 * (1 + magnitude(g))), cfg);
  total += PoleJet(registry, g * integral.value);
  return total;
}

}  // namespace detail

LaurentExpansion expand_nonpositive(const IntPoint& m, int order, const PrecisionContext& ctx,
                                    const NonpositiveOptions& opt) {
  if (m.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "expand_nonpositive needs depth >= 2; use laurent_at for depth 1");
  }
  if (std::all_of(m.begin(), m.end(), [](int v) { return v >= 1; })) {
    throw Error(ErrorKind::InvalidArgument, "center lies in the positive orthant; use expand_positive");
  }
  if (order < 0 || order > opt.order_cap) {
    throw Error(ErrorKind::OrderCapExceeded,
                "order " + std::to_string(order) + " outside 0.." + std::to_string(opt.order_cap));
  }
  PrecisionScope scope(ctx);
  const Real tol = detail::mb_tol(ctx);
  auto registry = std::make_shared<LinearFormRegistry>(static_cast<int>(m.size()));
  PoleJet p = detail::nonpositive_pole_jet(m, std::max(order, 1), registry, tol, opt.mb);
  return LaurentExpansion::from_pole_jet(p, m, order, ctx.digits(), ctx.tol());
}

}  // namespace ezl
