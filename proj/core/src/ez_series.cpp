#include "ezl/ez_series.hpp"

#include "ezl/em_series.hpp"

#include <algorithm>

namespace ezl {

bool DomainDescriptor::contains(const ComplexPoint& s) const {
  if (static_cast<int>(s.size()) != depth || depth < 1) {
    return false;
  }
  Real tail(0);
  for (int j = depth; j >= 1; --j) {
    tail += s[j - 1].re;
    if (!(tail > depth - j + 1)) {
      return false;
    }
  }
  return true;
}

bool in_domain(const ComplexPoint& s) {
  return DomainDescriptor{static_cast<int>(s.size())}.contains(s);
}

namespace {

void require_domain(const ComplexPoint& s) {
  if (s.empty()) {
    throw Error(ErrorKind::InvalidArgument, "depth must be at least 1");
  }
  if (!in_domain(s)) {
    throw Error(ErrorKind::OutOfDomain, "point is outside the convergence domain of zeta_" + std::to_string(s.size()));
  }
}

EmOptions em_options(const SeriesOptions& opt, size_t depth) {
  EmOptions em;
  em.n = opt.n;
  em.max_n = static_cast<int>(std::min<long long>(opt.term_budget / static_cast<long long>(depth), 1'000'000'000));
  if (em.max_n < 16) {
    throw Error(ErrorKind::PrecisionUnreachable, "term budget too small");
  }
  return em;
}

}  // namespace

SeriesResult ez_value_detailed(const ComplexPoint& s, const PrecisionContext& ctx, const SeriesOptions& opt) {
  require_domain(s);
  PrecisionScope scope(ctx);
  auto out = em_zeta(ComplexTraits{}, rescaled(s), ctx.inner_tol(), em_options(opt, s.size()));
  return {out.value, out.error, out.n};
}

Complex ez_value(const ComplexPoint& s, const PrecisionContext& ctx) { return ez_value_detailed(s, ctx).value; }

SeriesResult ez_deriv_detailed(const MultiIndex& l, const ComplexPoint& q, const PrecisionContext& ctx,
                               const SeriesOptions& opt) {
  if (l.size() != q.size()) {
    throw Error(ErrorKind::InvalidArgument, "multi-index and point lengths differ");
  }
  int order = 0;
  for (int x : l) {
    if (x < 0) {
      throw Error(ErrorKind::InvalidArgument, "derivative orders must be non-negative");
    }
    order += x;
  }
  if (order == 0) {
    return ez_value_detailed(q, ctx, opt);
  }
  require_domain(q);
  PrecisionScope scope(ctx);
  const int r = static_cast<int>(q.size());
  auto layout = jet_layout(r, order, l);
  std::vector<Jet> args;
  for (int j = 0; j < r; ++j) {
    args.push_back(Jet::variable(layout, j, rescaled(q[j])));
  }
  auto out = em_zeta(JetTraits{}, args, ctx.inner_tol(), em_options(opt, q.size()));
  Real scale(1);
  for (int x : l) {
    scale *= factorial_real(x);
  }
  return {out.value.coefficient(l) * scale, out.error * scale, out.n};
}

Complex ez_deriv(const MultiIndex& l, const ComplexPoint& q, const PrecisionContext& ctx) {
  return ez_deriv_detailed(l, q, ctx).value;
}

}  // namespace ezl
