#include "ezl/laurent.hpp"

#include "expansion_internal.hpp"
#include "ezl/em_series.hpp"
#include "ezl/ez_series.hpp"
#include "ezl/mellin_barnes.hpp"
#include "ezl/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ezl {

namespace {

bool positive(const IntPoint& m) {
  return std::all_of(m.begin(), m.end(), [](int v) { return v >= 1; });
}

void require_positive(const IntPoint& m) {
  if (m.empty()) {
    throw Error(ErrorKind::InvalidArgument, "depth must be at least 1");
  }
  if (!positive(m)) {
    throw Error(ErrorKind::NotPositive, "every coordinate of the center must be >= 1");
  }
}

void require_order(int order, const ExpansionOptions& opt) {
  if (order < 0 || order > opt.order_cap) {
    throw Error(ErrorKind::OrderCapExceeded,
                "order " + std::to_string(order) + " outside 0.." + std::to_string(opt.order_cap));
  }
}

int total_of(const MultiIndex& n) { return std::accumulate(n.begin(), n.end(), 0); }

}  // namespace

LaurentExpansion expand_positive(const IntPoint& m, int order, const PrecisionContext& ctx,
                                 const ExpansionOptions& opt) {
  require_positive(m);
  require_order(order, opt);
  PrecisionScope scope(ctx);
  auto registry = std::make_shared<LinearFormRegistry>(static_cast<int>(m.size()));
  PoleJet p = detail::positive_pole_jet(m, std::max(order, 1), registry, detail::mb_tol(ctx));
  return LaurentExpansion::from_pole_jet(p, m, order, ctx.digits(), ctx.tol());
}

LaurentExpansion expand_at(const IntPoint& m, int order, const PrecisionContext& ctx, const ExpansionOptions& opt) {
  if (m.size() >= 2 && !positive(m)) {
    NonpositiveOptions np;
    np.order_cap = opt.order_cap;
    return expand_nonpositive(m, order, ctx, np);
  }
  if (m.size() == 1 && m[0] < 1) {
    require_order(order, opt);
    PrecisionScope scope(ctx);
    auto registry = std::make_shared<LinearFormRegistry>(1);
    PoleJet p = detail::integer_pole_jet(m, std::max(order, 1), registry, detail::mb_tol(ctx), {});
    return LaurentExpansion::from_pole_jet(p, m, order, ctx.digits(), ctx.tol());
  }
  return expand_positive(m, order, ctx, opt);
}

Complex multiple_stieltjes(const MultiIndex& n, const PrecisionContext& ctx, const ExpansionOptions& opt) {
  if (n.empty()) {
    throw Error(ErrorKind::InvalidArgument, "multi-index must be non-empty");
  }
  for (int x : n) {
    if (x < 0) {
      throw Error(ErrorKind::InvalidArgument, "multi-index entries must be non-negative");
    }
    require_order(x, opt);
  }
  const int r = static_cast<int>(n.size());
  const int total = total_of(n);
  // Every variable keeps its linear term so the polar forms stay visible.
  std::vector<int> caps;
  for (int x : n) {
    caps.push_back(std::max(x, 1));
  }
  caps[0] = total + 1;
  PrecisionScope scope(ctx);
  Jet a = detail::stieltjes_jet(r, jet_layout(r, total + 1, caps), detail::mb_tol(ctx));
  return a.coefficient(n);
}

std::vector<std::pair<MultiIndex, Complex>> multiple_stieltjes_table(int r, int total, const PrecisionContext& ctx,
                                                                     const ExpansionOptions& opt) {
  if (r < 1) {
    throw Error(ErrorKind::InvalidArgument, "depth must be at least 1");
  }
  require_order(total, opt);
  PrecisionScope scope(ctx);
  auto layout = jet_layout(r, total + 1);
  Jet a = detail::stieltjes_jet(r, layout, detail::mb_tol(ctx));
  std::vector<std::pair<MultiIndex, Complex>> out;
  for (int i = 0; i < layout->size(); ++i) {
    if (layout->degree(i) <= total) {
      out.emplace_back(layout->monomial(i), a[i]);
    }
  }
  return out;
}

std::vector<Complex> stieltjes_slice(int n2, int count, const PrecisionContext& ctx) {
  if (n2 < 0 || count < 1) {
    throw Error(ErrorKind::InvalidArgument, "slice needs n2 >= 0 and count >= 1");
  }
  PrecisionScope scope(ctx);
  const int order = count + n2;
  Jet a = detail::stieltjes_jet(2, jet_layout(2, order, {order, std::max(n2, 1)}), detail::mb_tol(ctx));
  std::vector<Complex> out;
  for (int n1 = 0; n1 < count; ++n1) {
    out.push_back(a.coefficient({n1, n2}));
  }
  return out;
}

Complex stieltjes_a(int n2, const Complex& s1, int count, const PrecisionContext& ctx) {
  const auto g = stieltjes_slice(n2, count, ctx);
  PrecisionScope scope(ctx);
  const Complex x = rescaled(s1) - Complex(1);
  Complex sum(0);
  for (int n1 = count - 1; n1 >= 0; --n1) {
    sum = sum * x + g[n1];
  }
  Complex pole = reciprocal(ipow(x, n2 + 1));
  return n2 % 2 == 0 ? sum + pole : sum - pole;
}

Complex gamma2_euler(const Complex& s1, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Complex s = rescaled(s1);
  if (!(s.re > Real(1))) {
    throw Error(ErrorKind::OutOfDomain, "gamma_2(s1) needs Re s1 > 1");
  }
  const Complex euler(stieltjes(0, ctx));
  return zeta(s, ctx) * euler - ez_value({Complex(1), s}, ctx) - zeta(s + Complex(1), ctx);
}

Complex RestrictedExpansion::coefficient(int power) const {
  const int i = power - lowest;
  if (i < 0 || i >= static_cast<int>(coefficients.size())) {
    return Complex(0);
  }
  return coefficients[i];
}

Complex RestrictedExpansion::evaluate(const Complex& s) const {
  const Complex x = s - Complex(1);
  Complex sum(0);
  for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i) {
    sum = sum * x + coefficients[i];
  }
  return lowest < 0 ? sum * reciprocal(ipow(x, -lowest)) : sum * ipow(x, lowest);
}

RestrictedExpansion restricted_expand(const IntPoint& m, int order, const PrecisionContext& ctx,
                                      const ExpansionOptions& opt) {
  require_positive(m);
  require_order(order, opt);
  const int r = static_cast<int>(m.size());
  RestrictedExpansion out;
  out.center = m;
  for (int i = 0; i < r; ++i) {
    if (m[i] == 1) {
      out.restricted.push_back(i + 1);
    }
  }
  PrecisionScope scope(ctx);
  // Pole order is at most r, so order + r terms of each numerator suffice.
  auto layout = jet_layout(1, order + r);
  auto registry = std::make_shared<LinearFormRegistry>(1);
  std::vector<Jet> args;
  for (int i = 0; i < r; ++i) {
    args.push_back(m[i] == 1 ? Jet::variable(layout, 0, Complex(1)) : Jet(layout, Complex(m[i])));
  }
  PoleJet p = em_zeta(PoleTraits{registry}, args, detail::mb_tol(ctx)).value;
  int poles = 0;
  for (const auto& [e, j] : p.terms()) {
    if (!e.empty()) {
      poles = std::max(poles, e[0]);
    }
  }
  out.lowest = -poles;
  for (int power = -poles; power <= order; ++power) {
    Complex c(0);
    for (const auto& [e, j] : p.terms()) {
      const int a = e.empty() ? 0 : e[0];
      if (power + a >= 0) {
        c += j.coefficient({power + a});
      }
    }
    out.coefficients.push_back(c);
  }
  return out;
}

Complex stieltjes_sum(int total, int r, const PrecisionContext& ctx, const ExpansionOptions& opt) {
  if (r < 1 || total < 0) {
    throw Error(ErrorKind::InvalidArgument, "stieltjes_sum needs r >= 1 and total >= 0");
  }
  require_order(total, opt);
  Complex by_table(0);
  for (const auto& [n, g] : multiple_stieltjes_table(r, total, ctx, opt)) {
    if (total_of(n) == total) {
      by_table += g;
    }
  }
  const int power = total - (r - 1);
  RestrictedExpansion diag = restricted_expand(IntPoint(r, 1), std::max(power, 0), ctx, opt);
  PrecisionScope scope(ctx);
  Complex by_diagonal = diag.coefficient(power) * factorial_real(r - 1);
  const Real bound = 10 * ctx.tol() * std::max(Real(1), abs(by_diagonal));
  if (abs(by_table - by_diagonal) >= bound) {
    throw Error(ErrorKind::ConsistencyFailure, "composition sum and diagonal coefficient disagree: " +
                                                   to_decimal(abs(by_table - by_diagonal), 6));
  }
  return by_diagonal;
}

PoleCheckReport lemma1_pole_report(const IntPoint& m, const PrecisionContext& ctx, std::uint32_t seed,
                                   int directions) {
  require_positive(m);
  const int r = static_cast<int>(m.size());
  PoleCheckReport report;
  report.bounded = true;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double radii[] = {1e-2, 1e-3, 1e-4};
  for (int d = 0; d < directions; ++d) {
    // Keep every polar form transversal to the direction.
    std::vector<double> dir(r);
    while (true) {
      double norm = 0;
      for (auto& x : dir) {
        x = unit(rng);
        norm += x * x;
      }
      norm = std::sqrt(norm);
      bool ok = norm > 0.1;
      double tail = 0;
      for (int k = r - 1; k >= 0 && ok; --k) {
        tail += dir[k];
        ok = std::abs(tail) > 0.1 * norm;
      }
      if (ok) {
        for (auto& x : dir) {
          x /= norm;
        }
        break;
      }
    }
    std::vector<Real> sizes;
    for (double eps : radii) {
      PrecisionScope scope(ctx);
      ComplexPoint s;
      for (int i = 0; i < r; ++i) {
        s.emplace_back(Real(m[i]) + Real(dir[i]) * Real(eps));
      }
      // delta_k = s(k,r) - (r-k+1), k = 1..r.
      std::vector<Complex> delta(r);
      Complex tail(0);
      for (int k = r; k >= 1; --k) {
        tail += s[k - 1];
        delta[k - 1] = tail - Complex(r - k + 1);
      }
      Complex lead = zeta(delta[0] + Complex(1), ctx);
      for (int k = 2; k <= r; ++k) {
        lead *= reciprocal(delta[k - 1]);
      }
      Complex g = ez_eval_mb(s, ctx) - lead;
      for (int k = 3; k <= r; ++k) {
        g *= delta[k - 1];
      }
      sizes.push_back(abs(g));
    }
    const Real top = *std::max_element(sizes.begin(), sizes.end());
    if (!(top <= 10 * sizes.front() + 1)) {
      report.bounded = false;
    }
    report.sizes.push_back(std::move(sizes));
  }
  return report;
}

bool lemma1_pole_check(const IntPoint& m, const PrecisionContext& ctx, std::uint32_t seed) {
  return lemma1_pole_report(m, ctx, seed).bounded;
}

}  // namespace ezl
