#include "expansion_internal.hpp"

#include "ezl/em_series.hpp"
#include "ezl/ez_series.hpp"
#include "ezl/stuffle.hpp"
#include "ezl/zeta.hpp"

#include <map>

namespace ezl::detail {

Jet substitute(const Jet& j, const LinearMap& map, const JetLayoutPtr& target) {
  const auto& src = *j.layout();
  const int k = src.vars();
  int top = 0;
  for (int i = 0; i < src.size(); ++i) {
    if (!j[i].is_zero()) {
      top = std::max(top, src.degree(i));
    }
  }
  top = std::min(top, target->order());
  std::vector<std::vector<Jet>> powers(k);
  for (int v = 0; v < k; ++v) {
    powers[v].push_back(Jet(target, Complex(1)));
    Jet x = Jet::affine(target, Complex(0), map[v]);
    for (int e = 1; e <= top; ++e) {
      powers[v].push_back(powers[v].back() * x);
    }
  }
  Jet out(target);
  for (int i = 0; i < src.size(); ++i) {
    if (j[i].is_zero() || src.degree(i) > top) {
      continue;
    }
    const MultiIndex& e = src.monomial(i);
    Jet term(target, j[i]);
    for (int v = 0; v < k; ++v) {
      if (e[v] > 0) {
        term *= powers[v][e[v]];
      }
    }
    out += term;
  }
  return out;
}

PoleJet substitute(const PoleJet& p, const LinearMap& map, const LinearFormRegistryPtr& registry,
                   const JetLayoutPtr& target) {
  const int vars = target->vars();
  PoleJet out(registry, Jet(target));
  for (const auto& [exps, jet] : p.terms()) {
    PoleJet term(registry, substitute(jet, map, target));
    for (size_t id = 0; id < exps.size(); ++id) {
      if (exps[id] == 0) {
        continue;
      }
      const auto& w = p.registry()->weights(static_cast<int>(id));
      Jet form(target);
      for (int t = 0; t < vars; ++t) {
        Real c(0);
        for (size_t v = 0; v < w.size(); ++v) {
          c += w[v] * map[v][t];
        }
        MultiIndex e(vars, 0);
        e[t] = 1;
        if (int at = target->index_of(e); at >= 0) {
          form[at] = Complex(c);
        }
      }
      for (int n = 0; n < exps[id]; ++n) {
        term = term.divided_by(form);
      }
    }
    out += term;
  }
  return out;
}

PoleJet pole_reciprocal(const LinearFormRegistryPtr& registry, const Jet& d) {
  return PoleJet(registry, Jet(d.layout(), Complex(1))).divided_by(d);
}

Jet stieltjes_jet(int k, const JetLayoutPtr& layout, const Real& tol) {
  auto registry = std::make_shared<LinearFormRegistry>(k);
  std::vector<Jet> args;
  for (int i = 0; i < k; ++i) {
    args.push_back(Jet::variable(layout, i, Complex(1)));
  }
  PoleJet p = em_zeta(PoleTraits{registry}, args, tol).value;
  // Every pole is one of the k chain forms, each to the first power.
  if (registry->size() != k) {
    throw Error(ErrorKind::ConsistencyFailure, "unexpected pole structure at (1,...,1)");
  }
  Jet cleared = p.times_denominators(PoleJet::Exponents(k, 1));
  cleared -= Complex(1);
  return divide_by_linear(cleared, std::vector<Real>(k, Real(1)));
}

namespace {

PoleJet zeta1_pole_jet(long m, int order, const LinearFormRegistryPtr& registry, const Real& tol) {
  auto layout = jet_layout(1, order);
  const Jet x = Jet::variable(layout, 0, Complex(0));
  Jet regular(layout);
  Jet power(layout, Complex(1));
  if (m == 1) {
    const auto g = stieltjes_raw(order, tol);
    for (int n = 0; n <= order; ++n) {
      regular += power * Complex(g[n]);
      power *= x;
    }
    PoleJet out = pole_reciprocal(registry, x);
    out += PoleJet(registry, regular);
    return out;
  }
  const auto c = zeta_taylor_raw(Complex(static_cast<int>(m)), order, tol);
  for (int n = 0; n <= order; ++n) {
    regular += power * c[n];
    power *= x;
  }
  return PoleJet(registry, regular);
}

bool all_ones(const IntPoint& c) {
  return std::all_of(c.begin(), c.end(), [](long v) { return v == 1; });
}

}  // namespace

PoleJet positive_pole_jet(const IntPoint& m, int order, const LinearFormRegistryPtr& registry, const Real& tol) {
  const int r = static_cast<int>(m.size());
  if (r == 1) {
    return zeta1_pole_jet(m[0], order, registry, tol);
  }
  auto layout = jet_layout(r, order);
  const ExpansionPlan plan = expansion_plan(m);
  std::map<ZetaFactor, PoleJet> leaves;
  std::map<int, Jet> a_jets;

  auto leaf = [&](const ZetaFactor& f) -> const PoleJet& {
    if (auto it = leaves.find(f); it != leaves.end()) {
      return it->second;
    }
    const int k = f.depth();
    IntPoint centers;
    LinearMap map;
    for (const auto& a : f.args) {
      centers.push_back(a.center(m));
      map.push_back(a.coeffs);
    }
    PoleJet value;
    if (all_ones(centers)) {
      auto it = a_jets.find(k);
      if (it == a_jets.end()) {
        it = a_jets.emplace(k, stieltjes_jet(k, jet_layout(k, order + 1), tol)).first;
      }
      // delta_i = a_i + ... + a_k - (k - i + 1), as offsets.
      std::vector<Jet> deltas(k, Jet(layout));
      for (int i = k - 1; i >= 0; --i) {
        deltas[i] = Jet::affine(layout, Complex(0), map[i]);
        if (i + 1 < k) {
          deltas[i] += deltas[i + 1];
        }
      }
      value = pole_reciprocal(registry, deltas[0]);
      value += PoleJet(registry, substitute(it->second, map, layout));
      for (int i = 1; i < k; ++i) {
        value *= pole_reciprocal(registry, deltas[i]);
      }
    } else if (in_domain(to_complex_point(centers))) {
      std::vector<Jet> args;
      for (int i = 0; i < k; ++i) {
        args.push_back(Jet::affine(layout, Complex(centers[i]), map[i]));
      }
      value = PoleJet(registry, em_zeta(JetTraits{}, args, tol).value);
    } else {
      throw Error(ErrorKind::ConsistencyFailure, "plan leaf " + f.to_string() + " is neither interior nor at (1,...,1)");
    }
    return leaves.emplace(f, std::move(value)).first->second;
  };

  PoleJet total(registry, Jet(layout));
  const StuffleExpression rewrite = plan.replay();
  for (const auto& t : rewrite.terms()) {
    PoleJet prod(registry, Jet(layout, Complex(Real(t.coeff))));
    for (const auto& f : t.factors) {
      prod *= leaf(f);
    }
    total += prod;
  }
  return total;
}

PoleJet integer_pole_jet(const IntPoint& m, int order, const LinearFormRegistryPtr& registry, const Real& tol,
                         const MBConfig& cfg) {
  if (m.size() == 1) {
    return zeta1_pole_jet(m[0], order, registry, tol);
  }
  if (std::all_of(m.begin(), m.end(), [](long v) { return v >= 1; })) {
    return positive_pole_jet(m, order, registry, tol);
  }
  return nonpositive_pole_jet(m, order, registry, tol, cfg);
}

}  // namespace ezl::detail
