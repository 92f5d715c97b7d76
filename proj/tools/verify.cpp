#include "verify.hpp"

#include "ezl/ez_series.hpp"
#include "ezl/laurent.hpp"
#include "ezl/limits.hpp"
#include "ezl/mellin_barnes.hpp"
#include "ezl/stuffle.hpp"
#include "ezl/zeta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace ezl::cli {

namespace {

Check make(std::string name, const Real& residual, const Real& bound) {
  return {std::move(name), residual <= bound, residual, bound};
}

Complex zeta_any(const ComplexPoint& s, const PrecisionContext& ctx) {
  return s.size() == 1 ? zeta(s[0], ctx) : ez_value(s, ctx);
}

ComplexPoint random_point(std::mt19937& rng, int r, double lo, double hi) {
  std::uniform_real_distribution<double> re(lo, hi);
  std::uniform_real_distribution<double> im(-2.0, 2.0);
  ComplexPoint s;
  for (int k = 0; k < r; ++k) {
    s.emplace_back(re(rng), im(rng));
  }
  return s;
}

ZetaFactor slice(const ZetaFactor& f, int from, int to) { return ZetaFactor{{f.args.begin() + from, f.args.begin() + to}}; }

std::vector<Check> stuffle_suite(const PrecisionContext& ctx) {
  std::vector<Check> out;
  std::mt19937 rng(7);
  auto f = [&](const ComplexPoint& s) { return zeta_any(s, ctx); };
  struct Identity {
    std::string name;
    int r;
    ZetaFactor left, right;
  };
  const ZetaFactor id2 = identity_factor(2), id3 = identity_factor(3), id4 = identity_factor(4);
  const std::vector<Identity> ids = {
      {"harmonic", 2, slice(id2, 0, 1), slice(id2, 1, 2)},
      {"tripleA", 3, slice(id3, 0, 2), slice(id3, 2, 3)},
      {"tripleB", 3, slice(id3, 0, 1), slice(id3, 1, 3)},
      {"prf1 r=4", 4, slice(id4, 0, 3), slice(id4, 3, 4)},
  };
  for (const auto& id : ids) {
    const StuffleExpression rhs = stuffle(id.left.args, id.right.args);
    Real worst(0);
    for (int trial = 0; trial < 3; ++trial) {
      ComplexPoint s = random_point(rng, id.r, 2.1, 3.5);
      PrecisionScope scope(ctx);
      Complex lhs = evaluate(StuffleExpression({ZetaTerm{1, {id.left, id.right}}}), s, f);
      worst = std::max(worst, abs(lhs - evaluate(rhs, s, f)));
    }
    out.push_back(make(id.name + " identity", worst, 10 * ctx.tol()));
  }
  long bad = 0;
  for (int r = 2; r <= 6; ++r) {
    for (int j = 1; j < r; ++j) {
      bad += std::abs(static_cast<long>(stuffle_product(j, r).size()) - delannoy(j, r - j));
    }
  }
  out.push_back(make("term counts are Delannoy numbers, r <= 6", Real(bad), Real(0)));
  return out;
}

std::vector<Check> lemma1_suite(const PrecisionContext& ctx) {
  std::vector<Check> out;
  for (const IntPoint& m : {IntPoint{1, 1}, IntPoint{2, 1}, IntPoint{1, 1, 1}}) {
    const auto report = lemma1_pole_report(m, ctx);
    Real worst(0);
    for (const auto& sizes : report.sizes) {
      const Real top = *std::max_element(sizes.begin(), sizes.end());
      worst = std::max(worst, top / (10 * sizes.front() + 1));
    }
    std::string name = "pole structure at (";
    for (size_t i = 0; i < m.size(); ++i) {
      name += (i ? "," : "") + std::to_string(m[i]);
    }
    out.push_back(make(name + ")", worst, Real(1)));
  }
  // (s2-1)(s1+s2-2) zeta_2(s) -> 1, Richardson-extrapolated along a ray.
  PrecisionScope scope(ctx);
  auto g = [&](const Real& t) {
    ComplexPoint s{Complex(Real(1) + Real("0.6") * t), Complex(Real(1) + Real("0.8") * t)};
    return (s[1] - Complex(1)) * (s[0] + s[1] - Complex(2)) * ez_eval_mb(s, ctx);
  };
  const Real t("1e-3");
  Complex limit = g(t / 2) * Real(2) - g(t);
  out.push_back(make("double pole leading coefficient at (1,1)", abs(limit - Complex(1)), Real("1e-4")));
  return out;
}

std::vector<Check> remarks_suite(const PrecisionContext& ctx) {
  std::vector<Check> out;
  Real worst(0);
  for (int n = 0; n <= 4; ++n) {
    worst = std::max(worst, abs(multiple_stieltjes({n, 0}, ctx) - Complex(stieltjes(n, ctx))));
  }
  out.push_back(make("gamma_(n,0) = gamma_n, n <= 4", worst, 10 * ctx.tol()));
  const auto g = stieltjes_slice(0, 60, ctx);
  PrecisionScope scope(ctx);
  worst = Real(0);
  for (int k = 0; k < 4; ++k) {
    const Complex x = polar(Real("0.25"), Real(k) * pi() / 2 + Real("0.3"));
    Complex sum(0);
    for (int n = 59; n >= 0; --n) {
      sum = sum * x + g[n];
    }
    worst = std::max(worst, abs(sum + reciprocal(x) - zeta(Complex(1) + x, ctx)));
  }
  out.push_back(make("A_0 = zeta on |s1-1| = 1/4", worst, 10 * ctx.tol()));
  worst = Real(0);
  for (const Complex& s1 : {Complex(1.1), Complex(1.2, 0.05)}) {
    worst = std::max(worst, abs(stieltjes_a(1, s1, 60, ctx) - gamma2_euler(s1, ctx)));
  }
  out.push_back(make("A_1 = zeta(s1) gamma - zeta_2(1,s1) - zeta(s1+1)", worst, Real("1e-12")));
  return out;
}

std::vector<Check> corollary_suite(const PrecisionContext& ctx) {
  std::vector<Check> out;
  const Real t("1e-4");
  for (const IntPoint& m : {IntPoint{0, 0}, IntPoint{-1, 0}, IntPoint{0, -1}}) {
    PrecisionScope scope(ctx);
    const ComplexPoint eps{Complex(2 * t), Complex(t)};
    const NearPointValue v = zeta2_corollary(m, eps, ctx);
    const Complex mb = ez_eval_mb({Complex(m[0]) + eps[0], Complex(m[1]) + eps[1]}, ctx);
    const std::string name = "corollary at (" + std::to_string(m[0]) + "," + std::to_string(m[1]) + ")";
    out.push_back(make(name, abs(v.finite_part - mb), 10 * (abs(eps[1]) + abs(eps[0] + eps[1]))));
    Real nonzero(0);
    for (int k = -m[1] + 1; k <= 1 - m[0] - m[1]; ++k) {
      nonzero = std::max(nonzero, abs(zeta2_corollary_summand(m, k, ctx)));
    }
    out.push_back(make(name + ": summands with k2 > -m2 vanish", nonzero, Real(0)));
  }
  return out;
}

std::vector<Check> mb_closure_suite(const PrecisionContext& ctx) {
  std::vector<Check> out;
  std::mt19937 rng(3);
  for (int r = 2; r <= 3; ++r) {
    Real worst(0), shift(0);
    for (int trial = 0; trial < 3; ++trial) {
      ComplexPoint s = random_point(rng, r, 2.1, 3.5);
      PrecisionScope scope(ctx);
      const MBResult a = ez_eval_mb_detailed(s, ctx);
      worst = std::max(worst, abs(a.value - ez_value(s, ctx)));
      shift = std::max(shift, abs(a.value - ez_eval_mb_detailed(s, ctx, {}, a.M + 1).value));
    }
    out.push_back(make("series vs Mellin-Barnes, depth " + std::to_string(r), worst, 10 * ctx.tol()));
    out.push_back(make("contour M vs M+1, depth " + std::to_string(r), shift, 10 * ctx.tol()));
  }
  return out;
}

std::vector<Check> limits_suite(const PrecisionContext& ctx) {
  std::vector<Check> out;
  PrecisionScope scope(ctx);
  {
    const Real t("1e-4");
    const ComplexPoint eps{Complex(t), Complex(t)};
    const Complex mb = ez_eval_mb({Complex(2) + eps[0], eps[1]}, ctx);
    out.push_back(make("near-point formula at (2,0)", abs(zeta2_near({2, 0}, eps, ctx).finite_part - mb), 10 * t));
  }
  const Real t("1e-6");
  for (int a : {1, 2, 0}) {
    const Real lambda = Real(1) / (a + 1);
    const NearPointValue v = zeta2_corollary({0, 0}, {Complex(a * t), Complex(t)}, ctx);
    out.push_back(make("finite part at (0,0), lambda = 1/" + std::to_string(a + 1),
                       abs(v.finite_part - Complex(Real(1) / 3 + lambda / 12)), Real("1e-6")));
  }
  {
    const Real u("1e-9");
    const ComplexPoint eps{Complex(1000 * u), Complex(-999 * u)};
    const Complex mb = ez_eval_mb({eps[0], eps[1]}, ctx);
    out.push_back(make("unbalanced ratio 10^3 at (0,0)", abs(zeta2_corollary({0, 0}, eps, ctx).finite_part - mb),
                       10 * (abs(eps[1]) + abs(eps[0] + eps[1]))));
  }
  {
    const Real s("1e-3");
    const ComplexPoint eps{Complex(s), Complex(s), Complex(s)};
    const Complex mb = ez_eval_mb({Complex(1) + eps[0], Complex(1) + eps[1], eps[2]}, ctx);
    out.push_back(make("depth 3 at (1,1,0)", abs(zeta3_near({1, 1, 0}, eps, ctx).value.finite_part - mb), 10 * s));
  }
  const NearPointOutcome ind = zeta3_near({1, 0, 1}, {Complex(1e-3), Complex(1e-3), Complex(1e-3)}, ctx);
  out.push_back(make("(1,0,1) is indeterminate", Real(ind.indeterminate ? 0 : 1), Real(0)));
  return out;
}

const std::map<std::string, std::function<std::vector<Check>(const PrecisionContext&)>>& registry() {
  static const std::map<std::string, std::function<std::vector<Check>(const PrecisionContext&)>> suites = {
      {"stuffle", stuffle_suite},       {"lemma1", lemma1_suite},         {"remarks", remarks_suite},
      {"corollary", corollary_suite},   {"mb-closure", mb_closure_suite}, {"limits", limits_suite},
  };
  return suites;
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"stuffle", "lemma1", "remarks", "corollary", "mb-closure", "limits"};
  return names;
}

VerifyReport verify(const std::string& suite, const PrecisionContext& ctx) {
  const auto it = registry().find(suite);
  if (it == registry().end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown verify suite: " + suite);
  }
  return {suite, it->second(ctx)};
}

}  // namespace ezl::cli
