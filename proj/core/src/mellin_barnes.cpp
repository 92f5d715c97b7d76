#include "ezl/mellin_barnes.hpp"

#include "ezl/em_series.hpp"
#include "ezl/gamma.hpp"
#include "ezl/zeta.hpp"
#include "line_quadrature.hpp"

#include <algorithm>

namespace ezl {

namespace {

std::string suffix_name(int j, int r) {
  std::string out;
  for (int i = j; i <= r; ++i) {
    if (i > j) {
      out += "+";
    }
    out += "s" + std::to_string(i);
  }
  return out;
}

void require_depth(const ComplexPoint& s, int least) {
  if (static_cast<int>(s.size()) < least) {
    throw Error(ErrorKind::InvalidArgument, "depth must be at least " + std::to_string(least));
  }
}

bool nonpositive_integer(const Complex& z) {
  long k = 0;
  return is_integer(z, k) && k <= 0;
}

// binom(-w, k) = prod_{i<k} (-w - i) / (i + 1).
Complex binomial_negated(const Complex& w, int k) {
  Complex out(1);
  for (int i = 0; i < k; ++i) {
    out *= (-w - Complex(i)) / Complex(i + 1);
  }
  return out;
}

}  // namespace

Real RegionCheck::margin(const ComplexPoint& s) const {
  Real best(0);
  Real tail(0);
  const int r = static_cast<int>(s.size());
  for (int j = r; j >= 1; --j) {
    tail += s[j - 1].re;
    Real m = tail - (Real(r - j - M) + eta);
    if (j == r || m < best) {
      best = m;
    }
  }
  return best;
}

bool RegionCheck::contains(const ComplexPoint& s) const {
  return static_cast<int>(s.size()) == depth && margin(s) > 0;
}

int capital_m(const IntPoint& m) {
  const int r = static_cast<int>(m.size());
  long best = 0;
  long tail = 0;
  for (int j = r; j >= 1; --j) {
    tail += m[j - 1];
    long v = r - j - tail;
    if (j == r || v > best) {
      best = v;
    }
  }
  return static_cast<int>(best);
}

bool region_ok(const ComplexPoint& s, int M, const Real& eta) {
  return RegionCheck{static_cast<int>(s.size()), M, eta}.contains(s);
}

std::string singular_hyperplane(const ComplexPoint& s) {
  const int r = static_cast<int>(s.size());
  long l = 0;
  if (r >= 1 && is_integer(s[r - 1], l) && l == 1) {
    return suffix_name(r, r) + "=1";
  }
  if (r >= 2 && is_integer(s[r - 2] + s[r - 1], l) && (l == 2 || l == 1 || l == 0 || (l <= -2 && l % 2 == 0))) {
    return suffix_name(r - 1, r) + "=" + std::to_string(l);
  }
  Complex tail(0);
  if (r >= 2) {
    tail = s[r - 2] + s[r - 1];
  }
  for (int j = r - 2; j >= 1; --j) {
    tail += s[j - 1];
    if (is_integer(tail, l) && l <= r - j + 1) {
      return suffix_name(j, r) + "=" + std::to_string(l);
    }
  }
  return {};
}

int contour_index(const ComplexPoint& s, const Real& eta) {
  IntPoint nearest;
  for (const auto& z : s) {
    nearest.push_back(boost::multiprecision::round(z.re).convert_to<int>());
  }
  int M = std::max(capital_m(nearest) + 1, 1);
  const Real quarter(0.25);
  while (RegionCheck{static_cast<int>(s.size()), M, eta}.margin(s) < quarter) {
    ++M;
  }
  return M;
}

namespace detail {

Real mb_tol(const PrecisionContext& ctx) { return ctx.tol() / 1000; }

namespace {

template <class T>
T zeta_of(const std::vector<T>& args, const Real& tol) {
  if constexpr (std::is_same_v<T, Complex>) {
    return em_zeta(ComplexTraits{}, args, tol).value;
  } else {
    return em_zeta(JetTraits{}, args, tol).value;
  }
}

bool real_arguments(const std::vector<Complex>& s) {
  return std::all_of(s.begin(), s.end(), [](const Complex& z) { return z.im == 0; });
}

bool real_arguments(const std::vector<Jet>& s) {
  return std::all_of(s.begin(), s.end(), [](const Jet& j) {
    return std::all_of(j.coefficients().begin(), j.coefficients().end(), [](const Complex& c) { return c.im == 0; });
  });
}

}  // namespace

// The integral for Complex or Jet arguments (Jet: Taylor coefficients in s).
template <class T>
LineOutcome<T> line_integral(const std::vector<T>& s, int M, const Real& tol, const MBConfig& cfg) {
  const int r = static_cast<int>(s.size());
  const Real alpha = Real(M) - cfg.eta;
  const Real guard = abs(constant(s[r - 1]).im) + 2;
  // Node errors add up over the truncated line.
  const Real node_tol = tol / (100 * (2 * guard + 80));
  const Real loose(1e-3);
  const Real tiny(1e-300);
  auto f = [&](const Real& t) {
    const Complex z(alpha, t);
    std::vector<T> args(s.begin(), s.end() - 1);
    args.back() = args.back() + s[r - 1] + z;
    T value = gamma(s[r - 1] + z);
    // Gamma(-z) zeta(-z) = (2 pi)^{-z} zeta(1+z) / (2 cos(pi z / 2)).
    value *= pow(2 * pi(), -z) / (cos(z * Complex(pi() / 2)) * Complex(2));
    Real weight = std::max(magnitude(value), tiny);
    value *= zeta_raw(Complex(1) + z, std::min(node_tol / weight, loose));
    weight = std::max(magnitude(value), tiny);
    value *= zeta_of(args, std::min(node_tol / weight, loose));
    return value;
  };
  return integrate_line<T>(f, guard, real_arguments(s), tol, cfg);
}

template LineOutcome<Jet> line_integral<Jet>(const std::vector<Jet>&, int, const Real&, const MBConfig&);

MBIntegral mb_integral_raw(const ComplexPoint& s, int M, const Real& tol, const MBConfig& cfg) {
  require_depth(s, 2);
  if (!region_ok(s, M, cfg.eta)) {
    throw Error(ErrorKind::RegionViolation,
                "Re(s_j+...+s_r) > r-j-M+eta fails for M = " + std::to_string(M) + ", eta = " + to_decimal(cfg.eta, 6));
  }
  auto out = line_integral<Complex>(s, M, tol, cfg);
  return {out.value, out.error, out.nodes, out.extent, out.step};
}

MBResult ez_eval_mb_raw(const ComplexPoint& s, int M, const Real& tol, const MBConfig& cfg) {
  const int r = static_cast<int>(s.size());
  require_depth(s, 1);
  if (auto plane = singular_hyperplane(s); !plane.empty()) {
    throw Error(ErrorKind::OnSingularHyperplane, plane);
  }
  if (r == 1) {
    return {zeta_raw(s[0], tol), tol, 0};
  }
  if (M == 0) {
    M = contour_index(s, cfg.eta);
  } else if (!region_ok(s, M, cfg.eta)) {
    throw Error(ErrorKind::RegionViolation, "contour Re z = " + std::to_string(M) + " - eta is not admissible at s");
  }
  const Complex& last = s[r - 1];
  auto merged = [&](const Complex& shift) {
    ComplexPoint args(s.begin(), s.end() - 1);
    args.back() += last + shift;
    return args;
  };

  Real error(0);
  Complex total;
  {
    Complex c = reciprocal(last - Complex(1));
    MBResult sub = ez_eval_mb_raw(merged(Complex(-1)), 0, tol / (1 + abs(c)), cfg);
    total += c * sub.value;
    error += abs(c) * sub.error;
  }
  for (int k = 0; k < M; ++k) {
    if (k >= 2 && k % 2 == 0) {
      continue;
    }
    Complex c = binomial_negated(last, k) * zeta_raw(Complex(-k), tol);
    MBResult sub = ez_eval_mb_raw(merged(Complex(k)), 0, tol / (1 + abs(c)), cfg);
    total += c * sub.value;
    error += abs(c) * sub.error;
  }
  if (!nonpositive_integer(last)) {
    Complex g = rgamma(last);
    MBIntegral integral = mb_integral_raw(s, M, tol / (1 + abs(g)), cfg);
    total += g * integral.value;
    error += abs(g) * integral.error;
  }
  return {total, error, M};
}

}  // namespace detail

MBIntegral mb_integral_detailed(const ComplexPoint& s, const Real& alpha, const PrecisionContext& ctx,
                                const MBConfig& cfg) {
  PrecisionScope scope(ctx);
  const Real a = rescaled(alpha);
  const Real ceiling = boost::multiprecision::ceil(a);
  if (ceiling == a) {
    throw Error(ErrorKind::InvalidArgument, "contour abscissa must not be an integer");
  }
  MBConfig local = cfg;
  local.eta = ceiling - a;
  return detail::mb_integral_raw(rescaled(s), ceiling.convert_to<int>(), detail::mb_tol(ctx), local);
}

Complex mb_integral(const ComplexPoint& s, const Real& alpha, const PrecisionContext& ctx, const MBConfig& cfg) {
  return mb_integral_detailed(s, alpha, ctx, cfg).value;
}

MBResult ez_eval_mb_detailed(const ComplexPoint& s, const PrecisionContext& ctx, const MBConfig& cfg, int M) {
  PrecisionScope scope(ctx);
  return detail::ez_eval_mb_raw(rescaled(s), M, detail::mb_tol(ctx), cfg);
}

Complex ez_eval_mb(const ComplexPoint& s, const PrecisionContext& ctx, const MBConfig& cfg) {
  return ez_eval_mb_detailed(s, ctx, cfg).value;
}

Complex integral_branch(const ComplexPoint& s, int M, const PrecisionContext& ctx, const MBConfig& cfg) {
  require_depth(s, 2);
  PrecisionScope scope(ctx);
  ComplexPoint x = rescaled(s);
  if (nonpositive_integer(x.back())) {
    return Complex(0);
  }
  Complex g = rgamma(x.back());
  return g * detail::mb_integral_raw(x, M, detail::mb_tol(ctx) / (1 + abs(g)), cfg).value;
}

Complex f_deriv(const MultiIndex& n, const IntPoint& k, const Complex& z, const PrecisionContext& ctx) {
  const int l = static_cast<int>(k.size());
  if (l < 2 || static_cast<int>(n.size()) != l) {
    throw Error(ErrorKind::InvalidArgument, "f_deriv needs l >= 2 and a multi-index of length l");
  }
  int order = 0;
  for (int x : n) {
    if (x < 0) {
      throw Error(ErrorKind::InvalidArgument, "derivative orders must be non-negative");
    }
    order += x;
  }
  PrecisionScope scope(ctx);
  const Complex w = rescaled(z);
  auto layout = jet_layout(l, order, n);
  std::vector<Jet> s;
  for (int i = 0; i < l; ++i) {
    s.push_back(Jet::variable(layout, i, Complex(k[i])));
  }
  std::vector<Jet> args(s.begin(), s.end() - 1);
  args.back() = args.back() + s[l - 1] + w;
  Jet value = gamma(s[l - 1] + w) * rgamma(s[l - 1]);
  value *= em_zeta(JetTraits{}, args, ctx.inner_tol()).value;
  Real scale(1);
  for (int x : n) {
    scale *= factorial_real(x);
  }
  return value.coefficient(n) * scale;
}

std::vector<long long> redistribute_merged_variable(int a) {
  if (a < 0) {
    throw Error(ErrorKind::InvalidArgument, "exponent must be non-negative");
  }
  std::vector<long long> row{1};
  for (int i = 1; i <= a; ++i) {
    row.push_back(row.back() * (a - i + 1) / i);
  }
  return row;
}

}  // namespace ezl
