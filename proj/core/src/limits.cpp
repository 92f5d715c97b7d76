#include "ezl/limits.hpp"

#include "ezl/ez_series.hpp"
#include "ezl/mellin_barnes.hpp"
#include "ezl/zeta.hpp"

#include <algorithm>

namespace ezl {

namespace {

void require_size(const IntPoint& m, const ComplexPoint& eps, size_t r) {
  if (m.size() != r || eps.size() != r) {
    throw Error(ErrorKind::InvalidArgument, "center and offsets must have length " + std::to_string(r));
  }
}

// binom(x, k) as a polynomial in x.
Complex binom(const Complex& x, int k) {
  Complex p(1);
  for (int i = 0; i < k; ++i) {
    p *= x - Complex(i);
  }
  return p / factorial_real(k);
}

// zeta(-k), which is zero for even k >= 2.
bool zeta_neg_vanishes(int k) { return k >= 2 && k % 2 == 0; }

// zeta_r at a perturbed point, wherever it is defined.
Complex multiple_zeta(const ComplexPoint& s, const PrecisionContext& ctx) {
  try {
    return in_domain(s) ? ez_value(s, ctx) : ez_eval_mb(s, ctx);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::OnSingularHyperplane) {
      throw Error(ErrorKind::InvalidApproach, std::string("offsets land on a singular hyperplane: ") + e.what());
    }
    throw;
  }
}

// Polar factors of zeta_2 near the integer point (a, b), offsets named ea, eb.
std::string zeta2_poles(long a, long b, const std::string& ea, const std::string& eb) {
  std::string out;
  if (b == 1) {
    out = "1/(" + eb + ")";
  }
  const long t = a + b;
  if (t == 2 || t == 1 || (t <= 0 && t % 2 == 0)) {
    out += (out.empty() ? "" : " ") + std::string("1/(") + ea + "+" + eb + ")";
  }
  return out;
}

void finish(NearPointValue& v) {
  Complex sum(0);
  for (const auto& t : v.terms) {
    sum += t.value;
  }
  v.finite_part = sum;
}

ComplexPoint shifted(const IntPoint& m, const ComplexPoint& eps) {
  ComplexPoint s;
  for (size_t i = 0; i < m.size(); ++i) {
    s.push_back(Complex(m[i]) + eps[i]);
  }
  return s;
}

// zeta_3 with the last center coordinate <= 0; offset names label the variables.
NearPointValue zeta3_recursion(const IntPoint& m, const ComplexPoint& eps, const std::vector<std::string>& names,
                               const PrecisionContext& ctx) {
  const ComplexPoint s = shifted(m, eps);
  NearPointValue v;
  const std::string s1 = "s" + names[0].substr(3), s2 = "s" + names[1].substr(3), s3 = "s" + names[2].substr(3);
  {
    const Complex z = multiple_zeta({s[0], s[1] + s[2] - Complex(1)}, ctx);
    v.terms.push_back({"zeta2(" + s1 + "," + s2 + "+" + s3 + "-1)/(" + s3 + "-1)", z * reciprocal(s[2] - Complex(1)),
                       zeta2_poles(m[0], m[1] + m[2] - 1, names[0], names[1] + "+" + names[2])});
  }
  const int M = capital_m(m);
  for (int k = 0; k <= M; ++k) {
    if (zeta_neg_vanishes(k)) {
      continue;
    }
    const Complex c = binom(-s[2], k) * zeta(Complex(-k), ctx);
    if (c.is_zero()) {
      continue;
    }
    const Complex z = multiple_zeta({s[0], s[1] + s[2] + Complex(k)}, ctx);
    v.terms.push_back({"binom(-" + s3 + "," + std::to_string(k) + ") zeta(" + std::to_string(-k) + ") zeta2(" + s1 +
                           "," + s2 + "+" + s3 + "+" + std::to_string(k) + ")",
                       c * z, zeta2_poles(m[0], m[1] + m[2] + k, names[0], names[1] + "+" + names[2])});
  }
  v.error_terms = {"O(|" + names[2] + "|)"};
  finish(v);
  return v;
}

}  // namespace

std::vector<NearPointTerm> NearPointValue::principal() const {
  std::vector<NearPointTerm> out;
  std::copy_if(terms.begin(), terms.end(), std::back_inserter(out), [](const NearPointTerm& t) { return !t.pole.empty(); });
  return out;
}

std::string NearPointValue::error_order() const {
  std::string out;
  for (const auto& e : error_terms) {
    out += (out.empty() ? "" : "+") + e;
  }
  return out;
}

NearPointValue zeta2_near(const IntPoint& m, const ComplexPoint& eps_in, const PrecisionContext& ctx) {
  require_size(m, eps_in, 2);
  if (m[1] > 0) {
    throw Error(ErrorKind::UnsupportedCenter, "zeta2_near needs m2 <= 0");
  }
  PrecisionScope scope(ctx);
  const ComplexPoint eps = rescaled(eps_in);
  const Complex e2 = eps[1];
  const Complex e12 = eps[0] + eps[1];
  const int M = capital_m(m);
  const int base = m[0] + m[1];
  bool polar = base - 1 == 1;
  for (int k = 0; k <= M; ++k) {
    polar = polar || (base + k == 1 && !zeta_neg_vanishes(k));
  }
  if (polar && (e2.is_zero() || e12.is_zero())) {
    throw Error(ErrorKind::InvalidApproach, "the fraction terms need eps2 != 0 and eps1+eps2 != 0");
  }
  NearPointValue v;
  v.terms.push_back({"zeta(m1+m2-1+eps1+eps2)/(m2-1+eps2)",
                     zeta(Complex(base - 1) + e12, ctx) * reciprocal(Complex(m[1] - 1) + e2),
                     base - 1 == 1 ? "1/(eps1+eps2)" : ""});
  for (int k = 0; k <= M; ++k) {
    if (zeta_neg_vanishes(k)) {
      continue;
    }
    const Complex c = binom(Complex(-m[1]) - e2, k) * zeta(Complex(-k), ctx);
    const bool pole = base + k == 1;
    // A zero coefficient against a pole keeps the term at its limit, which is 0 here.
    const Complex value = c.is_zero() ? Complex(0) : c * zeta(Complex(base + k) + e12, ctx);
    v.terms.push_back({"binom(-m2-eps2," + std::to_string(k) + ") zeta(" + std::to_string(-k) +
                           ") zeta(m1+m2+" + std::to_string(k) + "+eps1+eps2)",
                       value, pole ? "1/(eps1+eps2)" : ""});
  }
  v.error_terms = {"O(|eps2|)"};
  finish(v);
  return v;
}

Complex zeta2_corollary_summand(const IntPoint& m, int k, const PrecisionContext& ctx) {
  if (m.size() != 2 || m[0] > 0 || m[1] > 0 || k < 0) {
    throw Error(ErrorKind::InvalidArgument, "summand needs m1 <= 0, m2 <= 0 and k >= 0");
  }
  PrecisionScope scope(ctx);
  for (int i = 0; i < k; ++i) {
    if (m[1] + i == 0) {
      return Complex(0);
    }
  }
  Complex c = k % 2 == 0 ? Complex(1) : Complex(-1);
  for (int i = 0; i < k; ++i) {
    c *= Complex(m[1] + i);
  }
  if (zeta_neg_vanishes(k)) {
    return Complex(0);
  }
  return c / factorial_real(k) * zeta(Complex(-k), ctx) * zeta(Complex(m[0] + m[1] + k), ctx);
}

NearPointValue zeta2_corollary(const IntPoint& m, const ComplexPoint& eps_in, const PrecisionContext& ctx) {
  require_size(m, eps_in, 2);
  if (m[0] > 0 || m[1] > 0) {
    throw Error(ErrorKind::UnsupportedCenter, "zeta2_corollary needs m1 <= 0 and m2 <= 0");
  }
  PrecisionScope scope(ctx);
  const ComplexPoint eps = rescaled(eps_in);
  const Complex e12 = eps[0] + eps[1];
  if (e12.is_zero()) {
    throw Error(ErrorKind::InvalidApproach, "the fraction term needs eps1+eps2 != 0");
  }
  const int base = m[0] + m[1];
  const Complex z = zeta(Complex(base - 1), ctx);
  NearPointValue v;
  v.terms.push_back({"zeta(m1+m2-1)/(m2-1)", z / Real(m[1] - 1), ""});
  Complex middle(0);
  for (int k = 0; k <= -m[1]; ++k) {
    middle += zeta2_corollary_summand(m, k, ctx);
  }
  v.terms.push_back({"sum_{k=0}^{-m2} (-1)^k/k! m2(m2+1)...(m2+k-1) zeta(-k) zeta(m1+m2+k)", middle, ""});
  const int n = 1 - base;
  Complex product(1);
  for (int i = m[1]; i <= -m[0]; ++i) {
    product *= Complex(i) + eps[1];
  }
  Complex last = product * reciprocal(e12) * z / factorial_real(n);
  if (n % 2 != 0) {
    last = -last;
  }
  v.terms.push_back({"(-1)^(1-m1-m2)/(1-m1-m2)! (m2+eps2)...(-m1+eps2)/(eps1+eps2) zeta(m1+m2-1)", last,
                     "1/(eps1+eps2)"});
  v.error_terms = {"O(|eps2|)", "O(|eps1+eps2|)"};
  finish(v);
  return v;
}

NearPointOutcome zeta3_near(const IntPoint& m, const ComplexPoint& eps_in, const PrecisionContext& ctx) {
  require_size(m, eps_in, 3);
  NearPointOutcome out;
  if (m[1] <= 0 && m[2] == 1) {
    out.indeterminate = true;
    out.reason = "m2 <= 0 and m3 = 1: no limit value is available";
    return out;
  }
  PrecisionScope scope(ctx);
  const ComplexPoint eps = rescaled(eps_in);
  if (m[2] <= 0) {
    out.value = zeta3_recursion(m, eps, {"eps1", "eps2", "eps3"}, ctx);
    return out;
  }
  if (m[1] > 0 || m[2] <= 1) {
    throw Error(ErrorKind::UnsupportedCenter, "zeta3_near covers m3 <= 0, or m2 <= 0 with m3 > 1");
  }
  // zeta3(s1,s2,s3) = zeta(s3) zeta2(s1,s2) - zeta2(s1+s3,s2) - zeta3(s1,s3,s2)
  //                   - zeta2(s1,s2+s3) - zeta3(s3,s1,s2).
  const ComplexPoint s = shifted(m, eps);
  NearPointValue& v = out.value;
  v.terms.push_back({"zeta(s3) zeta2(s1,s2)", zeta(s[2], ctx) * multiple_zeta({s[0], s[1]}, ctx),
                     zeta2_poles(m[0], m[1], "eps1", "eps2")});
  v.terms.push_back({"-zeta2(s1+s3,s2)", -multiple_zeta({s[0] + s[2], s[1]}, ctx),
                     zeta2_poles(m[0] + m[2], m[1], "eps1+eps3", "eps2")});
  v.terms.push_back({"-zeta2(s1,s2+s3)", -multiple_zeta({s[0], s[1] + s[2]}, ctx),
                     zeta2_poles(m[0], m[1] + m[2], "eps1", "eps2+eps3")});
  const NearPointValue a = zeta3_recursion({m[0], m[2], m[1]}, {eps[0], eps[2], eps[1]}, {"eps1", "eps3", "eps2"}, ctx);
  const NearPointValue b = zeta3_recursion({m[2], m[0], m[1]}, {eps[2], eps[0], eps[1]}, {"eps3", "eps1", "eps2"}, ctx);
  for (const auto* part : {&a, &b}) {
    const std::string tag = part == &a ? "-zeta3(s1,s3,s2): " : "-zeta3(s3,s1,s2): ";
    for (const auto& t : part->terms) {
      v.terms.push_back({tag + t.label, -t.value, t.pole});
    }
  }
  v.error_terms = {"O(|eps2|)"};
  finish(v);
  return out;
}

}  // namespace ezl
