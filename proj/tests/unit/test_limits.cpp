#include "ezl/limits.hpp"
#include "ezl/mellin_barnes.hpp"
#include "ezl/zeta.hpp"
#include "test_support.hpp"

namespace ezl {
namespace {

using testing::near;

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

Complex mb_at(const IntPoint& m, const ComplexPoint& eps, const PrecisionContext& ctx) {
  ComplexPoint s;
  for (size_t i = 0; i < m.size(); ++i) {
    s.push_back(Complex(m[i]) + eps[i]);
  }
  return ez_eval_mb(s, ctx);
}

Real third() { return Real(1) / 3; }

TEST(Zeta2Near, MatchesContinuationAtTwoZero) {
  PrecisionContext ctx(20);
  const Real t("1e-4");
  const ComplexPoint eps{Complex(t), Complex(t)};
  auto v = zeta2_near({2, 0}, eps, ctx);
  EXPECT_LT(abs(v.finite_part - mb_at({2, 0}, eps, ctx)), 10 * t);
  EXPECT_EQ(v.error_order(), "O(|eps2|)");
  ASSERT_EQ(v.principal().size(), 1u);
  EXPECT_EQ(v.principal()[0].pole, "1/(eps1+eps2)");
}

TEST(Zeta2Near, ResidualShrinksLinearly) {
  PrecisionContext ctx(20);
  std::vector<Real> residual;
  for (const char* t : {"1e-3", "5e-4", "2.5e-4"}) {
    const ComplexPoint eps{Complex(Real(t)), Complex(Real(t))};
    residual.push_back(abs(zeta2_near({2, 0}, eps, ctx).finite_part - mb_at({2, 0}, eps, ctx)));
  }
  EXPECT_LE(residual[1], Real("0.55") * residual[0]);
  EXPECT_LE(residual[2], Real("0.55") * residual[1]);
}

TEST(Zeta2Near, DiagonalApproachAtOrigin) {
  PrecisionContext ctx(20);
  const Real t("1e-6");
  auto v = zeta2_near({0, 0}, {Complex(t), Complex(t)}, ctx);
  EXPECT_TRUE(near(v.finite_part, Complex(Real(3) / 8), 10 * t));
}

TEST(Zeta2Near, Errors) {
  EXPECT_EQ(kind_of([] { zeta2_near({0, 0}, {Complex(0.001), Complex(0)}); }), ErrorKind::InvalidApproach);
  EXPECT_EQ(kind_of([] { zeta2_near({2, 1}, {Complex(0.001), Complex(0.001)}); }), ErrorKind::UnsupportedCenter);
}

TEST(Zeta2Corollary, GroupsAtOrigin) {
  PrecisionContext ctx(30);
  const Complex e1(Real("1e-3")), e2(Real("2e-3"));
  auto v = zeta2_corollary({0, 0}, {e1, e2}, ctx);
  ASSERT_EQ(v.terms.size(), 3u);
  EXPECT_TRUE(near(v.terms[0].value, Complex(Real(1) / 12), 10 * ctx.tol()));
  EXPECT_TRUE(near(v.terms[1].value, Complex(Real(1) / 4), 10 * ctx.tol()));
  EXPECT_TRUE(near(v.terms[2].value, e2 / ((e1 + e2) * Real(12)), 10 * ctx.tol()));
  EXPECT_EQ(v.error_order(), "O(|eps2|)+O(|eps1+eps2|)");
  EXPECT_LT(abs(v.finite_part - mb_at({0, 0}, {e1, e2}, ctx)), 10 * (abs(e2) + abs(e1 + e2)));
}

TEST(Zeta2Corollary, DirectionDependence) {
  PrecisionContext ctx(20);
  // eps1 = a t, eps2 = t, lambda = 1/(a+1).
  const std::pair<int, Real> cases[] = {{1, Real(3) / 8}, {2, Real(13) / 36}, {0, Real(5) / 12}};
  for (const auto& [a, want] : cases) {
    const Real lambda = Real(1) / (a + 1);
    EXPECT_TRUE(near(Real(1) / 3 + lambda / 12, want, Real("1e-30")));
    const Real t("1e-4");
    auto v = zeta2_corollary({0, 0}, {Complex(a * t), Complex(t)}, ctx);
    // The closed form is exact in the limit along the ray.
    EXPECT_TRUE(near(v.finite_part, Complex(want), 10 * t)) << a;
    Complex f1 = mb_at({0, 0}, {Complex(a * t), Complex(t)}, ctx);
    Complex f2 = mb_at({0, 0}, {Complex(a * t / 2), Complex(t / 2)}, ctx);
    EXPECT_TRUE(near(f2 * Real(2) - f1, Complex(want), Real("1e-6"))) << a;
  }
}

TEST(Zeta2Corollary, UnbalancedRatio) {
  PrecisionContext ctx(20);
  const Real u("1e-9");
  const Complex e1(Real(1000) * u), e2(Real(-999) * u);
  auto v = zeta2_corollary({0, 0}, {e1, e2}, ctx);
  EXPECT_TRUE(near(v.finite_part, Complex(third() + Real(-999) / 12), 10 * (abs(e2) + abs(e1 + e2))));
  EXPECT_LT(abs(v.finite_part - mb_at({0, 0}, {e1, e2}, ctx)), 10 * (abs(e2) + abs(e1 + e2)));
}

TEST(Zeta2Corollary, MinusOneZero) {
  PrecisionContext ctx(20);
  const Real t("1e-4");
  const Complex e1(2 * t), e2(t);
  auto v = zeta2_corollary({-1, 0}, {e1, e2}, ctx);
  EXPECT_LT(abs(v.finite_part - mb_at({-1, 0}, {e1, e2}, ctx)), 10 * (abs(e2) + abs(e1 + e2)));
}

TEST(Zeta2Corollary, VanishingSummands) {
  PrecisionContext ctx(20);
  for (const IntPoint& m : {IntPoint{0, 0}, IntPoint{-1, 0}, IntPoint{-2, -1}, IntPoint{-3, -2}}) {
    for (int k = -m[1] + 1; k <= 1 - m[0] - m[1] + 2; ++k) {
      EXPECT_TRUE(zeta2_corollary_summand(m, k, ctx).is_zero()) << m[0] << "," << m[1] << " k=" << k;
    }
  }
  EXPECT_FALSE(zeta2_corollary_summand({-1, -1}, 1, ctx).is_zero());
}

TEST(Zeta2Corollary, AgreesWithNearPointFormula) {
  PrecisionContext ctx(20);
  const Real t("1e-6");
  for (const IntPoint& m : {IntPoint{0, 0}, IntPoint{-1, 0}, IntPoint{-2, -1}, IntPoint{0, -3}}) {
    const ComplexPoint eps{Complex(3 * t), Complex(t)};
    EXPECT_TRUE(near(zeta2_corollary(m, eps, ctx).finite_part, zeta2_near(m, eps, ctx).finite_part, 100 * t))
        << m[0] << "," << m[1];
  }
}

TEST(Zeta2Corollary, Errors) {
  EXPECT_EQ(kind_of([] { zeta2_corollary({0, 0}, {Complex(-0.001), Complex(0.001)}); }), ErrorKind::InvalidApproach);
  EXPECT_EQ(kind_of([] { zeta2_corollary({1, 0}, {Complex(0.001), Complex(0.001)}); }),
            ErrorKind::UnsupportedCenter);
}

TEST(Zeta3Near, RecursionAtOneOneZero) {
  PrecisionContext ctx(20);
  const Real t("1e-3");
  const ComplexPoint eps{Complex(t), Complex(t), Complex(t)};
  auto out = zeta3_near({1, 1, 0}, eps, ctx);
  ASSERT_FALSE(out.indeterminate);
  EXPECT_EQ(out.value.error_order(), "O(|eps3|)");
  EXPECT_LT(abs(out.value.finite_part - mb_at({1, 1, 0}, eps, ctx)), 10 * t);
}

TEST(Zeta3Near, HarmonicProductAtOneZeroTwo) {
  PrecisionContext ctx(20);
  const Real t("1e-3");
  const ComplexPoint eps{Complex(t), Complex(2 * t), Complex(t)};
  auto out = zeta3_near({1, 0, 2}, eps, ctx);
  ASSERT_FALSE(out.indeterminate);
  EXPECT_EQ(out.value.error_order(), "O(|eps2|)");
  EXPECT_LT(abs(out.value.finite_part - mb_at({1, 0, 2}, eps, ctx)), 10 * abs(eps[1]));
}

TEST(Zeta3Near, ExcludedCaseIsIndeterminate) {
  for (const IntPoint& m : {IntPoint{1, 0, 1}, IntPoint{0, -1, 1}, IntPoint{2, 0, 1}}) {
    auto out = zeta3_near(m, {Complex(0.001), Complex(0.001), Complex(0.001)});
    EXPECT_TRUE(out.indeterminate);
    EXPECT_TRUE(out.value.terms.empty());
  }
}

TEST(Zeta3Near, UnsupportedCenters) {
  EXPECT_EQ(kind_of([] { zeta3_near({1, 1, 1}, {Complex(0.001), Complex(0.001), Complex(0.001)}); }),
            ErrorKind::UnsupportedCenter);
  EXPECT_EQ(kind_of([] { zeta3_near({1, 2, 3}, {Complex(0.001), Complex(0.001), Complex(0.001)}); }),
            ErrorKind::UnsupportedCenter);
}

}  // namespace
}  // namespace ezl
