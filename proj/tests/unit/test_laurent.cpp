#include "ezl/ez_series.hpp"
#include "ezl/laurent.hpp"
#include "ezl/mellin_barnes.hpp"
#include "ezl/zeta.hpp"
#include "test_support.hpp"

#include <random>

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

ComplexPoint around(const IntPoint& m, std::mt19937& rng, double radius) {
  std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
  ComplexPoint s;
  for (int c : m) {
    const double a = phase(rng);
    s.emplace_back(Real(c) + Real(radius * std::cos(a)), Real(radius * std::sin(a)));
  }
  return s;
}

TEST(MultipleStieltjes, DepthTwoReducesToClassicalConstants) {
  PrecisionContext ctx(30);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_TRUE(near(multiple_stieltjes({n, 0}, ctx), Complex(stieltjes(n, ctx)), 10 * ctx.tol())) << n;
  }
  EXPECT_TRUE(near(multiple_stieltjes({0, 0}, ctx), Complex(testing::R("0.5772156649015328606065120900824")), 1e-25));
  EXPECT_TRUE(near(multiple_stieltjes({1, 0}, ctx), Complex(testing::R("0.0728158454836767248605863758750")), 1e-25));
}

TEST(MultipleStieltjes, DepthOneIsStieltjes) {
  PrecisionContext ctx(30);
  EXPECT_TRUE(near(multiple_stieltjes({2}, ctx), Complex(stieltjes(2, ctx)), 10 * ctx.tol()));
}

TEST(MultipleStieltjes, TableMatchesSingleExtraction) {
  PrecisionContext ctx(30);
  for (const auto& [n, g] : multiple_stieltjes_table(2, 3, ctx)) {
    EXPECT_TRUE(near(g, multiple_stieltjes(n, ctx), 10 * ctx.tol()));
  }
  for (const auto& [n, g] : multiple_stieltjes_table(3, 2, ctx)) {
    EXPECT_TRUE(near(g, multiple_stieltjes(n, ctx), 10 * ctx.tol()));
  }
}

TEST(MultipleStieltjes, OrderCap) {
  EXPECT_EQ(kind_of([] { multiple_stieltjes({7, 0}); }), ErrorKind::OrderCapExceeded);
}

TEST(StieltjesA, ZerothSliceIsZeta) {
  PrecisionContext ctx(30);
  const auto g = stieltjes_slice(0, 60, ctx);
  for (int k = 0; k < 8; ++k) {
    const double a = 0.785398163397448 * k + 0.1;
    Complex s1(Real(1) + Real(0.25 * std::cos(a)), Real(0.25 * std::sin(a)));
    Complex x = s1 - Complex(1);
    Complex sum(0);
    for (int n = 59; n >= 0; --n) {
      sum = sum * x + g[n];
    }
    EXPECT_TRUE(near(sum + reciprocal(x), zeta(s1, ctx), 10 * ctx.tol())) << k;
  }
}

TEST(StieltjesA, FirstSliceIsDoubleEulerConstant) {
  PrecisionContext ctx(30);
  for (const Complex& s1 : {Complex(1.1), Complex(1.2), Complex(1.15, 0.05)}) {
    EXPECT_TRUE(near(stieltjes_a(1, s1, 60, ctx), gamma2_euler(s1, ctx), 1e-20));
  }
}

TEST(Gamma2Euler, RejectsOutsideTheHalfPlane) {
  EXPECT_EQ(kind_of([] { gamma2_euler(Complex(0.5)); }), ErrorKind::OutOfDomain);
}

TEST(ExpandPositive, InteriorPointIsTaylor) {
  PrecisionContext ctx(30);
  auto e = expand_positive({3, 2}, 2, ctx);
  ASSERT_EQ(e.terms.size(), 1u);
  EXPECT_FALSE(e.has_poles());
  EXPECT_TRUE(near(e.coefficient({}, {0, 0}), ez_value({Complex(3), Complex(2)}, ctx), 10 * ctx.tol()));
  EXPECT_TRUE(near(e.coefficient({}, {1, 0}), ez_deriv({1, 0}, {Complex(3), Complex(2)}, ctx), 10 * ctx.tol()));
  // Coefficients are derivatives over n!.
  EXPECT_TRUE(near(e.coefficient({}, {0, 2}) * Complex(2), ez_deriv({0, 2}, {Complex(3), Complex(2)}, ctx),
                   10 * ctx.tol()));
}

TEST(ExpandPositive, WorkedExampleAtTwoOneOne) {
  PrecisionContext ctx(30);
  auto e = expand_positive({2, 1, 1}, 2, ctx);
  const Complex z2 = zeta(Complex(2), ctx);
  const Complex double_pole = e.coefficient({suffix_factor(3, 3, 1), suffix_factor(2, 3, 2)}, {0, 0, 0});
  EXPECT_TRUE(near(double_pole, z2, 10 * ctx.tol()));
  const Complex simple = e.coefficient({suffix_factor(3, 3, 1)}, {0, 0, 0});
  const Complex want = z2 * Complex(stieltjes(0, ctx)) - zeta(Complex(3), ctx) - ez_value({Complex(1), Complex(2)}, ctx);
  EXPECT_TRUE(near(simple, want, 10 * ctx.tol()));
  // The double-pole numerator is zeta(s1) itself.
  const auto t = zeta_taylor(Complex(2), 2, ctx);
  EXPECT_TRUE(near(e.coefficient({suffix_factor(3, 3, 1), suffix_factor(2, 3, 2)}, {2, 0, 0}), t[2], 10 * ctx.tol()));
  EXPECT_TRUE(near(e.coefficient({suffix_factor(3, 3, 1), suffix_factor(2, 3, 2)}, {0, 1, 0}), Complex(0),
                   10 * ctx.tol()));
}

TEST(ExpandPositive, AllOnesIsTheStieltjesExpansion) {
  PrecisionContext ctx(30);
  auto e = expand_positive({1, 1}, 2, ctx);
  EXPECT_TRUE(near(e.coefficient({suffix_factor(2, 2, 1), suffix_factor(1, 2, 2)}, {0, 0}), Complex(1), 1e-40));
  EXPECT_TRUE(near(e.coefficient({suffix_factor(2, 2, 1)}, {0, 1}), multiple_stieltjes({0, 1}, ctx), 10 * ctx.tol()));
}

TEST(ExpandPositive, ReconstructsNearTheCenter) {
  PrecisionContext ctx(30);
  std::mt19937 rng(5);
  for (const IntPoint& m : {IntPoint{2, 1}, IntPoint{1, 1}, IntPoint{3, 2}}) {
    auto e = expand_positive(m, 4, ctx);
    for (int i = 0; i < 3; ++i) {
      ComplexPoint s = around(m, rng, 1e-2);
      Complex want = ez_eval_mb(s, ctx);
      EXPECT_LT(abs(e.evaluate(s) - want), 10 * e.top_order_size(s) + 10 * ctx.tol()) << "m[0]=" << m[0];
    }
  }
}

TEST(ExpandPositive, AgreesWithContinuationAtDepthThree) {
  PrecisionContext ctx(20);
  std::mt19937 rng(9);
  for (const IntPoint& m : {IntPoint{2, 1, 1}, IntPoint{1, 1, 1}}) {
    auto e = expand_positive(m, 3, ctx);
    ComplexPoint s = around(m, rng, 1e-2);
    EXPECT_LT(abs(e.evaluate(s) - ez_eval_mb(s, ctx)), 10 * e.top_order_size(s) + 10 * ctx.tol());
  }
}

TEST(ExpandPositive, Errors) {
  EXPECT_EQ(kind_of([] { expand_positive({0, 1}, 1); }), ErrorKind::NotPositive);
  EXPECT_EQ(kind_of([] { expand_positive({2, 1}, 7); }), ErrorKind::OrderCapExceeded);
}

TEST(RestrictedExpand, DoubleDiagonal) {
  PrecisionContext ctx(30);
  auto e = restricted_expand({1, 1}, 2, ctx);
  EXPECT_EQ(e.pole_order(), 2);
  EXPECT_TRUE(near(e.coefficient(-2), Complex(0.5), 10 * ctx.tol()));
  EXPECT_TRUE(near(e.coefficient(-1), Complex(stieltjes(0, ctx)), 10 * ctx.tol()));
  // (zeta(s)^2 - zeta(2s)) / 2 at s = 1 + x.
  Complex x(Real(1) / 1000);
  Complex s = Complex(1) + x;
  Complex want = (zeta(s, ctx) * zeta(s, ctx) - zeta(s * Complex(2), ctx)) * Complex(0.5);
  EXPECT_TRUE(near(e.evaluate(s), want, 1e-7));
}

TEST(RestrictedExpand, TripleDiagonalLeadingTerm) {
  PrecisionContext ctx(30);
  auto e = restricted_expand({1, 1, 1}, 0, ctx);
  EXPECT_EQ(e.pole_order(), 3);
  EXPECT_TRUE(near(e.coefficient(-3), Complex(Real(1) / 6), 10 * ctx.tol()));
}

TEST(RestrictedExpand, FixedCoordinatesStayFixed) {
  PrecisionContext ctx(30);
  auto e = restricted_expand({2, 1, 1}, 1, ctx);
  EXPECT_EQ(e.restricted, (std::vector<int>{2, 3}));
  // zeta_3(2, s, s) ~ zeta(2) / ((s-1)(2s-2)).
  EXPECT_TRUE(near(e.coefficient(-2), zeta(Complex(2), ctx) * Complex(0.5), 10 * ctx.tol()));
}

TEST(StieltjesSum, Examples) {
  PrecisionContext ctx(30);
  const Complex g(stieltjes(0, ctx));
  const Complex g1(stieltjes(1, ctx));
  EXPECT_TRUE(near(stieltjes_sum(0, 2, ctx), g, 10 * ctx.tol()));
  EXPECT_TRUE(near(stieltjes_sum(0, 1, ctx), g, 10 * ctx.tol()));
  Complex want = (g * g + g1 * Complex(2) - zeta(Complex(2), ctx)) * Complex(0.5);
  EXPECT_TRUE(near(stieltjes_sum(1, 2, ctx), want, 10 * ctx.tol()));
}

TEST(StieltjesSum, PathsAgreeUpToThirdOrder) {
  PrecisionContext ctx(30);
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 3; ++n) {
      EXPECT_NO_THROW(stieltjes_sum(n, r, ctx)) << r << " " << n;
    }
  }
}

TEST(Lemma1, PoleCheck) {
  PrecisionContext ctx(20);
  EXPECT_TRUE(lemma1_pole_check({1, 1}, ctx));
  EXPECT_TRUE(lemma1_pole_check({3, 2}, ctx));
}

TEST(Lemma1, ReportShape) {
  PrecisionContext ctx(20);
  auto report = lemma1_pole_report({1, 1}, ctx, 3, 2);
  for (const auto& sizes : report.sizes) {
    EXPECT_EQ(sizes.size(), 3u);
  }
  EXPECT_TRUE(report.bounded);
}

}  // namespace
}  // namespace ezl
