#include "ezl/contour.hpp"
#include "ezl/zeta.hpp"
#include "test_support.hpp"

namespace ezl {
namespace {

using testing::near;
using testing::R;

// Reference digits below come from an independent arbitrary-precision
// evaluation and are frozen here.

TEST(Zeta, PositiveInteger) {
  PrecisionContext ctx(30);
  EXPECT_TRUE(near(zeta(Complex(2), ctx), Complex(R("1.6449340668482264364724151666460251892189499")), ctx.tol()));
}

TEST(Zeta, NonPositiveIntegers) {
  PrecisionContext ctx(30);
  EXPECT_TRUE(near(zeta(Complex(0), ctx), Complex(R("-0.5")), ctx.tol()));
  EXPECT_TRUE(near(zeta(Complex(-1), ctx), Complex(Real(-1) / 12), ctx.tol()));
  for (int k = 1; k <= 5; ++k) {
    EXPECT_TRUE(near(zeta(Complex(-2 * k), ctx), Complex(0), ctx.tol())) << "k = " << k;
  }
}

TEST(Zeta, ComplexArguments) {
  PrecisionContext ctx(30);
  EXPECT_TRUE(near(zeta(Complex(3, 4), ctx),
                   Complex(R("0.890554906965073258142689215589657949742467899"),
                           R("-0.00807594542432725984680909073843771045885728947")),
                   ctx.tol()));
  Complex far = zeta(Complex(-7.5, 20), ctx);
  EXPECT_TRUE(near(far,
                   Complex(R("8899.57524069966774269699256796984192211541588"),
                           R("-9367.11252657321782202387408442966595683876299")),
                   ctx.tol() * abs(far)));
}

TEST(Zeta, PoleIsRejected) {
  try {
    zeta(Complex(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleAt1);
  }
}

TEST(Zeta, SeriesAgreement) {
  // Direct summation with an integral tail bound for Re s > 2.
  PrecisionContext ctx(20);
  PrecisionScope scope(ctx);
  Complex s(Real(9), Real(0.5));
  Complex sum(0);
  const int n = 2000;
  for (int k = 1; k <= n; ++k) {
    sum += pow(Real(k), -s);
  }
  // tail < n^{1-Re s}/(Re s - 1)
  Real bound = pow(Real(n), Real(1) - s.re) / (s.re - 1);
  EXPECT_TRUE(near(zeta(s, ctx), sum, bound + 2 * ctx.tol()));
}

TEST(ZetaDeriv, KnownValues) {
  PrecisionContext ctx(30);
  EXPECT_TRUE(near(zeta_deriv(0, Complex(3), ctx), zeta(Complex(3), ctx), ctx.tol()));
  EXPECT_TRUE(near(zeta_deriv(1, Complex(2), ctx), Complex(R("-0.937548254315843753702574094567864977897860289")),
                   ctx.tol()));
  EXPECT_TRUE(near(zeta_deriv(1, Complex(0), ctx), Complex(R("-0.918938533204672741780329736405617639861397474")),
                   ctx.tol()));
  EXPECT_TRUE(near(zeta_deriv(2, Complex(0), ctx), Complex(R("-2.00635645590858485121010002672996043819899491")),
                   ctx.tol()));
  EXPECT_TRUE(near(zeta_deriv(3, Complex(-3), ctx), Complex(R("-0.0309536042186756066000430771056271341791586146")),
                   ctx.tol()));
}

TEST(Stieltjes, PaperNormalisation) {
  PrecisionContext ctx(30);
  auto g = stieltjes_table(5, ctx);
  const char* want[] = {"0.577215664901532860606512090082402431042159336",
                        "0.0728158454836767248605863758749013191377363383",
                        "-0.00484518159643615924226519301760626467953290305",
                        "-0.000342305736717224311026674423792230714285967408",
                        "0.0000968904193944708357278404240635861667043528922",
                        "-0.00000661103181084218918127779064537037358942949504"};
  for (int n = 0; n <= 5; ++n) {
    EXPECT_TRUE(near(g[n], R(want[n]), ctx.tol())) << "n = " << n;
  }
  EXPECT_TRUE(near(stieltjes_classical(1, ctx), -R(want[1]), ctx.tol()));
}

TEST(Stieltjes, MatchesContourAtTwoRadii) {
  PrecisionContext ctx(30);
  PrecisionScope scope(ctx);
  auto g = stieltjes_table(4, ctx);
  auto regular = [&](const Complex& w) { return zeta(w, ctx) - reciprocal(w - Complex(1)); };
  for (const char* radius : {"0.25", "0.5"}) {
    auto res = contour_coefficients(regular, Complex(1), R(radius), 0, 4, ctx.tol() / 100);
    for (int n = 0; n <= 4; ++n) {
      EXPECT_TRUE(near(res.coefficients[n], Complex(g[n]), 10 * ctx.tol())) << "radius " << radius << " n " << n;
    }
  }
}

TEST(LaurentAt, Centers) {
  PrecisionContext ctx(30);
  auto at1 = laurent_at(1, 1, ctx);
  EXPECT_TRUE(at1.has_pole);
  EXPECT_TRUE(near(at1.coefficients[0], Complex(stieltjes(0, ctx)), ctx.tol()));
  EXPECT_TRUE(near(at1.coefficients[1], Complex(stieltjes(1, ctx)), ctx.tol()));
  auto at2 = laurent_at(2, 0, ctx);
  EXPECT_FALSE(at2.has_pole);
  EXPECT_TRUE(near(at2.coefficients[0], zeta(Complex(2), ctx), ctx.tol()));
  auto at0 = laurent_at(0, 1, ctx);
  EXPECT_TRUE(near(at0.coefficients[0], Complex(R("-0.5")), ctx.tol()));
  EXPECT_TRUE(near(at0.coefficients[1], Complex(R("-0.918938533204672741780329736405617639861397474")), ctx.tol()));
}

TEST(LaurentAt, TruncatedEvaluation) {
  PrecisionContext ctx(30);
  auto exp1 = laurent_at(1, 12, ctx);
  Complex s(R("1.2"), R("0.1"));
  // remainder bound: |gamma_n| decay makes 1e-12 generous at radius < 1/4
  EXPECT_TRUE(near(exp1.evaluate(s), zeta(s, ctx), R("1e-12")));
}

}  // namespace
}  // namespace ezl
