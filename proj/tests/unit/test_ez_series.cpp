#include "ezl/contour.hpp"
#include "ezl/ez_series.hpp"
#include "ezl/zeta.hpp"
#include "test_support.hpp"

#include <random>

namespace ezl {
namespace {

using testing::near;
using testing::R;

TEST(Domain, Predicate) {
  EXPECT_TRUE(in_domain({Complex(1), Complex(2)}));
  EXPECT_FALSE(in_domain({Complex(2), Complex(1)}));
  EXPECT_FALSE(in_domain({Complex(1), Complex(1), Complex(1)}));
  EXPECT_TRUE(in_domain({Complex(1.5, 7), Complex(1.5, -7)}));
  EXPECT_FALSE(in_domain({Complex(0.5), Complex(1.5)}));
  EXPECT_TRUE((DomainDescriptor{3}.contains({Complex(1.1), Complex(1), Complex(1.1)})));
}

TEST(EzValue, KnownValues) {
  PrecisionContext ctx(30);
  EXPECT_TRUE(near(ez_value({Complex(1), Complex(2)}, ctx), zeta(Complex(3), ctx), ctx.tol()));
  Real p = pi();
  EXPECT_TRUE(near(ez_value({Complex(2), Complex(2)}, ctx), Complex(p * p * p * p / 120), ctx.tol()));
  EXPECT_TRUE(near(ez_value({Complex(1.5, 2), Complex(2.5, -1)}, ctx),
                   Complex(R("0.21338189612562749458379148582774257694021389119"),
                           R("0.23728379975556374852221119302823907103317080928536")),
                   ctx.tol()));
}

TEST(EzValue, OutOfDomain) {
  try {
    ez_value({Complex(2), Complex(1)});
    FAIL() << "expected OutOfDomain";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfDomain);
  }
}

TEST(EzValue, HarmonicSymmetry) {
  PrecisionContext ctx(30);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(1.2, 4.0);
  std::uniform_real_distribution<double> im(-3.0, 3.0);
  for (int i = 0; i < 10; ++i) {
    Complex a(re(rng), im(rng));
    Complex b(re(rng), im(rng));
    Complex lhs = ez_value({a, b}, ctx) + ez_value({b, a}, ctx) + zeta(a + b, ctx);
    EXPECT_TRUE(near(lhs, zeta(a, ctx) * zeta(b, ctx), 10 * ctx.tol())) << "point " << i;
  }
}

TEST(EzValue, DoublingTheBudgetStaysWithinTheTailBound) {
  PrecisionContext ctx(30);
  ComplexPoint s{Complex(1.3, 0.5), Complex(2.1, -0.5), Complex(1.7)};
  auto a = ez_value_detailed(s, ctx, {.n = 40});
  auto b = ez_value_detailed(s, ctx, {.n = 80});
  EXPECT_LE(abs(a.value - b.value), a.tail_bound + b.tail_bound + ctx.inner_tol());
}

TEST(EzDeriv, ZeroIndexIsValue) {
  PrecisionContext ctx(30);
  ComplexPoint q{Complex(1), Complex(2)};
  Complex v = ez_value(q, ctx);
  Complex d = ez_deriv({0, 0}, q, ctx);
  EXPECT_TRUE(v.re == d.re && v.im == d.im);
}

TEST(EzDeriv, MatchesContourDifferentiation) {
  PrecisionContext ctx(30);
  {
    auto f = [&](const Complex& w) { return ez_value({Complex(1), w}, ctx); };
    auto c = contour_coefficients(f, Complex(2), Real(0.25), 0, 1, ctx.tol());
    EXPECT_TRUE(near(ez_deriv({0, 1}, {Complex(1), Complex(2)}, ctx), c.coefficients[1], 10 * ctx.tol()));
  }
  {
    auto f = [&](const Complex& w) { return ez_value({w, Complex(2)}, ctx); };
    auto c = contour_coefficients(f, Complex(2), Real(0.25), 0, 1, ctx.tol());
    EXPECT_TRUE(near(ez_deriv({1, 0}, {Complex(2), Complex(2)}, ctx), c.coefficients[1], 10 * ctx.tol()));
  }
}

TEST(EzDeriv, KnownValues) {
  PrecisionContext ctx(30);
  EXPECT_TRUE(near(ez_deriv({0, 1}, {Complex(1), Complex(2)}, ctx),
                   Complex(R("-2.4257397234045623474608631994311038697433275126978")), ctx.tol()));
  EXPECT_TRUE(near(ez_deriv({1, 0}, {Complex(2), Complex(2)}, ctx),
                   Complex(R("-0.16825776732319482599689368745746238685108923824076")), ctx.tol()));
}

TEST(EzDeriv, MixedSecondOrder) {
  PrecisionContext ctx(20);
  auto f = [&](const ComplexPoint& w) { return ez_value(w, ctx); };
  auto poly = polydisc_coefficients(f, {Complex(2), Complex(3)}, Real(0.25), 2, ctx.tol());
  for (size_t i = 0; i < poly.monomials.size(); ++i) {
    const auto& l = poly.monomials[i];
    Real scale = factorial_real(l[0]) * factorial_real(l[1]);
    EXPECT_TRUE(near(ez_deriv(l, {Complex(2), Complex(3)}, ctx), poly.coefficients[i] * scale, 100 * ctx.tol()))
        << l[0] << "," << l[1];
  }
}

}  // namespace
}  // namespace ezl
