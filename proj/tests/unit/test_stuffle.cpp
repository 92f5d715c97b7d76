#include "ezl/ez_series.hpp"
#include "ezl/stuffle.hpp"
#include "ezl/zeta.hpp"
#include "test_support.hpp"

#include <nlohmann/json.hpp>

#include <random>
#include <set>

namespace ezl {
namespace {

using testing::near;

AffineForm v(int r, std::initializer_list<int> vars) {
  AffineForm f;
  f.coeffs.assign(r, 0);
  for (int k : vars) {
    f.coeffs[k - 1] = 1;
  }
  return f;
}

ZetaFactor z(int r, std::initializer_list<std::initializer_list<int>> args) {
  ZetaFactor f;
  for (auto a : args) {
    f.args.push_back(v(r, a));
  }
  return f;
}

ZetaTerm t(long c, std::vector<ZetaFactor> fs) { return {c, std::move(fs)}; }

// Independent oracle: assign each of the r elements a slot so that both
// chains keep their order and the used slots are 0..L-1; elements sharing a
// slot merge.
std::set<std::vector<AffineForm>> brute_force(int j, int r) {
  std::set<std::vector<AffineForm>> out;
  std::vector<int> slot(r, 0);
  while (true) {
    bool ok = true;
    for (int i = 1; i < r && ok; ++i) {
      if (i != j && slot[i] <= slot[i - 1]) {
        ok = false;
      }
    }
    int used = 0;
    if (ok) {
      std::vector<int> count(r, 0);
      for (int x : slot) {
        ++count[x];
      }
      while (used < r && count[used] > 0) {
        ++used;
      }
      for (int x = used; x < r; ++x) {
        if (count[x] > 0) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<AffineForm> word(used, AffineForm{std::vector<int>(r, 0), 0});
      for (int i = 0; i < r; ++i) {
        word[slot[i]] = word[slot[i]] + AffineForm::variable(r, i);
      }
      out.insert(word);
    }
    int pos = 0;
    while (pos < r && ++slot[pos] == r) {
      slot[pos++] = 0;
    }
    if (pos == r) {
      break;
    }
  }
  return out;
}

TEST(Stuffle, Harmonic) {
  auto e = stuffle_product(1, 2);
  StuffleExpression want({t(1, {z(2, {{1}, {2}})}), t(1, {z(2, {{2}, {1}})}), t(1, {z(2, {{1, 2}})})});
  EXPECT_EQ(e.size(), 3u);
  EXPECT_TRUE(e == want) << e.to_string();
}

TEST(Stuffle, TripleA) {
  auto e = stuffle_product(2, 3);
  StuffleExpression want({t(1, {z(3, {{1}, {2}, {3}})}), t(1, {z(3, {{1}, {2, 3}})}), t(1, {z(3, {{1}, {3}, {2}})}),
                          t(1, {z(3, {{1, 3}, {2}})}), t(1, {z(3, {{3}, {1}, {2}})})});
  EXPECT_TRUE(e == want) << e.to_string();
}

TEST(Stuffle, TripleB) {
  auto e = stuffle(z(3, {{1}}).args, z(3, {{2}, {3}}).args);
  StuffleExpression want({t(1, {z(3, {{1}, {2}, {3}})}), t(1, {z(3, {{1, 2}, {3}})}), t(1, {z(3, {{2}, {1}, {3}})}),
                          t(1, {z(3, {{2}, {1, 3}})}), t(1, {z(3, {{2}, {3}, {1}})})});
  EXPECT_TRUE(e == want) << e.to_string();
}

TEST(Stuffle, DelannoyCountsMatchBruteForce) {
  for (int r = 2; r <= 6; ++r) {
    for (int j = 1; j < r; ++j) {
      auto e = stuffle_product(j, r);
      auto oracle = brute_force(j, r);
      EXPECT_EQ(static_cast<long>(e.size()), delannoy(j, r - j)) << j << "," << r;
      EXPECT_EQ(oracle.size(), e.size()) << j << "," << r;
      for (const auto& term : e.terms()) {
        EXPECT_EQ(term.coeff, 1);
        EXPECT_TRUE(oracle.count(term.factors[0].args) == 1) << term.to_string();
      }
    }
  }
  EXPECT_EQ(delannoy(3, 3), 63);
}

TEST(Isolate, Ex1) {
  auto e = isolate_target(z(3, {{1}}), z(3, {{2}, {3}}), z(3, {{1}, {2}, {3}}));
  StuffleExpression want({t(1, {z(3, {{1}}), z(3, {{2}, {3}})}), t(-1, {z(3, {{1, 2}, {3}})}),
                          t(-1, {z(3, {{2}, {1}, {3}})}), t(-1, {z(3, {{2}, {1, 3}})}), t(-1, {z(3, {{2}, {3}, {1}})})});
  EXPECT_TRUE(e == want) << e.to_string();
  EXPECT_TRUE(isolate_target(1, 3, z(3, {{1}, {2}, {3}})) == want);
}

TEST(Isolate, HarmonicRearranged) {
  auto e = isolate_target(1, 2, z(2, {{1}, {2}}));
  StuffleExpression want(
      {t(1, {z(2, {{1}}), z(2, {{2}})}), t(-1, {z(2, {{2}, {1}})}), t(-1, {z(2, {{1, 2}})})});
  EXPECT_TRUE(e == want) << e.to_string();
}

TEST(Isolate, Ex2) {
  auto e = isolate_target(z(3, {{2}, {1}}), z(3, {{3}}), z(3, {{2}, {1}, {3}}));
  StuffleExpression want({t(1, {z(3, {{2}, {1}}), z(3, {{3}})}), t(-1, {z(3, {{2}, {1, 3}})}),
                          t(-1, {z(3, {{2}, {3}, {1}})}), t(-1, {z(3, {{2, 3}, {1}})}), t(-1, {z(3, {{3}, {2}, {1}})})});
  EXPECT_TRUE(e == want) << e.to_string();
}

TEST(Isolate, Errors) {
  try {
    isolate_target(1, 3, z(3, {{3}, {1}, {2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TargetAbsent);
  }
  try {
    isolate_target(z(2, {{1}}), z(2, {{1}}), z(2, {{1}, {1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TargetAmbiguous);
  }
}

TEST(Isolate, Involution) {
  for (int r = 2; r <= 5; ++r) {
    for (int j = 1; j < r; ++j) {
      ZetaFactor id = identity_factor(r);
      ZetaFactor left{{id.args.begin(), id.args.begin() + j}};
      ZetaFactor right{{id.args.begin() + j, id.args.end()}};
      auto iso = isolate_target(j, r, id);
      StuffleExpression product({t(1, {left, right})});
      StuffleExpression others = stuffle_product(j, r) - StuffleExpression({t(1, {id})});
      EXPECT_TRUE((iso + others - product).empty());
    }
  }
}

TEST(Classify, Cases) {
  EXPECT_EQ(classify_case({2, 1, 1}), (CaseTag{false, 1}));
  EXPECT_EQ(classify_case({3, 2}), (CaseTag{false, 2}));
  EXPECT_EQ(classify_case({1, 1}), (CaseTag{true, 0}));
  EXPECT_EQ(classify_case({1, 2, 1}).to_string(), "C2");
  try {
    classify_case({1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPositive);
  }
}

TEST(Plan, Example211) {
  auto plan = expansion_plan({2, 1, 1});
  ASSERT_EQ(plan.steps[0].rule, PlanRule::StuffleIsolate);
  EXPECT_TRUE(plan.steps[0].rewrite == isolate_target(1, 3, identity_factor(3)));
  auto find = [&](const ZetaFactor& f) -> const PlanStep* {
    for (const auto& s : plan.steps) {
      if (s.rule != PlanRule::DepthReduce && s.operand.factors[0] == f) {
        return &s;
      }
    }
    return nullptr;
  };
  const PlanStep* ex2 = find(z(3, {{2}, {1}, {3}}));
  ASSERT_NE(ex2, nullptr);
  EXPECT_TRUE(ex2->rewrite == isolate_target(z(3, {{2}, {1}}), z(3, {{3}}), z(3, {{2}, {1}, {3}})));
  const PlanStep* ex4 = find(z(3, {{1, 2}, {3}}));
  ASSERT_NE(ex4, nullptr);
  StuffleExpression want4({t(1, {z(3, {{1, 2}}), z(3, {{3}})}), t(-1, {z(3, {{3}, {1, 2}})}),
                           t(-1, {z(3, {{1, 2, 3}})})});
  EXPECT_TRUE(ex4->rewrite == want4);
  const PlanStep* ex5 = find(z(3, {{2}, {3}}));
  ASSERT_NE(ex5, nullptr);
  EXPECT_EQ(ex5->rule, PlanRule::Lse2Expand);
  EXPECT_EQ(find(z(3, {{2}, {3}, {1}}))->rule, PlanRule::TaylorExpand);

  StuffleExpression replay({t(1, {z(3, {{1}}), z(3, {{2}, {3}})}), t(-1, {z(3, {{1, 2}}), z(3, {{3}})}),
                            t(1, {z(3, {{3}, {1, 2}})}), t(1, {z(3, {{1, 2, 3}})}),
                            t(-1, {z(3, {{2}, {1}}), z(3, {{3}})}), t(1, {z(3, {{2, 3}, {1}})}),
                            t(1, {z(3, {{3}, {2}, {1}})})});
  EXPECT_TRUE(plan.replay() == replay) << plan.replay().to_string();
}

TEST(Plan, Leaves) {
  auto taylor = expansion_plan({3, 2});
  ASSERT_EQ(taylor.steps.size(), 1u);
  EXPECT_EQ(taylor.steps[0].rule, PlanRule::TaylorExpand);
  auto ones = expansion_plan({1, 1, 1, 1});
  ASSERT_EQ(ones.steps.size(), 1u);
  EXPECT_EQ(ones.steps[0].rule, PlanRule::Lse2Expand);
}

TEST(Plan, TerminatesWithDecreasingMeasure) {
  for (int r = 1; r <= 5; ++r) {
    for (int mask = 0; mask < (1 << r); ++mask) {
      IntPoint m(r);
      for (int k = 0; k < r; ++k) {
        m[k] = (mask >> k & 1) ? 2 : 1;
      }
      auto plan = expansion_plan(m);
      for (const auto& s : plan.steps) {
        if (s.parent >= 0) {
          EXPECT_LT(s.measure, plan.steps[s.parent].measure);
        }
      }
      const auto leaves = plan.replay();
      for (const auto& term : leaves.terms()) {
        for (const auto& f : term.factors) {
          IntPoint c;
          for (const auto& a : f.args) {
            c.push_back(static_cast<int>(a.center(m)));
          }
          CaseTag tag = classify_case(c);
          EXPECT_TRUE(tag.all_ones || tag.j == f.depth()) << f.to_string();
          if (tag.all_ones) {
            for (const auto& a : f.args) {
              EXPECT_EQ(a, AffineForm::variable(r, std::find(a.coeffs.begin(), a.coeffs.end(), 1) - a.coeffs.begin()));
            }
          }
        }
      }
    }
  }
}

Complex zeta_any(const ComplexPoint& s, const PrecisionContext& ctx) {
  return s.size() == 1 ? zeta(s[0], ctx) : ez_value(s, ctx);
}

TEST(StuffleNumeric, IdentitiesHoldInTheDomain) {
  PrecisionContext ctx(30);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> re(2.1, 3.5);
  std::uniform_real_distribution<double> im(-2.0, 2.0);
  auto f = [&](const ComplexPoint& s) { return zeta_any(s, ctx); };
  for (int r = 2; r <= 3; ++r) {
    for (int j = 1; j < r; ++j) {
      for (int trial = 0; trial < 3; ++trial) {
        ComplexPoint s;
        for (int k = 0; k < r; ++k) {
          s.emplace_back(re(rng), im(rng));
        }
        ZetaFactor id = identity_factor(r);
        ZetaFactor left{{id.args.begin(), id.args.begin() + j}};
        ZetaFactor right{{id.args.begin() + j, id.args.end()}};
        Complex lhs = evaluate(StuffleExpression({t(1, {left, right})}), s, f);
        Complex rhs = evaluate(stuffle_product(j, r), s, f);
        EXPECT_TRUE(near(lhs, rhs, 10 * ctx.tol()));
      }
    }
  }
}

TEST(StuffleNumeric, ReplayOf211MatchesInsideDomain) {
  PrecisionContext ctx(30);
  auto f = [&](const ComplexPoint& s) { return zeta_any(s, ctx); };
  ComplexPoint s{Complex(1.7, 0.3), Complex(1.4), Complex(2.2, -0.4)};
  EXPECT_TRUE(near(evaluate(expansion_plan({2, 1, 1}).replay(), s, f), ez_value(s, ctx), 10 * ctx.tol()));
}

TEST(StuffleJson, StableAndShaped) {
  auto e = isolate_target(1, 3, identity_factor(3));
  EXPECT_EQ(e.to_json(), isolate_target(1, 3, identity_factor(3)).to_json());
  auto j = nlohmann::json::parse(e.to_json());
  ASSERT_EQ(j["terms"].size(), 5u);
  bool saw_single = false;
  for (const auto& term : j["terms"]) {
    EXPECT_TRUE(term.contains("sign"));
    if (term.contains("depth")) {
      saw_single = true;
      EXPECT_EQ(term["args"].size(), term["depth"].get<size_t>());
      EXPECT_TRUE(term["args"][0].contains("coeffs"));
      EXPECT_TRUE(term["args"][0].contains("shift"));
    } else {
      EXPECT_EQ(term["factors"].size(), 2u);
    }
  }
  EXPECT_TRUE(saw_single);
  auto plan = nlohmann::json::parse(expansion_plan({2, 1, 1}).to_json());
  EXPECT_EQ(plan["steps"][0]["rule"], "stuffle-isolate");
}

}  // namespace
}  // namespace ezl
