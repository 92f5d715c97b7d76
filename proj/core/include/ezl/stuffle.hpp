#pragma once

#include "ezl/numeric.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ezl {

/// sum_k coeffs[k] s_{k+1} + shift over a fixed set of ambient variables.
struct AffineForm {
  std::vector<int> coeffs;
  int shift = 0;

  static AffineForm variable(int vars, int index);
  /// Value of the form at an integer point.
  long center(const IntPoint& m) const;
  Complex evaluate(const ComplexPoint& s) const;
  std::string to_string() const;

  friend AffineForm operator+(const AffineForm& a, const AffineForm& b);
  friend bool operator==(const AffineForm& a, const AffineForm& b) = default;
  friend auto operator<=>(const AffineForm& a, const AffineForm& b) = default;
};

/// zeta_d(args) with d = args.size().
struct ZetaFactor {
  std::vector<AffineForm> args;

  int depth() const { return static_cast<int>(args.size()); }
  std::string to_string() const;

  friend bool operator==(const ZetaFactor& a, const ZetaFactor& b) = default;
  friend auto operator<=>(const ZetaFactor& a, const ZetaFactor& b) = default;
};

/// Integer multiple of a product of zeta factors.
struct ZetaTerm {
  long coeff = 1;
  std::vector<ZetaFactor> factors;

  /// Sum of the factor depths.
  int depth() const;
  int sign() const { return coeff < 0 ? -1 : 1; }
  std::string to_string() const;
};

/// Formal sum of ZetaTerm. normalize() sorts factors inside each term,
/// merges equal products, drops zeros and sorts by (depth, factors).
class StuffleExpression {
 public:
  StuffleExpression() = default;
  explicit StuffleExpression(std::vector<ZetaTerm> terms);

  const std::vector<ZetaTerm>& terms() const noexcept { return terms_; }
  size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  StuffleExpression& operator+=(const StuffleExpression& o);
  StuffleExpression& operator-=(const StuffleExpression& o);
  StuffleExpression& operator*=(long c);
  StuffleExpression& normalize();

  std::string to_string() const;
  /// {"terms":[{"depth":d,"args":[{"coeffs":[...],"shift":c}],"sign":+-1}]};
  /// products carry "factors":[{"depth","args"}] instead of depth/args, and
  /// "multiplicity" appears when |coeff| > 1.
  std::string to_json() const;

 private:
  std::vector<ZetaTerm> terms_;
};

StuffleExpression operator+(StuffleExpression a, const StuffleExpression& b);
StuffleExpression operator-(StuffleExpression a, const StuffleExpression& b);
/// Term-wise product, normalised.
StuffleExpression operator*(const StuffleExpression& a, const StuffleExpression& b);
bool operator==(const StuffleExpression& a, const StuffleExpression& b);

/// The identity s_1..s_r as a ZetaFactor in r ambient variables.
ZetaFactor identity_factor(int r);

/// Quasi-shuffle decomposition of zeta(a) * zeta(b) into single zeta terms.
StuffleExpression stuffle(const std::vector<AffineForm>& a, const std::vector<AffineForm>& b);
/// zeta_j(s_1..s_j) zeta_{r-j}(s_{j+1}..s_r).
StuffleExpression stuffle_product(int j, int r);
/// D(m, n) = sum_k binom(m,k) binom(n,k) 2^k.
long delannoy(int m, int n);

/// target = left * right - (every other term of stuffle(left, right)).
StuffleExpression isolate_target(const ZetaFactor& left, const ZetaFactor& right, const ZetaFactor& target);
StuffleExpression isolate_target(int j, int r, const ZetaFactor& target);

struct CaseTag {
  bool all_ones = false;
  /// Case C_j (1-based); 0 when all_ones.
  int j = 0;

  std::string to_string() const;
  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// C_j for the largest j with m_j > 1, or ALL_ONES.
CaseTag classify_case(const IntPoint& m);

enum class PlanRule { StuffleIsolate, TaylorExpand, Lse2Expand, DepthReduce };

const char* to_string(PlanRule rule);

struct PlanStep {
  PlanRule rule;
  /// The zeta factor (or, for DepthReduce, the product) the step acts on.
  ZetaTerm operand;
  /// Centers of the operand's arguments (single factor) at the plan center.
  IntPoint centers;
  CaseTag tag;
  /// Termination measure (depth, depth - j); strictly below the parent's.
  std::pair<int, int> measure;
  int parent = -1;
  /// StuffleIsolate: the isolating identity; DepthReduce: the factors.
  StuffleExpression rewrite;
};

struct ExpansionPlan {
  IntPoint center;
  std::vector<PlanStep> steps;

  /// Rewrite of the target as a combination of products of leaf factors
  /// (Taylor or LSE2 leaves).
  StuffleExpression replay() const;
  std::string to_json() const;
};

/// Expansion plan for zeta_r(s_1..s_r) at m in (Z>=1)^r.
ExpansionPlan expansion_plan(const IntPoint& m);

/// Numeric value of the expression at s, with `zeta_r` evaluating a single
/// multiple zeta value at its argument point.
Complex evaluate(const StuffleExpression& e, const ComplexPoint& s,
                 const std::function<Complex(const ComplexPoint&)>& zeta_r);

}  // namespace ezl
