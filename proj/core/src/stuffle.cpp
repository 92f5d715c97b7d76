#include "ezl/stuffle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace ezl {

AffineForm AffineForm::variable(int vars, int index) {
  AffineForm f;
  f.coeffs.assign(vars, 0);
  f.coeffs[index] = 1;
  return f;
}

long AffineForm::center(const IntPoint& m) const {
  long c = shift;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    c += static_cast<long>(coeffs[k]) * m[k];
  }
  return c;
}

Complex AffineForm::evaluate(const ComplexPoint& s) const {
  Complex z(shift);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) {
      z += s[k] * Real(coeffs[k]);
    }
  }
  return z;
}

std::string AffineForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) {
      continue;
    }
    if (!first) {
      out << '+';
    }
    if (coeffs[k] != 1) {
      out << coeffs[k];
    }
    out << 's' << (k + 1);
    first = false;
  }
  if (shift != 0 || first) {
    if (shift >= 0 && !first) {
      out << '+';
    }
    out << shift;
  }
  return out.str();
}

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
  AffineForm out = a;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (size_t k = 0; k < b.coeffs.size(); ++k) {
    out.coeffs[k] += b.coeffs[k];
  }
  out.shift += b.shift;
  return out;
}

std::string ZetaFactor::to_string() const {
  std::ostringstream out;
  out << "zeta";
  if (depth() > 1) {
    out << '_' << depth();
  }
  out << '(';
  for (int i = 0; i < depth(); ++i) {
    out << (i ? "," : "") << args[i].to_string();
  }
  out << ')';
  return out.str();
}

int ZetaTerm::depth() const {
  int d = 0;
  for (const auto& f : factors) {
    d += f.depth();
  }
  return d;
}

std::string ZetaTerm::to_string() const {
  std::ostringstream out;
  long a = coeff < 0 ? -coeff : coeff;
  if (a != 1) {
    out << a << '*';
  }
  for (size_t i = 0; i < factors.size(); ++i) {
    out << (i ? "*" : "") << factors[i].to_string();
  }
  return out.str();
}

StuffleExpression::StuffleExpression(std::vector<ZetaTerm> terms) : terms_(std::move(terms)) { normalize(); }

StuffleExpression& StuffleExpression::operator+=(const StuffleExpression& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return normalize();
}

StuffleExpression& StuffleExpression::operator-=(const StuffleExpression& o) {
  for (auto t : o.terms_) {
    t.coeff = -t.coeff;
    terms_.push_back(std::move(t));
  }
  return normalize();
}

StuffleExpression& StuffleExpression::operator*=(long c) {
  for (auto& t : terms_) {
    t.coeff *= c;
  }
  return normalize();
}

StuffleExpression& StuffleExpression::normalize() {
  using Key = std::pair<int, std::vector<ZetaFactor>>;
  std::map<Key, long> merged;
  for (auto& t : terms_) {
    std::sort(t.factors.begin(), t.factors.end(), [](const ZetaFactor& a, const ZetaFactor& b) {
      return a.depth() != b.depth() ? a.depth() < b.depth() : a < b;
    });
    merged[{t.depth(), t.factors}] += t.coeff;
  }
  terms_.clear();
  for (auto& [key, c] : merged) {
    if (c != 0) {
      terms_.push_back({c, key.second});
    }
  }
  return *this;
}

std::string StuffleExpression::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i == 0) {
      out << (t.coeff < 0 ? "-" : "");
    } else {
      out << (t.coeff < 0 ? " - " : " + ");
    }
    out << t.to_string();
  }
  return out.str();
}

namespace {

nlohmann::ordered_json factor_json(const ZetaFactor& f) {
  nlohmann::ordered_json args = nlohmann::ordered_json::array();
  for (const auto& a : f.args) {
    args.push_back({{"coeffs", a.coeffs}, {"shift", a.shift}});
  }
  return {{"depth", f.depth()}, {"args", args}};
}

nlohmann::ordered_json term_json(const ZetaTerm& t) {
  nlohmann::ordered_json j;
  if (t.factors.size() == 1) {
    j = factor_json(t.factors[0]);
  } else {
    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
    for (const auto& f : t.factors) {
      fs.push_back(factor_json(f));
    }
    j["factors"] = fs;
  }
  j["sign"] = t.sign();
  if (t.coeff > 1 || t.coeff < -1) {
    j["multiplicity"] = t.coeff < 0 ? -t.coeff : t.coeff;
  }
  return j;
}

nlohmann::ordered_json expression_json(const StuffleExpression& e) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : e.terms()) {
    terms.push_back(term_json(t));
  }
  return {{"terms", terms}};
}

}  // namespace

std::string StuffleExpression::to_json() const { return expression_json(*this).dump(); }

StuffleExpression operator+(StuffleExpression a, const StuffleExpression& b) { return a += b; }
StuffleExpression operator-(StuffleExpression a, const StuffleExpression& b) { return a -= b; }

StuffleExpression operator*(const StuffleExpression& a, const StuffleExpression& b) {
  std::vector<ZetaTerm> out;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      ZetaTerm t{x.coeff * y.coeff, x.factors};
      t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
      out.push_back(std::move(t));
    }
  }
  return StuffleExpression(std::move(out));
}

bool operator==(const StuffleExpression& a, const StuffleExpression& b) {
  StuffleExpression x = a;
  StuffleExpression y = b;
  x.normalize();
  y.normalize();
  if (x.size() != y.size()) {
    return false;
  }
  for (size_t i = 0; i < x.size(); ++i) {
    if (x.terms()[i].coeff != y.terms()[i].coeff || x.terms()[i].factors != y.terms()[i].factors) {
      return false;
    }
  }
  return true;
}

ZetaFactor identity_factor(int r) {
  ZetaFactor f;
  for (int k = 0; k < r; ++k) {
    f.args.push_back(AffineForm::variable(r, k));
  }
  return f;
}

namespace {

// All quasi-shuffles of a and b, as argument lists (largest index last).
std::vector<std::vector<AffineForm>> quasi_shuffles(const std::vector<AffineForm>& a, const std::vector<AffineForm>& b) {
  if (a.empty()) {
    return {b};
  }
  if (b.empty()) {
    return {a};
  }
  std::vector<AffineForm> a0(a.begin(), a.end() - 1);
  std::vector<AffineForm> b0(b.begin(), b.end() - 1);
  std::vector<std::vector<AffineForm>> out;
  auto extend = [&](std::vector<std::vector<AffineForm>> words, const AffineForm& last) {
    for (auto& w : words) {
      w.push_back(last);
      out.push_back(std::move(w));
    }
  };
  extend(quasi_shuffles(a0, b), a.back());
  extend(quasi_shuffles(a, b0), b.back());
  extend(quasi_shuffles(a0, b0), a.back() + b.back());
  return out;
}

std::vector<ZetaTerm> raw_stuffle(const std::vector<AffineForm>& a, const std::vector<AffineForm>& b) {
  std::vector<ZetaTerm> out;
  for (auto& w : quasi_shuffles(a, b)) {
    out.push_back({1, {ZetaFactor{std::move(w)}}});
  }
  return out;
}

}  // namespace

StuffleExpression stuffle(const std::vector<AffineForm>& a, const std::vector<AffineForm>& b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorKind::InvalidArgument, "stuffle factors must have depth >= 1");
  }
  return StuffleExpression(raw_stuffle(a, b));
}

StuffleExpression stuffle_product(int j, int r) {
  if (j < 1 || j > r - 1) {
    throw Error(ErrorKind::InvalidArgument, "stuffle_product needs 1 <= j <= r-1");
  }
  ZetaFactor id = identity_factor(r);
  return stuffle({id.args.begin(), id.args.begin() + j}, {id.args.begin() + j, id.args.end()});
}

long delannoy(int m, int n) {
  long sum = 0;
  long bm = 1;
  long bn = 1;
  long p = 1;
  for (int k = 0; k <= std::min(m, n); ++k) {
    sum += bm * bn * p;
    bm = bm * (m - k) / (k + 1);
    bn = bn * (n - k) / (k + 1);
    p *= 2;
  }
  return sum;
}

StuffleExpression isolate_target(const ZetaFactor& left, const ZetaFactor& right, const ZetaFactor& target) {
  if (left.args.empty() || right.args.empty()) {
    throw Error(ErrorKind::InvalidArgument, "stuffle factors must have depth >= 1");
  }
  auto terms = raw_stuffle(left.args, right.args);
  long hits = std::count_if(terms.begin(), terms.end(), [&](const ZetaTerm& t) { return t.factors[0] == target; });
  if (hits == 0) {
    throw Error(ErrorKind::TargetAbsent, target.to_string() + " does not occur in the decomposition");
  }
  if (hits > 1) {
    throw Error(ErrorKind::TargetAmbiguous, target.to_string() + " occurs more than once in the decomposition");
  }
  std::vector<ZetaTerm> out{{1, {left, right}}};
  for (auto& t : terms) {
    if (!(t.factors[0] == target)) {
      t.coeff = -1;
      out.push_back(std::move(t));
    }
  }
  return StuffleExpression(std::move(out));
}

StuffleExpression isolate_target(int j, int r, const ZetaFactor& target) {
  if (j < 1 || j > r - 1) {
    throw Error(ErrorKind::InvalidArgument, "isolate_target needs 1 <= j <= r-1");
  }
  ZetaFactor id = identity_factor(r);
  ZetaFactor left{{id.args.begin(), id.args.begin() + j}};
  ZetaFactor right{{id.args.begin() + j, id.args.end()}};
  return isolate_target(left, right, target);
}

std::string CaseTag::to_string() const { return all_ones ? "ALL_ONES" : "C" + std::to_string(j); }

CaseTag classify_case(const IntPoint& m) {
  if (m.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty point");
  }
  for (int v : m) {
    if (v < 1) {
      throw Error(ErrorKind::NotPositive, "every coordinate must be >= 1");
    }
  }
  for (int j = static_cast<int>(m.size()); j >= 1; --j) {
    if (m[j - 1] > 1) {
      return {false, j};
    }
  }
  return {true, 0};
}

const char* to_string(PlanRule rule) {
  switch (rule) {
    case PlanRule::StuffleIsolate: return "stuffle-isolate";
    case PlanRule::TaylorExpand: return "taylor-expand";
    case PlanRule::Lse2Expand: return "lse2-expand";
    case PlanRule::DepthReduce: return "depth-reduce";
  }
  return "unknown";
}

namespace {

class PlanBuilder {
 public:
  explicit PlanBuilder(const IntPoint& m) { plan_.center = m; }

  ExpansionPlan build() {
    visit(identity_factor(static_cast<int>(plan_.center.size())), -1);
    return std::move(plan_);
  }

 private:
  void visit(const ZetaFactor& f, int parent) {
    if (seen_.count(f) != 0) {
      return;
    }
    IntPoint centers;
    for (const auto& a : f.args) {
      long c = a.center(plan_.center);
      if (c < 1) {
        throw Error(ErrorKind::NotPositive, "argument " + a.to_string() + " is centered below 1");
      }
      centers.push_back(static_cast<int>(c));
    }
    const int k = f.depth();
    PlanStep step;
    step.operand = {1, {f}};
    step.centers = centers;
    step.tag = classify_case(centers);
    step.parent = parent;
    if (step.tag.all_ones) {
      step.rule = PlanRule::Lse2Expand;
      step.measure = {k, 0};
    } else if (step.tag.j == k) {
      step.rule = PlanRule::TaylorExpand;
      step.measure = {k, 0};
    } else {
      const int j = step.tag.j;
      step.rule = PlanRule::StuffleIsolate;
      step.measure = {k, k - j};
      ZetaFactor left{{f.args.begin(), f.args.begin() + j}};
      ZetaFactor right{{f.args.begin() + j, f.args.end()}};
      step.rewrite = isolate_target(left, right, f);
    }
    const int index = static_cast<int>(plan_.steps.size());
    seen_.emplace(f, index);
    plan_.steps.push_back(step);
    for (const auto& t : step.rewrite.terms()) {
      if (t.factors.size() == 1) {
        visit(t.factors[0], index);
        continue;
      }
      PlanStep reduce;
      reduce.rule = PlanRule::DepthReduce;
      reduce.operand = {1, t.factors};
      int deepest = 0;
      for (const auto& g : t.factors) {
        deepest = std::max(deepest, g.depth());
      }
      reduce.measure = {deepest, deepest};
      reduce.parent = index;
      const int at = static_cast<int>(plan_.steps.size());
      plan_.steps.push_back(reduce);
      for (const auto& g : t.factors) {
        visit(g, at);
      }
    }
  }

  ExpansionPlan plan_;
  std::map<ZetaFactor, int> seen_;
};

}  // namespace

ExpansionPlan expansion_plan(const IntPoint& m) {
  classify_case(m);
  return PlanBuilder(m).build();
}

StuffleExpression ExpansionPlan::replay() const {
  std::map<ZetaFactor, const PlanStep*> by_target;
  for (const auto& s : steps) {
    if (s.rule != PlanRule::DepthReduce) {
      by_target.emplace(s.operand.factors[0], &s);
    }
  }
  std::map<ZetaFactor, StuffleExpression> memo;
  std::function<StuffleExpression(const ZetaFactor&)> expand = [&](const ZetaFactor& f) -> StuffleExpression {
    if (auto it = memo.find(f); it != memo.end()) {
      return it->second;
    }
    const PlanStep* s = by_target.at(f);
    StuffleExpression out;
    if (s->rule != PlanRule::StuffleIsolate) {
      out = StuffleExpression(std::vector<ZetaTerm>{ZetaTerm{1, {f}}});
    } else {
      for (const auto& t : s->rewrite.terms()) {
        StuffleExpression prod(std::vector<ZetaTerm>{ZetaTerm{t.coeff, {}}});
        for (const auto& g : t.factors) {
          prod = prod * expand(g);
        }
        out += prod;
      }
    }
    memo.emplace(f, out);
    return out;
  };
  return expand(identity_factor(static_cast<int>(center.size())));
}

std::string ExpansionPlan::to_json() const {
  nlohmann::ordered_json steps_json = nlohmann::ordered_json::array();
  for (const auto& s : steps) {
    nlohmann::ordered_json j;
    j["rule"] = ezl::to_string(s.rule);
    j["operand"] = term_json(s.operand);
    if (s.rule != PlanRule::DepthReduce) {
      j["centers"] = s.centers;
      j["case"] = s.tag.to_string();
    }
    j["parent"] = s.parent;
    if (!s.rewrite.empty()) {
      j["rewrite"] = expression_json(s.rewrite);
    }
    steps_json.push_back(j);
  }
  nlohmann::ordered_json out;
  out["center"] = center;
  out["steps"] = steps_json;
  out["replay"] = expression_json(replay());
  return out.dump();
}

Complex evaluate(const StuffleExpression& e, const ComplexPoint& s,
                 const std::function<Complex(const ComplexPoint&)>& zeta_r) {
  Complex sum(0);
  for (const auto& t : e.terms()) {
    Complex prod(Real(t.coeff));
    for (const auto& f : t.factors) {
      ComplexPoint args;
      for (const auto& a : f.args) {
        args.push_back(a.evaluate(s));
      }
      prod *= zeta_r(args);
    }
    sum += prod;
  }
  return sum;
}

}  // namespace ezl
