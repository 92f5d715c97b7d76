#include "cli.hpp"

#include "verify.hpp"

#include "ezl/ez_series.hpp"
#include "ezl/laurent.hpp"
#include "ezl/limits.hpp"
#include "ezl/mellin_barnes.hpp"
#include "ezl/zeta.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

namespace ezl::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::optional<int> digits;
  std::string format = "json";
  std::string method = "auto";
  std::string point;
  std::string index;
  std::string eps;
  int order = 2;
  int depth = 0;
  int total = -1;
  bool sum = false;
  bool corollary = false;
  std::string suite;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    out.push_back(part);
  }
  if (out.empty() || text.back() == ',') {
    throw UsageError("empty coordinate in '" + text + "'");
  }
  return out;
}

Real parse_real(const std::string& text) {
  try {
    size_t used = 0;
    (void)std::stod(text, &used);
    if (used != text.size()) {
      throw UsageError("not a number: '" + text + "'");
    }
    return real_from_string(text);
  } catch (const std::logic_error&) {
    throw UsageError("not a number: '" + text + "'");
  }
}

// "x", "yi", "x+yi", "x-yi".
Complex parse_complex(std::string text) {
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  if (text.empty()) {
    throw UsageError("empty coordinate");
  }
  if (text.back() != 'i') {
    return Complex(parse_real(text));
  }
  text.pop_back();
  size_t cut = std::string::npos;
  for (size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  auto imag = [](const std::string& t) {
    if (t.empty() || t == "+") {
      return Real(1);
    }
    if (t == "-") {
      return Real(-1);
    }
    return parse_real(t);
  };
  if (cut == std::string::npos) {
    return Complex(Real(0), imag(text));
  }
  return Complex(parse_real(text.substr(0, cut)), imag(text.substr(cut)));
}

ComplexPoint parse_point(const std::string& text) {
  ComplexPoint s;
  for (const auto& part : split(text)) {
    s.push_back(parse_complex(part));
  }
  return s;
}

IntPoint parse_ints(const std::string& text) {
  IntPoint m;
  for (const auto& part : split(text)) {
    try {
      size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) {
        throw UsageError("not an integer: '" + part + "'");
      }
      m.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("not an integer: '" + part + "'");
    }
  }
  return m;
}

Json pair(const Complex& z, int digits) { return Json::array({to_decimal(z.re, digits), to_decimal(z.im, digits)}); }

std::string text_of(const Complex& z, int digits) { return to_string(z, digits); }

std::string index_string(const MultiIndex& n) {
  std::string s;
  for (size_t i = 0; i < n.size(); ++i) {
    s += (i ? "," : "") + std::to_string(n[i]);
  }
  return s;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_eval(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
  const ComplexPoint s = parse_point(o.point);
  std::string method = o.method;
  Complex value;
  if (s.size() == 1) {
    value = zeta(s[0], ctx);
    method = "zeta";
  } else {
    if (method == "auto") {
      method = in_domain(s) ? "series" : "mb";
    }
    if (method == "series") {
      if (!in_domain(s)) {
        throw Error(ErrorKind::OutOfDomain, "method=series needs a point of the convergence domain");
      }
      value = ez_value(s, ctx);
    } else {
      value = ez_eval_mb(s, ctx);
    }
  }
  const int d = ctx.digits();
  if (o.format == "json") {
    Json pt = Json::array();
    for (const auto& z : s) {
      pt.push_back(pair(z, d));
    }
    emit_json(out, Json{{"point", pt}, {"method", method}, {"digits", d}, {"value", pair(value, d)}});
  } else if (o.format == "csv") {
    out << "re,im\n" << to_decimal(value.re, d) << ',' << to_decimal(value.im, d) << '\n';
  } else {
    out << text_of(value, d) << '\n';
  }
  return kOk;
}

int cmd_expand(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
  const LaurentExpansion e = expand_at(parse_ints(o.point), o.order, ctx);
  if (o.format == "json") {
    out << e.to_json() << '\n';
  } else if (o.format == "csv") {
    out << e.to_csv();
  } else {
    for (const auto& t : e.terms) {
      std::string den;
      for (const auto& f : t.denominator) {
        den += f.to_string();
      }
      const auto& layout = *t.numerator.layout();
      for (int i = 0; i < layout.size(); ++i) {
        out << (den.empty() ? "1" : den) << "  [" << index_string(layout.monomial(i)) << "]  "
            << text_of(t.numerator[i], ctx.digits()) << '\n';
      }
    }
  }
  return kOk;
}

int cmd_stieltjes(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
  const int d = ctx.digits();
  if (!o.index.empty()) {
    const MultiIndex n = parse_ints(o.index);
    const Complex g = multiple_stieltjes(n, ctx);
    if (o.format == "json") {
      emit_json(out, Json{{"index", n}, {"digits", d}, {"value", pair(g, d)}});
    } else if (o.format == "csv") {
      out << "multi_index,re,im\n\"" << index_string(n) << "\"," << to_decimal(g.re, d) << ',' << to_decimal(g.im, d)
          << '\n';
    } else {
      out << text_of(g, d) << '\n';
    }
    return kOk;
  }
  if (o.depth < 1 || o.total < 0) {
    throw UsageError("stieltjes needs --index, or --depth with --total");
  }
  if (o.sum) {
    const Complex v = stieltjes_sum(o.total, o.depth, ctx);
    if (o.format == "json") {
      emit_json(out, Json{{"depth", o.depth}, {"total", o.total}, {"digits", d}, {"sum", pair(v, d)}});
    } else if (o.format == "csv") {
      out << "re,im\n" << to_decimal(v.re, d) << ',' << to_decimal(v.im, d) << '\n';
    } else {
      out << text_of(v, d) << '\n';
    }
    return kOk;
  }
  const auto table = multiple_stieltjes_table(o.depth, o.total, ctx);
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& [n, g] : table) {
      rows.push_back(Json{{"index", n}, {"value", pair(g, d)}});
    }
    emit_json(out, Json{{"depth", o.depth}, {"total", o.total}, {"digits", d}, {"table", rows}});
  } else if (o.format == "csv") {
    out << "multi_index,re,im\n";
    for (const auto& [n, g] : table) {
      out << '"' << index_string(n) << "\"," << to_decimal(g.re, d) << ',' << to_decimal(g.im, d) << '\n';
    }
  } else {
    for (const auto& [n, g] : table) {
      out << '(' << index_string(n) << ")  " << text_of(g, d) << '\n';
    }
  }
  return kOk;
}

int cmd_restricted(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
  const RestrictedExpansion e = restricted_expand(parse_ints(o.point), o.order, ctx);
  const int d = ctx.digits();
  const int top = e.lowest + static_cast<int>(e.coefficients.size());
  if (o.format == "json") {
    Json coeffs = Json::object();
    for (int p = e.lowest; p < top; ++p) {
      coeffs[std::to_string(p)] = pair(e.coefficient(p), d);
    }
    emit_json(out, Json{{"center", e.center}, {"restricted", e.restricted}, {"digits", d}, {"coefficients", coeffs}});
  } else if (o.format == "csv") {
    out << "power,re,im\n";
    for (int p = e.lowest; p < top; ++p) {
      out << p << ',' << to_decimal(e.coefficient(p).re, d) << ',' << to_decimal(e.coefficient(p).im, d) << '\n';
    }
  } else {
    for (int p = e.lowest; p < top; ++p) {
      out << "(s-1)^" << p << "  " << text_of(e.coefficient(p), d) << '\n';
    }
  }
  return kOk;
}

int cmd_limits(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
  const IntPoint m = parse_ints(o.point);
  const ComplexPoint eps = parse_point(o.eps);
  NearPointOutcome result;
  if (m.size() == 2) {
    result.value = o.corollary ? zeta2_corollary(m, eps, ctx) : zeta2_near(m, eps, ctx);
  } else if (m.size() == 3) {
    result = zeta3_near(m, eps, ctx);
  } else {
    throw Error(ErrorKind::UnsupportedCenter, "limit formulas cover depth 2 and 3");
  }
  const int d = ctx.digits();
  const NearPointValue& v = result.value;
  if (o.format == "json") {
    Json j{{"center", m}, {"digits", d}, {"indeterminate", result.indeterminate}};
    if (result.indeterminate) {
      j["reason"] = result.reason;
    } else {
      Json terms = Json::array();
      for (const auto& t : v.terms) {
        terms.push_back(Json{{"label", t.label}, {"value", pair(t.value, d)}, {"pole", t.pole}});
      }
      j["terms"] = terms;
      j["finite_part"] = pair(v.finite_part, d);
      j["error"] = v.error_order();
    }
    emit_json(out, j);
  } else if (o.format == "csv") {
    out << "label,re,im,pole\n";
    for (const auto& t : v.terms) {
      out << '"' << t.label << "\"," << to_decimal(t.value.re, d) << ',' << to_decimal(t.value.im, d) << ",\""
          << t.pole << "\"\n";
    }
  } else if (result.indeterminate) {
    out << "indeterminate: " << result.reason << '\n';
  } else {
    for (const auto& t : v.terms) {
      out << t.label << "  " << text_of(t.value, d) << (t.pole.empty() ? "" : "  pole " + t.pole) << '\n';
    }
    out << "finite part " << text_of(v.finite_part, d) << " + " << v.error_order() << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
  const VerifyReport report = verify(o.suite, ctx);
  if (o.format == "json") {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back(
          Json{{"name", c.name}, {"pass", c.pass}, {"residual", to_decimal(c.residual, 6)}, {"bound", to_decimal(c.bound, 3)}});
    }
    emit_json(out, Json{{"suite", report.suite}, {"pass", report.pass()}, {"checks", checks}});
  } else if (o.format == "csv") {
    out << "name,pass,residual,bound\n";
    for (const auto& c : report.checks) {
      out << '"' << c.name << "\"," << (c.pass ? "true" : "false") << ',' << to_decimal(c.residual, 6) << ','
          << to_decimal(c.bound, 3) << '\n';
    }
  } else {
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual " << to_decimal(c.residual, 6) << " (bound "
          << to_decimal(c.bound, 3) << ")\n";
    }
  }
  return report.pass() ? kOk : kCheckFailed;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleAt1:
    case ErrorKind::OutOfDomain:
    case ErrorKind::NotPositive:
    case ErrorKind::RegionViolation:
    case ErrorKind::OnSingularHyperplane:
    case ErrorKind::InvalidApproach:
    case ErrorKind::UnsupportedCenter:
      return kDomain;
    case ErrorKind::PrecisionUnreachable:
    case ErrorKind::ConsistencyFailure:
      return kPrecision;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Euler-Zagier multiple zeta-functions: values, Laurent expansions, constants and limits", "ezl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--digits", o.digits, "Significant digits (>= 15); default EZL_DIGITS or 30");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* eval = app.add_subcommand("eval", "Value of zeta_r at a point");
  eval->add_option("--point", o.point, "Comma-separated coordinates, e.g. 1.5,2-0.5i")->required();
  eval->add_option("--method", o.method, "Evaluation method")->check(CLI::IsMember({"series", "mb", "auto"}));

  auto* expand = app.add_subcommand("expand", "Laurent expansion at an integer point");
  expand->add_option("--point", o.point, "Integer center, e.g. 2,1,1")->required();
  expand->add_option("--order", o.order, "Numerator order");

  auto* stj = app.add_subcommand("stieltjes", "Multiple Stieltjes constants");
  stj->add_option("--index", o.index, "Multi-index, e.g. 1,0");
  stj->add_option("--depth", o.depth, "Depth r for a table or a sum");
  stj->add_option("--total", o.total, "Total order |n|");
  stj->add_flag("--sum", o.sum, "Sum over |n| = total, checked against the diagonal");

  auto* restricted = app.add_subcommand("restricted", "One-variable expansion along the unit coordinates");
  restricted->add_option("--point", o.point, "Positive integer center")->required();
  restricted->add_option("--order", o.order, "Highest power of (s-1)");

  auto* limits = app.add_subcommand("limits", "Near-point value with explicit error terms");
  limits->add_option("--point", o.point, "Integer center of depth 2 or 3")->required();
  limits->add_option("--eps", o.eps, "Offsets, e.g. 1e-4,1e-4")->required();
  limits->add_flag("--corollary", o.corollary, "Depth 2: use the three-group closed form");

  auto* ver = app.add_subcommand("verify", "Run a property suite");
  ver->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(verify_suites()));

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    const PrecisionContext ctx = o.digits ? PrecisionContext(*o.digits) : PrecisionContext::from_env();
    if (eval->parsed()) {
      return cmd_eval(o, ctx, out);
    }
    if (expand->parsed()) {
      return cmd_expand(o, ctx, out);
    }
    if (stj->parsed()) {
      return cmd_stieltjes(o, ctx, out);
    }
    if (restricted->parsed()) {
      return cmd_restricted(o, ctx, out);
    }
    if (limits->parsed()) {
      return cmd_limits(o, ctx, out);
    }
    return cmd_verify(o, ctx, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.kind());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace ezl::cli
