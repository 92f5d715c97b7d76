#include "ezl/laurent_expansion.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace ezl {

int LinearFactor::suffix_start() const {
  const int r = static_cast<int>(coeffs.size());
  int j = r;
  while (j > 0 && coeffs[j - 1] == 1) {
    --j;
  }
  if (j == r) {
    return 0;
  }
  for (int i = 0; i < j; ++i) {
    if (coeffs[i] != 0) {
      return 0;
    }
  }
  return j + 1;
}

Complex LinearFactor::evaluate(const ComplexPoint& s) const {
  Complex z(Real(-c));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) {
      z += s[i] * Real(coeffs[i]);
    }
  }
  return z;
}

std::string LinearFactor::to_string() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) {
      continue;
    }
    if (!first) {
      out << (coeffs[i] < 0 ? "-" : "+");
    } else if (coeffs[i] < 0) {
      out << '-';
    }
    if (std::abs(coeffs[i]) != 1) {
      out << std::abs(coeffs[i]);
    }
    out << 's' << (i + 1);
    first = false;
  }
  if (c != 0) {
    out << (c > 0 ? "-" : "+") << std::abs(c);
  }
  out << ')';
  return out.str();
}

LinearFactor suffix_factor(int j, int r, long c) {
  LinearFactor f;
  f.coeffs.assign(r, 0);
  for (int i = j - 1; i < r; ++i) {
    f.coeffs[i] = 1;
  }
  f.c = c;
  return f;
}

namespace {

// Fewer variables first, then later start, then constant.
bool factor_less(const LinearFactor& a, const LinearFactor& b) {
  auto nnz = [](const LinearFactor& f) { return std::count_if(f.coeffs.begin(), f.coeffs.end(), [](int x) { return x != 0; }); };
  if (nnz(a) != nnz(b)) {
    return nnz(a) < nnz(b);
  }
  if (a.coeffs != b.coeffs) {
    return std::lexicographical_compare(b.coeffs.begin(), b.coeffs.end(), a.coeffs.begin(), a.coeffs.end());
  }
  return a.c < b.c;
}

std::vector<LinearFactor> sorted(std::vector<LinearFactor> d) {
  std::sort(d.begin(), d.end(), factor_less);
  return d;
}

ComplexPoint offsets(const ComplexPoint& s, const IntPoint& m) {
  ComplexPoint out;
  for (size_t i = 0; i < s.size(); ++i) {
    out.push_back(s[i] - Complex(m[i]));
  }
  return out;
}

std::string index_key(const MultiIndex& n) {
  std::string key;
  for (size_t i = 0; i < n.size(); ++i) {
    key += (i ? "," : "") + std::to_string(n[i]);
  }
  return key;
}

}  // namespace

Complex LaurentExpansion::evaluate(const ComplexPoint& s) const {
  if (s.size() != center.size()) {
    throw Error(ErrorKind::InvalidArgument, "point length does not match the expansion depth");
  }
  const ComplexPoint e = offsets(s, center);
  Complex sum(0);
  for (const auto& t : terms) {
    Complex value = t.numerator.evaluate(e);
    for (const auto& f : t.denominator) {
      value /= f.evaluate(s);
    }
    sum += value;
  }
  return sum;
}

Real LaurentExpansion::top_order_size(const ComplexPoint& s) const {
  if (s.size() != center.size()) {
    throw Error(ErrorKind::InvalidArgument, "point length does not match the expansion depth");
  }
  const ComplexPoint e = offsets(s, center);
  Real sum(0);
  for (const auto& t : terms) {
    Jet top = t.numerator;
    const auto& layout = *top.layout();
    for (int i = 0; i < layout.size(); ++i) {
      if (layout.degree(i) != order) {
        top[i] = Complex(0);
      }
    }
    Complex value = top.evaluate(e);
    for (const auto& f : t.denominator) {
      value /= f.evaluate(s);
    }
    sum += abs(value);
  }
  return sum;
}

const FractionTerm* LaurentExpansion::find(const std::vector<LinearFactor>& denominator) const {
  const auto want = sorted(denominator);
  for (const auto& t : terms) {
    if (sorted(t.denominator) == want) {
      return &t;
    }
  }
  return nullptr;
}

Complex LaurentExpansion::coefficient(const std::vector<LinearFactor>& denominator, const MultiIndex& n) const {
  const FractionTerm* t = find(denominator);
  return t ? t->numerator.coefficient(n) : Complex(0);
}

bool LaurentExpansion::has_poles() const {
  return std::any_of(terms.begin(), terms.end(), [](const FractionTerm& t) { return !t.denominator.empty(); });
}

std::string LaurentExpansion::to_json() const {
  nlohmann::ordered_json out;
  out["center"] = center;
  out["order"] = order;
  out["digits"] = digits;
  nlohmann::ordered_json ts = nlohmann::ordered_json::array();
  for (const auto& t : terms) {
    nlohmann::ordered_json den = nlohmann::ordered_json::array();
    for (const auto& f : t.denominator) {
      if (int j = f.suffix_start(); j > 0) {
        den.push_back({{"j", j}, {"c", f.c}});
      } else {
        den.push_back({{"coeffs", f.coeffs}, {"c", f.c}});
      }
    }
    std::vector<std::pair<MultiIndex, Complex>> coeffs;
    const auto& layout = *t.numerator.layout();
    for (int i = 0; i < layout.size(); ++i) {
      coeffs.emplace_back(layout.monomial(i), t.numerator[i]);
    }
    std::sort(coeffs.begin(), coeffs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    nlohmann::ordered_json num = nlohmann::ordered_json::object();
    for (const auto& [n, c] : coeffs) {
      num[index_key(n)] = {to_decimal(c.re, digits), to_decimal(c.im, digits)};
    }
    ts.push_back({{"denominator", den}, {"numerator", num}});
  }
  out["terms"] = ts;
  return out.dump();
}

LaurentExpansion LaurentExpansion::from_json(const std::string& text) {
  LaurentExpansion e;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    e.center = j.at("center").get<IntPoint>();
    e.order = j.at("order").get<int>();
    e.digits = j.at("digits").get<int>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed expansion JSON: ") + ex.what());
  }
  const int r = e.depth();
  if (r < 1) {
    throw Error(ErrorKind::InvalidArgument, "expansion JSON has an empty center");
  }
  auto layout = jet_layout(r, e.order);
  for (const auto& t : j.at("terms")) {
    FractionTerm ft;
    for (const auto& f : t.at("denominator")) {
      if (f.contains("j")) {
        ft.denominator.push_back(suffix_factor(f.at("j").get<int>(), r, f.at("c").get<long>()));
      } else {
        ft.denominator.push_back({f.at("coeffs").get<std::vector<int>>(), f.at("c").get<long>()});
      }
    }
    ft.numerator = Jet(layout);
    for (const auto& [key, value] : t.at("numerator").items()) {
      MultiIndex n;
      std::stringstream ss(key);
      std::string part;
      while (std::getline(ss, part, ',')) {
        n.push_back(std::stoi(part));
      }
      int at = layout->index_of(n);
      if (at < 0) {
        throw Error(ErrorKind::InvalidArgument, "numerator index " + key + " exceeds the order");
      }
      ft.numerator[at] = Complex(real_from_string(value.at(0).get<std::string>()),
                                 real_from_string(value.at(1).get<std::string>()));
    }
    e.terms.push_back(std::move(ft));
  }
  return e;
}

std::string LaurentExpansion::to_csv() const {
  std::ostringstream out;
  out << "denominator,multi_index,re,im\n";
  for (const auto& t : terms) {
    std::string den;
    for (const auto& f : t.denominator) {
      den += f.to_string();
    }
    if (den.empty()) {
      den = "1";
    }
    std::vector<std::pair<MultiIndex, Complex>> coeffs;
    const auto& layout = *t.numerator.layout();
    for (int i = 0; i < layout.size(); ++i) {
      coeffs.emplace_back(layout.monomial(i), t.numerator[i]);
    }
    std::sort(coeffs.begin(), coeffs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [n, c] : coeffs) {
      out << den << ",\"" << index_key(n) << "\"," << to_decimal(c.re, digits) << ',' << to_decimal(c.im, digits) << '\n';
    }
  }
  return out.str();
}

LaurentExpansion LaurentExpansion::from_pole_jet(const PoleJet& p, const IntPoint& center, int order, int digits,
                                                 const Real& drop) {
  LaurentExpansion e;
  e.center = center;
  e.order = order;
  e.digits = digits;
  const int r = static_cast<int>(center.size());
  auto layout = jet_layout(r, order);
  const auto& registry = *p.registry();
  std::vector<LinearFactor> forms;
  for (int id = 0; id < registry.size(); ++id) {
    LinearFactor f;
    f.coeffs.assign(r, 0);
    for (int i = 0; i < r; ++i) {
      const Real& w = registry.weights(id)[i];
      if (boost::multiprecision::round(w) != w) {
        throw Error(ErrorKind::InvalidArgument, "denominator form has non-integral weights");
      }
      f.coeffs[i] = w.convert_to<int>();
      f.c += static_cast<long>(f.coeffs[i]) * center[i];
    }
    forms.push_back(std::move(f));
  }
  for (const auto& [exps, jet] : p.terms()) {
    FractionTerm t;
    for (size_t id = 0; id < exps.size(); ++id) {
      for (int k = 0; k < exps[id]; ++k) {
        t.denominator.push_back(forms[id]);
      }
    }
    t.denominator = sorted(std::move(t.denominator));
    t.numerator = Jet(layout);
    const auto& src = *jet.layout();
    for (int i = 0; i < src.size(); ++i) {
      if (src.degree(i) > order) {
        continue;
      }
      int at = layout->index_of(src.monomial(i));
      if (at >= 0) {
        t.numerator[at] = jet[i];
      }
    }
    if (!t.denominator.empty() && magnitude(t.numerator) <= drop) {
      continue;
    }
    e.terms.push_back(std::move(t));
  }
  std::stable_sort(e.terms.begin(), e.terms.end(), [](const FractionTerm& a, const FractionTerm& b) {
    if (a.denominator.size() != b.denominator.size()) {
      return a.denominator.size() > b.denominator.size();
    }
    return std::lexicographical_compare(a.denominator.begin(), a.denominator.end(), b.denominator.begin(),
                                        b.denominator.end(), factor_less);
  });
  return e;
}

}  // namespace ezl
