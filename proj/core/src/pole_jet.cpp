#include "ezl/pole_jet.hpp"

#include <algorithm>

namespace ezl {

namespace {

void trim(PoleJet::Exponents& e) {
  while (!e.empty() && e.back() == 0) {
    e.pop_back();
  }
}

PoleJet::Exponents add(const PoleJet::Exponents& a, const PoleJet::Exponents& b) {
  PoleJet::Exponents out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
  }
  for (size_t i = 0; i < b.size(); ++i) {
    out[i] += b[i];
  }
  trim(out);
  return out;
}

}  // namespace

int LinearFormRegistry::intern(const std::vector<Real>& weights, Real& scale) {
  int lead = -1;
  for (int v = 0; v < static_cast<int>(weights.size()); ++v) {
    if (weights[v] != 0) {
      lead = v;
      break;
    }
  }
  if (lead < 0) {
    throw Error(ErrorKind::InvalidArgument, "cannot register the zero linear form");
  }
  scale = weights[lead];
  std::vector<Real> normalised(vars_, Real(0));
  for (int v = 0; v < static_cast<int>(weights.size()) && v < vars_; ++v) {
    normalised[v] = weights[v] / scale;
  }
  for (int id = 0; id < size(); ++id) {
    if (forms_[id] == normalised) {
      return id;
    }
  }
  forms_.push_back(std::move(normalised));
  return size() - 1;
}

int LinearFormRegistry::intern(const std::vector<int>& weights) {
  std::vector<Real> w;
  w.reserve(weights.size());
  for (int x : weights) {
    w.emplace_back(x);
  }
  Real scale;
  return intern(w, scale);
}

Jet LinearFormRegistry::as_jet(int id, const JetLayoutPtr& layout) const {
  Jet j(layout);
  if (layout->order() >= 1) {
    for (int v = 0; v < vars_; ++v) {
      if (forms_[id][v] != 0) {
        MultiIndex e(vars_, 0);
        e[v] = 1;
        if (int at = layout->index_of(e); at >= 0) {
          j[at] = Complex(forms_[id][v]);
        }
      }
    }
  }
  return j;
}

PoleJet::PoleJet(LinearFormRegistryPtr registry, const Jet& regular)
    : registry_(std::move(registry)), layout_(regular.layout()) {
  terms_.emplace(Exponents{}, regular);
}

void PoleJet::add_term(Exponents e, const Jet& j) {
  trim(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), j);
  } else {
    it->second += j;
  }
}

PoleJet& PoleJet::operator+=(const PoleJet& o) {
  if (!registry_) {
    *this = o;
    return *this;
  }
  for (const auto& [e, j] : o.terms_) {
    add_term(e, j);
  }
  return *this;
}

PoleJet& PoleJet::operator-=(const PoleJet& o) {
  if (!registry_) {
    *this = o;
    *this *= Complex(-1);
    return *this;
  }
  for (const auto& [e, j] : o.terms_) {
    add_term(e, -j);
  }
  return *this;
}

PoleJet& PoleJet::operator*=(const PoleJet& o) {
  std::map<Exponents, Jet> out;
  for (const auto& [ea, ja] : terms_) {
    for (const auto& [eb, jb] : o.terms_) {
      Exponents e = add(ea, eb);
      Jet prod = ja * jb;
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(std::move(e), std::move(prod));
      } else {
        it->second += prod;
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

PoleJet& PoleJet::operator*=(const Jet& o) {
  for (auto& [e, j] : terms_) {
    j *= o;
  }
  return *this;
}

PoleJet& PoleJet::operator*=(const Complex& c) {
  for (auto& [e, j] : terms_) {
    j *= c;
  }
  return *this;
}

PoleJet& PoleJet::operator*=(const Real& c) {
  for (auto& [e, j] : terms_) {
    j *= c;
  }
  return *this;
}

PoleJet& PoleJet::operator+=(const Complex& c) {
  add_term(Exponents{}, Jet(layout_, c));
  return *this;
}

PoleJet PoleJet::divided_by(const Jet& d) const {
  if (!d.constant().is_zero()) {
    PoleJet out = *this;
    out *= reciprocal(d);
    return out;
  }
  const auto& layout = *d.layout();
  std::vector<Real> weights(layout.vars(), Real(0));
  for (int i = 1; i < layout.size(); ++i) {
    if (d[i].is_zero()) {
      continue;
    }
    if (layout.degree(i) != 1 || d[i].im != 0) {
      throw Error(ErrorKind::InvalidArgument, "symbolic denominator must be a real linear form");
    }
    const MultiIndex& e = layout.monomial(i);
    int v = static_cast<int>(std::find(e.begin(), e.end(), 1) - e.begin());
    weights[v] = d[i].re;
  }
  Real scale;
  int id = registry_->intern(weights, scale);
  PoleJet out(registry_, Jet(layout_));
  out.terms_.clear();
  Real inv = Real(1) / scale;
  for (const auto& [e, j] : terms_) {
    Exponents ne = e;
    if (static_cast<int>(ne.size()) <= id) {
      ne.resize(id + 1, 0);
    }
    ++ne[id];
    Jet scaled = j;
    scaled *= inv;
    out.add_term(std::move(ne), scaled);
  }
  return out;
}

Complex PoleJet::constant() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Complex(0) : it->second.constant();
}

Jet PoleJet::times_denominators(const Exponents& target) const {
  Jet out(layout_);
  for (const auto& [e, j] : terms_) {
    Jet term = j;
    for (int id = 0; id < registry_->size(); ++id) {
      int have = id < static_cast<int>(e.size()) ? e[id] : 0;
      int want = id < static_cast<int>(target.size()) ? target[id] : 0;
      if (have > want) {
        throw Error(ErrorKind::InvalidArgument, "denominator exponent exceeds the clearing target");
      }
      if (want > have) {
        Jet form = registry_->as_jet(id, layout_);
        for (int k = have; k < want; ++k) {
          term *= form;
        }
      }
    }
    out += term;
  }
  return out;
}

Real magnitude(const PoleJet& x) {
  Real m(0);
  for (const auto& [e, j] : x.terms()) {
    Real a = magnitude(j);
    if (a > m) {
      m = a;
    }
  }
  return m;
}

}  // namespace ezl
