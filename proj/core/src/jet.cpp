#include "ezl/jet.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace ezl {

namespace {

void enumerate(int vars, int degree, const std::vector<int>& caps, MultiIndex& cur, int pos,
               std::vector<MultiIndex>& out) {
  if (pos == vars - 1) {
    if (degree <= caps[pos]) {
      cur[pos] = degree;
      out.push_back(cur);
    }
    return;
  }
  for (int k = std::min(degree, caps[pos]); k >= 0; --k) {
    cur[pos] = k;
    enumerate(vars, degree - k, caps, cur, pos + 1, out);
  }
}

}  // namespace

JetLayout::JetLayout(int vars, int order, std::vector<int> caps)
    : vars_(vars), order_(order), caps_(std::move(caps)) {
  if (vars < 1 || order < 0) {
    throw Error(ErrorKind::InvalidArgument, "jet layout needs vars >= 1 and order >= 0");
  }
  if (caps_.empty()) {
    caps_.assign(vars, order);
  }
  if (static_cast<int>(caps_.size()) != vars) {
    throw Error(ErrorKind::InvalidArgument, "jet layout caps must have one entry per variable");
  }
  for (int d = 0; d <= order; ++d) {
    MultiIndex cur(vars, 0);
    enumerate(vars, d, caps_, cur, 0, monomials_);
  }
  for (int i = 0; i < size(); ++i) {
    index_.emplace(monomials_[i], i);
    int deg = 0;
    for (int e : monomials_[i]) {
      deg += e;
    }
    degrees_.push_back(deg);
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (degrees_[i] + degrees_[j] > order) {
        continue;
      }
      MultiIndex sum(vars);
      for (int v = 0; v < vars; ++v) {
        sum[v] = monomials_[i][v] + monomials_[j][v];
      }
      int out = index_of(sum);
      if (out >= 0) {
        products_.push_back({i, j, out});
      }
    }
  }
  shift_.assign(static_cast<size_t>(size()) * vars, -1);
  for (int i = 0; i < size(); ++i) {
    for (int v = 0; v < vars; ++v) {
      MultiIndex up = monomials_[i];
      ++up[v];
      shift_[i * vars + v] = index_of(up);
    }
  }
}

int JetLayout::index_of(const MultiIndex& exponents) const {
  auto it = index_.find(exponents);
  return it == index_.end() ? -1 : it->second;
}

JetLayoutPtr jet_layout(int vars, int order, const std::vector<int>& caps) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, std::vector<int>>, JetLayoutPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{vars, order, caps}];
  if (!slot) {
    slot = std::make_shared<const JetLayout>(vars, order, caps);
  }
  return slot;
}

Jet::Jet(JetLayoutPtr layout, const Complex& constant)
    : layout_(std::move(layout)), c_(static_cast<size_t>(layout_->size())) {
  c_[0] = constant;
}

Jet Jet::variable(JetLayoutPtr layout, int var, const Complex& center) {
  Jet j(layout, center);
  if (layout->order() >= 1) {
    MultiIndex e(layout->vars(), 0);
    e[var] = 1;
    if (int at = layout->index_of(e); at >= 0) {
      j.c_[at] = Complex(1);
    }
  }
  return j;
}

Jet Jet::affine(JetLayoutPtr layout, const Complex& constant, const std::vector<int>& coeffs) {
  Jet j(layout, constant);
  if (layout->order() >= 1) {
    for (int v = 0; v < layout->vars() && v < static_cast<int>(coeffs.size()); ++v) {
      if (coeffs[v] != 0) {
        MultiIndex e(layout->vars(), 0);
        e[v] = 1;
        if (int at = layout->index_of(e); at >= 0) {
          j.c_[at] = Complex(coeffs[v]);
        }
      }
    }
  }
  return j;
}

Complex Jet::coefficient(const MultiIndex& exponents) const {
  int i = layout_->index_of(exponents);
  return i < 0 ? Complex(0) : c_[i];
}

Jet& Jet::operator+=(const Jet& o) {
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
  }
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] -= o.c_[i];
  }
  return *this;
}

Jet& Jet::operator+=(const Complex& c) {
  c_[0] += c;
  return *this;
}

Jet& Jet::operator-=(const Complex& c) {
  c_[0] -= c;
  return *this;
}

Jet& Jet::operator*=(const Complex& c) {
  for (auto& v : c_) {
    v *= c;
  }
  return *this;
}

Jet& Jet::operator*=(const Real& c) {
  for (auto& v : c_) {
    v *= c;
  }
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  std::vector<Complex> out(c_.size());
  for (const auto& p : layout_->products()) {
    if (c_[p.lhs].is_zero() || o.c_[p.rhs].is_zero()) {
      continue;
    }
    out[p.out] += c_[p.lhs] * o.c_[p.rhs];
  }
  c_ = std::move(out);
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& v : r.c_) {
    v = -v;
  }
  return r;
}

Complex Jet::evaluate(const ComplexPoint& offsets) const {
  Complex sum(0);
  for (int i = 0; i < size(); ++i) {
    if (c_[i].is_zero()) {
      continue;
    }
    Complex term = c_[i];
    const MultiIndex& e = layout_->monomial(i);
    for (int v = 0; v < layout_->vars(); ++v) {
      if (e[v] > 0) {
        term *= ipow(offsets[v], e[v]);
      }
    }
    sum += term;
  }
  return sum;
}

namespace {

// sum_k a[k] * u^k for nilpotent u (constant term zero).
Jet nilpotent_series(const Jet& u, const std::vector<Complex>& a) {
  const int order = u.layout()->order();
  Jet result(u.layout(), a[0]);
  Jet power(u.layout(), Complex(1));
  for (int k = 1; k <= order && k < static_cast<int>(a.size()); ++k) {
    power *= u;
    Jet term = power;
    term *= a[k];
    result += term;
  }
  return result;
}

Jet nilpotent_part(const Jet& x) {
  Jet u = x;
  u[0] = Complex(0);
  return u;
}

}  // namespace

Jet exp(const Jet& x) {
  const int order = x.layout()->order();
  Complex e0 = exp(x.constant());
  std::vector<Complex> a(order + 1);
  Real inv_fact(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      inv_fact /= k;
    }
    a[k] = e0 * inv_fact;
  }
  return nilpotent_series(nilpotent_part(x), a);
}

Jet log(const Jet& x) {
  const int order = x.layout()->order();
  const Complex& x0 = x.constant();
  Complex inv = reciprocal(x0);
  std::vector<Complex> a(order + 1);
  a[0] = log(x0);
  Complex p(1);
  for (int k = 1; k <= order; ++k) {
    p *= inv;
    Complex t = p / Real(k);
    a[k] = (k % 2 == 1) ? t : -t;
  }
  return nilpotent_series(nilpotent_part(x), a);
}

Jet sin(const Jet& x) {
  const int order = x.layout()->order();
  Complex s0 = sin(x.constant());
  Complex c0 = cos(x.constant());
  std::vector<Complex> a(order + 1);
  Real inv_fact(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      inv_fact /= k;
    }
    // k-th derivative of sin cycles sin, cos, -sin, -cos.
    Complex d;
    switch (k % 4) {
      case 0: d = s0; break;
      case 1: d = c0; break;
      case 2: d = -s0; break;
      default: d = -c0; break;
    }
    a[k] = d * inv_fact;
  }
  return nilpotent_series(nilpotent_part(x), a);
}

Jet reciprocal(const Jet& x) {
  const int order = x.layout()->order();
  Complex inv = reciprocal(x.constant());
  std::vector<Complex> a(order + 1);
  Complex p = inv;
  for (int k = 0; k <= order; ++k) {
    a[k] = (k % 2 == 0) ? p : -p;
    p *= inv;
  }
  return nilpotent_series(nilpotent_part(x), a);
}

Jet pow(const Real& base, const Jet& x) {
  Jet scaled = x;
  scaled *= log(base);
  return exp(scaled);
}

Jet pow(int base, const Jet& x) {
  Jet scaled = x;
  scaled *= log_integer(base);
  return exp(scaled);
}

Real magnitude(const Jet& x) {
  Real m(0);
  for (const auto& c : x.coefficients()) {
    Real a = magnitude(c);
    if (a > m) {
      m = a;
    }
  }
  return m;
}

Jet divide_by_linear(const Jet& x, const std::vector<Real>& weights) {
  const auto& layout = *x.layout();
  const int vars = layout.vars();
  int pivot = -1;
  for (int v = 0; v < vars; ++v) {
    if (weights[v] != 0) {
      pivot = v;
      break;
    }
  }
  if (pivot < 0) {
    throw Error(ErrorKind::InvalidArgument, "division by the zero linear form");
  }
  Jet q(x.layout());
  // Degree-by-degree, larger pivot exponent first, so every q referenced on
  // the right-hand side is already known.
  for (int d = 0; d < layout.order(); ++d) {
    std::vector<int> idx;
    for (int i = 0; i < layout.size(); ++i) {
      if (layout.degree(i) == d) {
        idx.push_back(i);
      }
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return layout.monomial(a)[pivot] > layout.monomial(b)[pivot];
    });
    for (int i : idx) {
      int up = layout.shifted(i, pivot);
      if (up < 0) {
        continue;
      }
      Complex value = x[up];
      for (int k = 0; k < vars; ++k) {
        if (k == pivot || weights[k] == 0 || layout.monomial(i)[k] == 0) {
          continue;
        }
        MultiIndex e = layout.monomial(i);
        ++e[pivot];
        --e[k];
        int at = layout.index_of(e);
        if (at >= 0) {
          value -= q[at] * weights[k];
        }
      }
      q[i] = value / weights[pivot];
    }
  }
  return q;
}

}  // namespace ezl
