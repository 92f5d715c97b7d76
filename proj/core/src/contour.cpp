#include "ezl/contour.hpp"

#include "ezl/jet.hpp"

#include <map>
#include <numeric>

namespace ezl {

namespace {

Complex unit_root(int k, int count) {
  return polar(Real(1), Real(2) * pi() * k / count);
}

}  // namespace

ContourResult contour_coefficients(const std::function<Complex(const Complex&)>& f, const Complex& center,
                                   const Real& radius, int min_order, int max_order, const Real& tol,
                                   int initial_nodes, int max_nodes) {
  std::map<std::pair<int, int>, Complex> values;  // reduced fraction k/K -> f
  auto sample = [&](int k, int count) -> const Complex& {
    int g = std::gcd(k, count);
    auto key = std::make_pair(k / g, count / g);
    auto it = values.find(key);
    if (it == values.end()) {
      it = values.emplace(key, f(center + unit_root(k, count) * radius)).first;
    }
    return it->second;
  };
  auto extract = [&](int count) {
    std::vector<Complex> out;
    for (int n = min_order; n <= max_order; ++n) {
      Complex sum(0);
      for (int k = 0; k < count; ++k) {
        sum += sample(k, count) * unit_root((-(static_cast<long long>(k) * n) % count + count) % count, count);
      }
      sum /= Real(count);
      sum /= pow(radius, n);
      out.push_back(sum);
    }
    return out;
  };
  int count = initial_nodes;
  std::vector<Complex> prev = extract(count);
  while (true) {
    const int next_count = 2 * count;
    std::vector<Complex> next = extract(next_count);
    Real change(0);
    for (size_t i = 0; i < next.size(); ++i) {
      Real d = abs(next[i] - prev[i]);
      if (d > change) {
        change = d;
      }
    }
    if (change <= tol || next_count >= max_nodes) {
      if (change > tol) {
        throw Error(ErrorKind::PrecisionUnreachable, "contour coefficients did not stabilise");
      }
      return {std::move(next), min_order, next_count, change};
    }
    prev = std::move(next);
    count = next_count;
  }
}

PolydiscResult polydisc_coefficients(const std::function<Complex(const ComplexPoint&)>& f, const ComplexPoint& center,
                                     const Real& radius, int order, const Real& tol, int initial_nodes,
                                     int max_nodes) {
  const int vars = static_cast<int>(center.size());
  auto layout = jet_layout(vars, order);
  std::map<std::vector<std::pair<int, int>>, Complex> cache;
  auto value_at = [&](const std::vector<int>& idx, int count) -> const Complex& {
    std::vector<std::pair<int, int>> key;
    ComplexPoint w(vars);
    for (int v = 0; v < vars; ++v) {
      int g = std::gcd(idx[v], count);
      key.emplace_back(idx[v] / g, count / g);
      w[v] = center[v] + unit_root(idx[v], count) * radius;
    }
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, f(w)).first;
    }
    return it->second;
  };
  auto extract = [&](int count) {
    std::vector<Complex> coef(layout->size());
    std::vector<int> idx(vars, 0);
    long long total = 1;
    for (int v = 0; v < vars; ++v) {
      total *= count;
    }
    for (long long flat = 0; flat < total; ++flat) {
      long long rest = flat;
      for (int v = 0; v < vars; ++v) {
        idx[v] = static_cast<int>(rest % count);
        rest /= count;
      }
      const Complex& fv = value_at(idx, count);
      for (int i = 0; i < layout->size(); ++i) {
        const MultiIndex& e = layout->monomial(i);
        long long phase = 0;
        for (int v = 0; v < vars; ++v) {
          phase += static_cast<long long>(idx[v]) * e[v];
        }
        int p = static_cast<int>((count - phase % count) % count);
        coef[i] += fv * unit_root(p, count);
      }
    }
    for (int i = 0; i < layout->size(); ++i) {
      coef[i] /= pow(Real(count), vars);
      coef[i] /= pow(radius, layout->degree(i));
    }
    return coef;
  };
  int count = initial_nodes;
  std::vector<Complex> prev = extract(count);
  while (true) {
    const int next_count = 2 * count;
    std::vector<Complex> next = extract(next_count);
    Real change(0);
    for (size_t i = 0; i < next.size(); ++i) {
      Real d = abs(next[i] - prev[i]);
      if (d > change) {
        change = d;
      }
    }
    if (change <= tol || next_count >= max_nodes) {
      if (change > tol) {
        throw Error(ErrorKind::PrecisionUnreachable, "polydisc coefficients did not stabilise");
      }
      PolydiscResult out;
      for (int i = 0; i < layout->size(); ++i) {
        out.monomials.push_back(layout->monomial(i));
      }
      out.coefficients = std::move(next);
      out.nodes = next_count;
      out.change = change;
      return out;
    }
    prev = std::move(next);
    count = next_count;
  }
}

}  // namespace ezl
