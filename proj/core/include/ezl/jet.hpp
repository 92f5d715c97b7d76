#pragma once

#include "ezl/numeric.hpp"

#include <map>
#include <memory>
#include <vector>

namespace ezl {

/// Monomial bookkeeping for truncated multivariate Taylor series: all
/// exponent vectors of total degree <= order (and per-variable degree <=
/// caps[v] when caps are given), graded then lexicographic.
class JetLayout {
 public:
  struct Product {
    int lhs;
    int rhs;
    int out;
  };

  JetLayout(int vars, int order, std::vector<int> caps = {});

  int vars() const noexcept { return vars_; }
  int order() const noexcept { return order_; }
  const std::vector<int>& caps() const noexcept { return caps_; }
  int size() const noexcept { return static_cast<int>(monomials_.size()); }
  const MultiIndex& monomial(int i) const { return monomials_[i]; }
  int degree(int i) const { return degrees_[i]; }
  /// -1 when the exponent vector exceeds the truncation order.
  int index_of(const MultiIndex& exponents) const;
  const std::vector<Product>& products() const noexcept { return products_; }
  /// Index of the monomial exponents + e_var, or -1.
  int shifted(int i, int var) const { return shift_[i * vars_ + var]; }

 private:
  int vars_;
  int order_;
  std::vector<int> caps_;
  std::vector<MultiIndex> monomials_;
  std::vector<int> degrees_;
  std::map<MultiIndex, int> index_;
  std::vector<Product> products_;
  std::vector<int> shift_;
};

using JetLayoutPtr = std::shared_ptr<const JetLayout>;

/// Shared, cached layout for (vars, order, caps).
JetLayoutPtr jet_layout(int vars, int order, const std::vector<int>& caps = {});

/// Truncated Taylor series in `vars` offsets around a fixed center.
/// Coefficient k belongs to monomial layout->monomial(k), i.e. it is
/// f^{(n)}(center)/n! for multi-index n.
class Jet {
 public:
  Jet() = default;
  explicit Jet(JetLayoutPtr layout, const Complex& constant = Complex(0));

  /// center + offset_var.
  static Jet variable(JetLayoutPtr layout, int var, const Complex& center);
  /// Affine form: constant + sum_k coeffs[k] * offset_k.
  static Jet affine(JetLayoutPtr layout, const Complex& constant, const std::vector<int>& coeffs);

  const JetLayoutPtr& layout() const noexcept { return layout_; }
  int size() const noexcept { return static_cast<int>(c_.size()); }
  const Complex& constant() const { return c_[0]; }
  const Complex& operator[](int i) const { return c_[i]; }
  Complex& operator[](int i) { return c_[i]; }
  const std::vector<Complex>& coefficients() const noexcept { return c_; }
  /// Coefficient of the given exponent vector (zero when truncated away).
  Complex coefficient(const MultiIndex& exponents) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator+=(const Complex& c);
  Jet& operator-=(const Complex& c);
  Jet& operator*=(const Complex& c);
  Jet& operator*=(const Real& c);
  Jet& operator*=(const Jet& o);
  Jet operator-() const;

  /// Evaluate the truncated polynomial at the given offsets.
  Complex evaluate(const ComplexPoint& offsets) const;

 private:
  JetLayoutPtr layout_;
  std::vector<Complex> c_;
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r = a;
  r *= b;
  return r;
}
inline Jet operator+(Jet a, const Complex& b) { return a += b; }
inline Jet operator-(Jet a, const Complex& b) { return a -= b; }
inline Jet operator*(Jet a, const Complex& b) { return a *= b; }
inline Jet operator*(const Complex& b, Jet a) { return a *= b; }
inline Jet operator*(Jet a, const Real& b) { return a *= b; }
inline Jet operator+(const Complex& b, Jet a) { return a += b; }
inline Jet operator-(const Complex& b, const Jet& a) {
  Jet r = -a;
  return r += b;
}

Jet exp(const Jet& x);
Jet log(const Jet& x);
Jet sin(const Jet& x);
Jet reciprocal(const Jet& x);
inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
inline Jet operator/(Jet a, const Complex& b) { return a *= (Complex(1) / b); }
/// base^x for real positive base.
Jet pow(const Real& base, const Jet& x);
Jet pow(int base, const Jet& x);

/// Largest coefficient modulus.
Real magnitude(const Jet& x);

/// Exact division of a series by a linear form sum_k w_k * offset_k
/// (no constant term). The caller guarantees divisibility; the result is
/// truncated one order below the input.
Jet divide_by_linear(const Jet& x, const std::vector<Real>& weights);

// Scalar counterparts so templated kernels accept Complex and Jet alike.
inline const Complex& constant(const Complex& z) { return z; }
inline const Complex& constant(const Jet& j) { return j.constant(); }
/// Within a factor sqrt(2) of abs(z); used for size estimates.
inline Real magnitude(const Complex& z) { return boost::multiprecision::abs(z.re) + boost::multiprecision::abs(z.im); }

}  // namespace ezl
