#pragma once

#include "ezl/jet.hpp"

#include <map>
#include <memory>
#include <vector>

namespace ezl {

/// Linear forms (no constant term) in the jet offsets, normalised so the
/// first nonzero weight is 1. Ids are stable for the registry's lifetime.
class LinearFormRegistry {
 public:
  explicit LinearFormRegistry(int vars) : vars_(vars) {}

  int vars() const noexcept { return vars_; }
  int size() const noexcept { return static_cast<int>(forms_.size()); }
  const std::vector<Real>& weights(int id) const { return forms_[id]; }
  /// Registers (or finds) the form; `scale` receives the factor such that
  /// the input equals scale * normalised form.
  int intern(const std::vector<Real>& weights, Real& scale);
  int intern(const std::vector<int>& weights);
  /// Jet of the normalised form.
  Jet as_jet(int id, const JetLayoutPtr& layout) const;

 private:
  int vars_;
  std::vector<std::vector<Real>> forms_;
};

using LinearFormRegistryPtr = std::shared_ptr<LinearFormRegistry>;

/// Sum of Taylor numerators over products of registered linear forms:
/// the extended Laurent shape sum_a J_a / prod_k L_k^{a_k}.
class PoleJet {
 public:
  using Exponents = std::vector<int>;

  PoleJet() = default;
  PoleJet(LinearFormRegistryPtr registry, const Jet& regular);

  const LinearFormRegistryPtr& registry() const noexcept { return registry_; }
  const std::map<Exponents, Jet>& terms() const noexcept { return terms_; }
  const JetLayoutPtr& layout() const noexcept { return layout_; }

  PoleJet& operator+=(const PoleJet& o);
  PoleJet& operator-=(const PoleJet& o);
  PoleJet& operator*=(const PoleJet& o);
  PoleJet& operator*=(const Jet& o);
  PoleJet& operator*=(const Complex& c);
  PoleJet& operator*=(const Real& c);
  PoleJet& operator+=(const Complex& c);

  /// Divides by an affine jet; a vanishing constant term becomes a
  /// symbolic denominator.
  PoleJet divided_by(const Jet& d) const;

  /// Constant term of the regular (denominator-free) part.
  Complex constant() const;

  /// sum_a J_a * prod_k L_k^{target_k - a_k}; requires target >= a.
  Jet times_denominators(const Exponents& target) const;

 private:
  void add_term(Exponents e, const Jet& j);

  LinearFormRegistryPtr registry_;
  JetLayoutPtr layout_;
  std::map<Exponents, Jet> terms_;
};

inline PoleJet operator+(PoleJet a, const PoleJet& b) { return a += b; }
inline PoleJet operator-(PoleJet a, const PoleJet& b) { return a -= b; }
inline PoleJet operator*(PoleJet a, const PoleJet& b) { return a *= b; }
inline PoleJet operator*(PoleJet a, const Jet& b) { return a *= b; }
inline PoleJet operator*(PoleJet a, const Complex& b) { return a *= b; }

Real magnitude(const PoleJet& x);
inline Complex constant(const PoleJet& x) { return x.constant(); }

}  // namespace ezl
