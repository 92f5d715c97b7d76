#pragma once

#include "ezl/pole_jet.hpp"

#include <string>
#include <vector>

namespace ezl {

/// The affine form sum_i coeffs[i] s_{i+1} - c.
struct LinearFactor {
  std::vector<int> coeffs;
  long c = 0;

  /// Suffix form s(j,r) - c: returns j (1-based), else 0.
  int suffix_start() const;
  Complex evaluate(const ComplexPoint& s) const;
  std::string to_string() const;

  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// numerator(s - center) / prod denominator.
struct FractionTerm {
  std::vector<LinearFactor> denominator;
  Jet numerator;
};

/// Extended Laurent expansion at an integer point: a sum of Taylor
/// numerators (in the offsets s_i - m_i, truncated at total order `order`)
/// over products of affine forms.
class LaurentExpansion {
 public:
  IntPoint center;
  int order = 0;
  int digits = PrecisionContext::kDefaultDigits;
  std::vector<FractionTerm> terms;

  int depth() const { return static_cast<int>(center.size()); }
  /// Truncated expansion at s (off the denominator zero set).
  Complex evaluate(const ComplexPoint& s) const;
  /// sum over terms of |top-order numerator part| / |denominator| at s; a
  /// size estimate for the truncation remainder.
  Real top_order_size(const ComplexPoint& s) const;
  /// Term with exactly this denominator (as a multiset), or nullptr.
  const FractionTerm* find(const std::vector<LinearFactor>& denominator) const;
  /// Numerator coefficient of the term with the given denominator; zero
  /// when absent.
  Complex coefficient(const std::vector<LinearFactor>& denominator, const MultiIndex& n) const;
  bool has_poles() const;

  /// {"center":[...],"order":N,"digits":d,"terms":[{"denominator":[{"j":k,"c":c}],
  /// "numerator":{"n1,...,nr":["re","im"]}}]}; forms that are not suffix sums
  /// are written {"coeffs":[...],"c":c}.
  std::string to_json() const;
  static LaurentExpansion from_json(const std::string& text);
  /// Rows denominator,multi_index,re,im.
  std::string to_csv() const;

  /// Converts a pole jet in the offsets s - center. Terms whose numerator
  /// stays below `drop` are discarded.
  static LaurentExpansion from_pole_jet(const PoleJet& p, const IntPoint& center, int order, int digits,
                                        const Real& drop);
};

/// Suffix factor s(j,r) - c.
LinearFactor suffix_factor(int j, int r, long c);

}  // namespace ezl
