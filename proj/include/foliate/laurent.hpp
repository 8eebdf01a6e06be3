#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "foliate/poly.hpp"

namespace foliate {

/// Truncated Laurent series sum_{e=min_exponent}^{order} coeffs[e - min_exponent] * var^e.
struct LaurentSeries {
  std::string variable;
  int min_exponent = 0;
  int order = 0;
  std::vector<GaussianRational> coeffs;

  bool is_zero() const;
  /// Zero outside the stored range.
  GaussianRational coefficient(int exponent) const;
  std::string to_string() const;
};

/// Expansion of num/den around var = 0 up to and including var^order.
/// Both inputs must involve no variable other than `var`.
LaurentSeries laurent_expand(const MultiPoly& num, const MultiPoly& den, std::string_view var, int order);

/// Coefficient of var^-1; throws InsufficientOrder when order < -1.
GaussianRational residue_coefficient(const LaurentSeries& s);

/// Smallest exponent with a nonzero coefficient; -1 for zero input.
int valuation(const MultiPoly& p, std::size_t var);

}  // namespace foliate
