#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "foliate/poly.hpp"

namespace foliate {

/// Quotient num/den of two polynomials over one variable list. Normalization
/// is best effort: monomial factors and exact divisors cancel, univariate
/// pairs are reduced by their gcd, and den is scaled so that its lowest
/// grlex term has coefficient 1.
class RationalFunction {
 public:
  RationalFunction() : RationalFunction(MultiPoly()) {}
  explicit RationalFunction(MultiPoly num);
  /// Throws ZeroDenominator when den is the zero polynomial.
  RationalFunction(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VarList& variables() const { return num_.variables(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// num/den when den is constant.
  std::optional<MultiPoly> as_polynomial() const;

  RationalFunction derivative(std::string_view var) const;
  /// Substitutes rational images for variables; unbound variables map to
  /// themselves on the images' common list.
  RationalFunction compose(const std::map<std::string, RationalFunction>& images) const;
  RationalFunction bind(std::string_view var, const GaussianRational& value) const;
  RationalFunction with_variables(const VarList& variables) const;

  /// Throws ZeroDenominator when den vanishes at the point.
  GaussianRational evaluate(std::span<const GaussianRational> point) const;

  /// "p" for polynomials, otherwise "n/d" with compound parts parenthesized.
  std::string to_string() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  /// Cross-multiplied comparison.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace foliate
