#pragma once

#include <map>
#include <string>

#include "foliate/jet.hpp"
#include "foliate/rational_function.hpp"

namespace foliate {

/// Class of num/den modulo I_S^{k+1}, where den involves no normal variable
/// and has a nonzero constant term (so it is a unit near the chart center).
/// The numerator is kept truncated; equality is tested by cross-multiplying.
class RationalJet {
 public:
  RationalJet() = default;
  RationalJet(IdealSpec ideal, const MultiPoly& num);
  RationalJet(IdealSpec ideal, const MultiPoly& num, const MultiPoly& den);

  /// Expands 1/D = sum_j (-D1)^j / D0^{j+1} with D0 = D|_S, D1 = D - D0,
  /// so the result has denominator D0^{k+1}. Throws ZeroDenominator when
  /// D has no constant term.
  static RationalJet from_function(const IdealSpec& ideal, const RationalFunction& f);

  const IdealSpec& ideal() const { return ideal_; }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Representative as a normalized rational function.
  RationalFunction as_function() const { return RationalFunction(num_, den_); }
  /// Truncated polynomial representative; requires a constant denominator.
  JetClass as_jet() const;
  std::string to_string() const { return as_function().to_string(); }

  /// Substitutes rational images for variables and re-truncates.
  RationalJet compose(const std::map<std::string, RationalFunction>& images) const;

  RationalJet operator-() const;
  friend RationalJet operator+(const RationalJet& a, const RationalJet& b);
  friend RationalJet operator-(const RationalJet& a, const RationalJet& b);
  friend RationalJet operator*(const RationalJet& a, const RationalJet& b);
  friend bool operator==(const RationalJet& a, const RationalJet& b);

 private:
  IdealSpec ideal_;
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace foliate
