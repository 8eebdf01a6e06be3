#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foliate/rational.hpp"

namespace foliate {

using VarList = std::vector<std::string>;
/// One nonnegative exponent per variable of the owning polynomial.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Graded lexicographic order: total degree first, then lexicographic
/// with the first variable most significant.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with Gaussian-rational coefficients over
/// an ordered list of named variables. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, GaussianRational, GrlexLess>;

  MultiPoly();
  explicit MultiPoly(VarList variables);
  explicit MultiPoly(std::shared_ptr<const VarList> variables);

  static MultiPoly constant(const VarList& variables, const GaussianRational& value);
  static MultiPoly variable(const VarList& variables, std::string_view name);
  static MultiPoly monomial(const VarList& variables, Exponent exponent, const GaussianRational& coefficient);

  // Same-variable-list constructors.
  MultiPoly zero_like() const { return MultiPoly(vars_); }
  MultiPoly constant_like(const GaussianRational& value) const;
  MultiPoly variable_like(std::string_view name) const;

  const VarList& variables() const { return *vars_; }
  const std::shared_ptr<const VarList>& variable_handle() const { return vars_; }
  std::size_t num_variables() const { return vars_->size(); }
  std::optional<std::size_t> find_variable(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t variable_index(std::string_view name) const;
  bool same_variables(const MultiPoly& other) const;

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussianRational constant_term() const;
  GaussianRational coefficient(const Exponent& e) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;
  /// True when no variable other than `var` occurs.
  bool is_univariate_in(std::size_t var) const;

  void add_term(const Exponent& e, const GaussianRational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const GaussianRational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const GaussianRational& c) { return a *= c; }
  friend MultiPoly operator*(const GaussianRational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned exponent) const;

  MultiPoly derivative(std::string_view var) const;
  MultiPoly derivative(std::size_t var) const;
  /// Polynomial composition; the result lives on the images' common list.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;
  /// Sets one variable to a constant, keeping the variable list.
  MultiPoly bind(std::string_view var, const GaussianRational& value) const;
  /// Re-expresses the polynomial over another list; every variable that
  /// actually occurs must be present there.
  MultiPoly with_variables(const VarList& variables) const;
  MultiPoly filter(const std::function<bool(const Exponent&)>& keep) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
  GaussianRational evaluate(std::span<const GaussianRational> point) const;

  /// Canonical text, descending grlex order, e.g. "x^2*y + 3/2*x".
  std::string to_string() const;

 private:
  void require_same(const MultiPoly& o) const;

  std::shared_ptr<const VarList> vars_;
  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };

MultiPoly poly_arith(PolyOp op, const MultiPoly& a, const MultiPoly& b);
MultiPoly partial_derivative(const MultiPoly& p, std::string_view var);
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings);

/// Quotient when `divisor` divides `dividend` exactly, otherwise nullopt.
std::optional<MultiPoly> divide_exact(const MultiPoly& dividend, const MultiPoly& divisor);

/// Monic gcd of two polynomials that only involve the variable `var`.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t var);

}  // namespace foliate
