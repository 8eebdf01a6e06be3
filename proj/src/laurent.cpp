#include "foliate/laurent.hpp"

#include "foliate/error.hpp"

namespace foliate {

namespace {

// Dense coefficients of p in `var`, starting at var^shift.
std::vector<GaussianRational> dense_from(const MultiPoly& p, std::size_t var, int shift) {
  std::vector<GaussianRational> out(static_cast<std::size_t>(p.degree_in(var) - shift + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e[var] - shift)] += c;
  return out;
}

}  // namespace

bool LaurentSeries::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

GaussianRational LaurentSeries::coefficient(int exponent) const {
  if (exponent < min_exponent || exponent > order) return {};
  return coeffs[static_cast<std::size_t>(exponent - min_exponent)];
}

std::string LaurentSeries::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const GaussianRational& c = coeffs[k];
    if (c.is_zero()) continue;
    const int e = min_exponent + static_cast<int>(k);
    std::string coeff = c.is_real() ? c.to_string() : "(" + c.to_string() + ")";
    bool negative = c.is_real() && c.re().sign() < 0;
    if (negative) coeff = (-c).to_string();
    std::string term;
    if (e == 0) {
      term = coeff;
    } else {
      const std::string power = e == 1 ? variable : variable + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      term = coeff == "1" ? power : coeff + "*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(" + variable + "^" + std::to_string(order + 1) + ")";
}

int valuation(const MultiPoly& p, std::size_t var) {
  int v = -1;
  for (const auto& [e, c] : p.terms()) {
    if (v < 0 || e[var] < v) v = e[var];
  }
  return v;
}

LaurentSeries laurent_expand(const MultiPoly& num, const MultiPoly& den, std::string_view var, int order) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "Laurent expansion with zero denominator");
  if (!num.same_variables(den)) throw Error(ErrorCode::VariableMismatch, "numerator and denominator lists differ");
  const std::size_t idx = den.variable_index(var);
  if (!num.is_univariate_in(idx) || !den.is_univariate_in(idx)) {
    throw Error(ErrorCode::InvalidArgument, "Laurent expansion needs polynomials in " + std::string(var) + " only");
  }
  LaurentSeries s{std::string(var), order, order, {GaussianRational()}};
  if (num.is_zero()) return s;
  const int a = valuation(num, idx);
  const int d = valuation(den, idx);
  if (order < a - d) return s;
  s.min_exponent = a - d;
  const std::size_t n = static_cast<std::size_t>(order - s.min_exponent) + 1;
  // num = var^a * p, den = var^d * u with p(0), u(0) nonzero.
  const auto p = dense_from(num, idx, a);
  const auto u = dense_from(den, idx, d);
  // 1/u = (1/u0) * sum_j (-(u - u0)/u0)^j, accumulated by the equivalent recurrence.
  const GaussianRational u0_inv = u[0].inverse();
  std::vector<GaussianRational> w(n);
  w[0] = u0_inv;
  for (std::size_t m = 1; m < n; ++m) {
    GaussianRational acc;
    for (std::size_t j = 1; j <= m && j < u.size(); ++j) acc += u[j] * w[m - j];
    w[m] = -(acc * u0_inv);
  }
  s.coeffs.assign(n, GaussianRational());
  for (std::size_t i = 0; i < p.size() && i < n; ++i) {
    if (p[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) s.coeffs[i + j] += p[i] * w[j];
  }
  return s;
}

GaussianRational residue_coefficient(const LaurentSeries& s) {
  if (s.order < -1) {
    throw Error(ErrorCode::InsufficientOrder,
                "series truncated at order " + std::to_string(s.order) + " does not reach exponent -1");
  }
  return s.coefficient(-1);
}

}  // namespace foliate
