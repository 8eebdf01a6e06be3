#include "foliate/poly.hpp"

#include <algorithm>
#include <numeric>

#include "foliate/error.hpp"

namespace foliate {

namespace {

const std::shared_ptr<const VarList>& empty_vars() {
  static const auto kEmpty = std::make_shared<const VarList>();
  return kEmpty;
}

std::string monomial_text(const VarList& vars, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Dense univariate helpers for the Euclidean gcd.
using Dense = std::vector<GaussianRational>;

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Dense to_dense(const MultiPoly& p, std::size_t var) {
  Dense d(static_cast<std::size_t>(std::max(0, p.degree_in(var))) + 1);
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e[var])] += c;
  trim(d);
  return d;
}

Dense dense_rem(Dense a, const Dense& b) {
  const GaussianRational lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    const GaussianRational f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly() : vars_(empty_vars()) {}

MultiPoly::MultiPoly(VarList variables) : vars_(std::make_shared<const VarList>(std::move(variables))) {}

MultiPoly::MultiPoly(std::shared_ptr<const VarList> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(const VarList& variables, const GaussianRational& value) {
  MultiPoly p(variables);
  p.add_term(Exponent(variables.size(), 0), value);
  return p;
}

MultiPoly MultiPoly::variable(const VarList& variables, std::string_view name) {
  return MultiPoly(variables).variable_like(name);
}

MultiPoly MultiPoly::monomial(const VarList& variables, Exponent exponent, const GaussianRational& coefficient) {
  if (exponent.size() != variables.size()) {
    throw Error(ErrorCode::VariableMismatch, "exponent length does not match variable count");
  }
  MultiPoly p(variables);
  p.add_term(exponent, coefficient);
  return p;
}

MultiPoly MultiPoly::constant_like(const GaussianRational& value) const {
  MultiPoly p(vars_);
  p.add_term(Exponent(vars_->size(), 0), value);
  return p;
}

MultiPoly MultiPoly::variable_like(std::string_view name) const {
  Exponent e(vars_->size(), 0);
  e[variable_index(name)] = 1;
  MultiPoly p(vars_);
  p.add_term(e, GaussianRational(1));
  return p;
}

std::optional<std::size_t> MultiPoly::find_variable(std::string_view name) const {
  const auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_->begin());
}

std::size_t MultiPoly::variable_index(std::string_view name) const {
  if (auto i = find_variable(name)) return *i;
  throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

bool MultiPoly::same_variables(const MultiPoly& other) const {
  return vars_ == other.vars_ || *vars_ == *other.vars_;
}

void MultiPoly::require_same(const MultiPoly& o) const {
  if (!same_variables(o)) throw Error(ErrorCode::VariableMismatch, "polynomials over different variable lists");
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && foliate::total_degree(terms_.begin()->first) == 0);
}

GaussianRational MultiPoly::constant_term() const { return coefficient(Exponent(vars_->size(), 0)); }

GaussianRational MultiPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return foliate::total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MultiPoly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

bool MultiPoly::is_univariate_in(std::size_t var) const {
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var && e[i] != 0) return false;
    }
  }
  return true;
}

void MultiPoly::add_term(const Exponent& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (e.size() != vars_->size()) throw Error(ErrorCode::VariableMismatch, "exponent length mismatch");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same(b);
  MultiPoly r(a.vars_);
  Exponent e(a.vars_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.same_variables(b) && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant_like(GaussianRational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::string_view var) const { return derivative(variable_index(var)); }

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * GaussianRational(e[var]));
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
  if (bindings.empty()) return *this;
  const auto& target = bindings.begin()->second.variable_handle();
  for (const auto& [name, image] : bindings) {
    variable_index(name);
    if (!image.same_variables(bindings.begin()->second)) {
      throw Error(ErrorCode::VariableMismatch, "substitution images over different variable lists");
    }
  }
  // Image of every variable of this polynomial, unbound ones mapped to themselves.
  std::vector<std::optional<MultiPoly>> images(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (auto it = bindings.find((*vars_)[i]); it != bindings.end()) {
      images[i] = it->second;
    } else if (depends_on(i)) {
      MultiPoly probe(target);
      if (!probe.find_variable((*vars_)[i])) {
        throw Error(ErrorCode::VariableMismatch,
                    "unbound variable '" + (*vars_)[i] + "' missing from the target variable list");
      }
      images[i] = probe.variable_like((*vars_)[i]);
    }
  }
  std::vector<std::vector<MultiPoly>> powers(vars_->size());
  auto power = [&](std::size_t var, int k) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly(target).constant_like(GaussianRational(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * *images[var]);
    return cache[static_cast<std::size_t>(k)];
  };
  MultiPoly result(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly(target).constant_like(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * power(i, e[i]);
    }
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::bind(std::string_view var, const GaussianRational& value) const {
  const std::size_t idx = variable_index(var);
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) {
      r.add_term(e, c);
      continue;
    }
    if (value.is_zero()) continue;
    GaussianRational factor(1);
    for (int k = 0; k < e[idx]; ++k) factor *= value;
    Exponent d = e;
    d[idx] = 0;
    r.add_term(d, c * factor);
  }
  return r;
}

MultiPoly MultiPoly::with_variables(const VarList& variables) const {
  if (variables == *vars_) return *this;
  MultiPoly r(variables);
  std::vector<std::optional<std::size_t>> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = r.find_variable((*vars_)[i]);
  for (const auto& [e, c] : terms_) {
    Exponent d(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i]) {
        throw Error(ErrorCode::VariableMismatch, "variable '" + (*vars_)[i] + "' is not in the target list");
      }
      d[*map[i]] = e[i];
    }
    r.add_term(d, c);
  }
  return r;
}

MultiPoly MultiPoly::filter(const std::function<bool(const Exponent&)>& keep) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (keep(e)) r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

std::complex<double> MultiPoly::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != vars_->size()) throw Error(ErrorCode::VariableMismatch, "point dimension mismatch");
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
  if (point.size() != vars_->size()) throw Error(ErrorCode::VariableMismatch, "point dimension mismatch");
  GaussianRational sum;
  for (const auto& [e, c] : terms_) {
    GaussianRational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = monomial_text(*vars_, e);
    bool negative = false;
    std::string coeff;
    if (c.is_real() || c.re().is_zero()) {
      // Real or purely imaginary: pull the sign out front.
      const Rational& part = c.is_real() ? c.re() : c.im();
      negative = part.sign() < 0;
      const Rational mag = negative ? -part : part;
      const bool unit = mag == Rational(1);
      if (c.is_real()) {
        coeff = unit && !mono.empty() ? "" : mag.to_string();
      } else {
        coeff = unit ? "i" : mag.to_string() + "*i";
      }
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    std::string term = coeff;
    if (!mono.empty()) term = coeff.empty() ? mono : coeff + "*" + mono;
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

MultiPoly poly_arith(PolyOp op, const MultiPoly& a, const MultiPoly& b) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  throw Error(ErrorCode::InternalError, "unknown polynomial operation");
}

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var) { return p.derivative(var); }

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
  return p.substitute(bindings);
}

std::optional<MultiPoly> divide_exact(const MultiPoly& dividend, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero polynomial");
  if (!dividend.same_variables(divisor)) throw Error(ErrorCode::VariableMismatch, "division over different lists");
  const auto& [lead_e, lead_c] = *divisor.terms().rbegin();
  const GaussianRational lead_inv = lead_c.inverse();
  MultiPoly remainder = dividend;
  MultiPoly quotient = dividend.zero_like();
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms().rbegin();
    Exponent shift(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      shift[i] = re[i] - lead_e[i];
      if (shift[i] < 0) return std::nullopt;
    }
    MultiPoly step = dividend.zero_like();
    step.add_term(shift, rc * lead_inv);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  if (!a.same_variables(b)) throw Error(ErrorCode::VariableMismatch, "gcd over different lists");
  if (!a.is_univariate_in(var) || !b.is_univariate_in(var)) {
    throw Error(ErrorCode::InvalidArgument, "univariate_gcd on a multivariate polynomial");
  }
  Dense x = to_dense(a, var);
  Dense y = to_dense(b, var);
  while (!y.empty()) {
    Dense r = dense_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  MultiPoly g = a.zero_like();
  if (x.empty()) return g;
  const GaussianRational lead_inv = x.back().inverse();
  for (std::size_t k = 0; k < x.size(); ++k) {
    Exponent e(a.num_variables(), 0);
    e[var] = static_cast<int>(k);
    g.add_term(e, x[k] * lead_inv);
  }
  return g;
}

}  // namespace foliate
