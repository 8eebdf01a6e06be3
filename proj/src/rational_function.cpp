#include "foliate/rational_function.hpp"

#include <algorithm>
#include <map>

#include "foliate/error.hpp"

namespace foliate {

namespace {

// Smallest exponent per variable over all terms of both polynomials.
Exponent common_monomial(const MultiPoly& a, const MultiPoly& b) {
  Exponent lo(a.num_variables(), -1);
  for (const MultiPoly* p : {&a, &b}) {
    for (const auto& [e, c] : p->terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) lo[i] = lo[i] < 0 ? e[i] : std::min(lo[i], e[i]);
    }
  }
  for (int& v : lo) v = std::max(v, 0);
  return lo;
}

MultiPoly shift_down(const MultiPoly& p, const Exponent& by) {
  MultiPoly r = p.zero_like();
  for (const auto& [e, c] : p.terms()) {
    Exponent d = e;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= by[i];
    r.add_term(d, c);
  }
  return r;
}

std::optional<std::size_t> shared_univariate(const MultiPoly& a, const MultiPoly& b) {
  std::optional<std::size_t> var;
  for (const MultiPoly* p : {&a, &b}) {
    for (std::size_t i = 0; i < p->num_variables(); ++i) {
      if (!p->depends_on(i)) continue;
      if (var && *var != i) return std::nullopt;
      var = i;
    }
  }
  return var;
}

std::optional<std::size_t> single_variable(const MultiPoly& p) {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < p.num_variables(); ++i) {
    if (!p.depends_on(i)) continue;
    if (var) return std::nullopt;
    var = i;
  }
  return var;
}

// gcd of `uni` (a polynomial in `var` alone) with an arbitrary polynomial:
// the gcd with every coefficient of `other` viewed as a polynomial over `var`.
MultiPoly gcd_with_univariate(const MultiPoly& uni, const MultiPoly& other, std::size_t var) {
  std::map<Exponent, MultiPoly> slices;
  for (const auto& [e, c] : other.terms()) {
    Exponent rest = e;
    rest[var] = 0;
    Exponent own(e.size(), 0);
    own[var] = e[var];
    slices.try_emplace(rest, other.zero_like()).first->second.add_term(own, c);
  }
  MultiPoly g = uni;
  for (const auto& [rest, slice] : slices) {
    g = univariate_gcd(g, slice, var);
    if (g.total_degree() == 0) break;
  }
  return g;
}

}  // namespace

RationalFunction::RationalFunction(MultiPoly num) : num_(std::move(num)), den_(num_.constant_like(1)) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (!num_.same_variables(den_)) throw Error(ErrorCode::VariableMismatch, "numerator and denominator lists differ");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = num_.constant_like(1);
    return;
  }
  if (!den_.is_constant()) {
    const Exponent lo = common_monomial(num_, den_);
    if (total_degree(lo) > 0) {
      num_ = shift_down(num_, lo);
      den_ = shift_down(den_, lo);
    }
  }
  if (!den_.is_constant()) {
    if (auto q = divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = num_.constant_like(1);
    } else if (auto var = shared_univariate(num_, den_)) {
      const MultiPoly g = univariate_gcd(num_, den_, *var);
      if (g.total_degree() > 0) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
      }
    } else if (auto inv = divide_exact(den_, num_)) {
      den_ = std::move(*inv);
      num_ = num_.constant_like(1);
    } else {
      std::optional<MultiPoly> g;
      if (auto dv = single_variable(den_)) {
        g = gcd_with_univariate(den_, num_, *dv);
      } else if (auto nv = single_variable(num_)) {
        g = gcd_with_univariate(num_, den_, *nv);
      }
      if (g && g->total_degree() > 0) {
        num_ = *divide_exact(num_, *g);
        den_ = *divide_exact(den_, *g);
      }
    }
  }
  const GaussianRational scale = den_.terms().begin()->second.inverse();
  if (!scale.is_one()) {
    num_ *= scale;
    den_ *= scale;
  }
}

std::optional<MultiPoly> RationalFunction::as_polynomial() const {
  if (!den_.is_constant()) return std::nullopt;
  return num_ * den_.constant_term().inverse();
}

RationalFunction RationalFunction::derivative(std::string_view var) const {
  if (is_polynomial()) return RationalFunction(num_.derivative(var), den_);
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RationalFunction RationalFunction::compose(const std::map<std::string, RationalFunction>& images) const {
  if (images.empty()) return *this;
  const MultiPoly& probe = images.begin()->second.num();
  std::map<std::string, RationalFunction> full;
  for (std::size_t i = 0; i < num_.num_variables(); ++i) {
    const std::string& name = variables()[i];
    if (auto it = images.find(name); it != images.end()) {
      full.emplace(name, it->second);
    } else if (num_.depends_on(i) || den_.depends_on(i)) {
      if (!probe.find_variable(name)) {
        throw Error(ErrorCode::VariableMismatch, "unbound variable '" + name + "' missing from the image list");
      }
      full.emplace(name, RationalFunction(probe.variable_like(name)));
    }
  }
  for (const auto& [name, img] : images) {
    num_.variable_index(name);
    if (!img.num().same_variables(probe)) throw Error(ErrorCode::VariableMismatch, "images over different lists");
  }
  // Homogenize so both parts share the denominator prod q_i^{D_i}.
  std::map<std::string, MultiPoly> top;
  std::map<std::string, MultiPoly> bottom;
  std::vector<int> max_deg(num_.num_variables(), 0);
  for (std::size_t i = 0; i < max_deg.size(); ++i) max_deg[i] = std::max(num_.degree_in(i), den_.degree_in(i));
  auto lift = [&](const MultiPoly& p) {
    MultiPoly out = probe.zero_like();
    for (const auto& [e, c] : p.terms()) {
      MultiPoly term = probe.constant_like(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (max_deg[i] <= 0) continue;
        const RationalFunction& img = full.at(variables()[i]);
        if (e[i] > 0) term *= img.num().pow(static_cast<unsigned>(e[i]));
        if (max_deg[i] > e[i]) term *= img.den().pow(static_cast<unsigned>(max_deg[i] - e[i]));
      }
      out += term;
    }
    return out;
  };
  return RationalFunction(lift(num_), lift(den_));
}

RationalFunction RationalFunction::bind(std::string_view var, const GaussianRational& value) const {
  return RationalFunction(num_.bind(var, value), den_.bind(var, value));
}

RationalFunction RationalFunction::with_variables(const VarList& variables) const {
  return RationalFunction(num_.with_variables(variables), den_.with_variables(variables));
}

GaussianRational RationalFunction::evaluate(std::span<const GaussianRational> point) const {
  const GaussianRational d = den_.evaluate(point);
  if (d.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return as_polynomial()->to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (num_.terms().size() > 1 || n.find('/') != std::string::npos) n = "(" + n + ")";
  if (d.find_first_of(" */") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

}  // namespace foliate
