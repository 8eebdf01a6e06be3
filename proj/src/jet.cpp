#include "foliate/jet.hpp"

#include <algorithm>
#include <set>

#include "foliate/error.hpp"

namespace foliate {

IdealSpec::IdealSpec() : IdealSpec({}, {}, 0) {}

IdealSpec::IdealSpec(VarList normal, VarList tangential, int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be nonnegative");
  std::set<std::string> seen;
  VarList all = normal;
  all.insert(all.end(), tangential.begin(), tangential.end());
  for (const auto& name : all) {
    if (!seen.insert(name).second) throw Error(ErrorCode::InvalidArgument, "variable '" + name + "' listed twice");
  }
  data_ = std::make_shared<const Data>(
      Data{std::move(normal), std::move(tangential), order, std::make_shared<const VarList>(std::move(all))});
}

bool IdealSpec::is_normal(std::string_view name) const {
  return std::find(data_->normal.begin(), data_->normal.end(), name) != data_->normal.end();
}

std::size_t IdealSpec::index_of(std::string_view name) const {
  const auto& all = *data_->all;
  const auto it = std::find(all.begin(), all.end(), name);
  if (it == all.end()) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - all.begin());
}

int IdealSpec::normal_degree(const Exponent& e) const {
  int d = 0;
  for (std::size_t i = 0; i < num_normal(); ++i) d += e[i];
  return d;
}

IdealSpec IdealSpec::with_order(int order) const {
  if (order == data_->order) return *this;
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be nonnegative");
  IdealSpec r = *this;
  r.data_ = std::make_shared<const Data>(Data{data_->normal, data_->tangential, order, data_->all});
  return r;
}

MultiPoly IdealSpec::adopt(const MultiPoly& p) const {
  if (p.variable_handle() == data_->all) return p;
  if (p.variables() == *data_->all) {
    MultiPoly r(data_->all);
    for (const auto& [e, c] : p.terms()) r.add_term(e, c);
    return r;
  }
  MultiPoly moved = p.with_variables(*data_->all);
  MultiPoly r(data_->all);
  for (const auto& [e, c] : moved.terms()) r.add_term(e, c);
  return r;
}

bool operator==(const IdealSpec& a, const IdealSpec& b) {
  return a.data_ == b.data_ ||
         (a.order() == b.order() && a.normal_vars() == b.normal_vars() && a.tangential_vars() == b.tangential_vars());
}

MultiPoly truncate_rep(const MultiPoly& p, std::size_t num_normal, int order) {
  return p.filter([&](const Exponent& e) {
    int d = 0;
    for (std::size_t i = 0; i < num_normal; ++i) d += e[i];
    return d <= order;
  });
}

JetClass::JetClass(IdealSpec ideal, const MultiPoly& p)
    : ideal_(std::move(ideal)), rep_(truncate_rep(ideal_.adopt(p), ideal_.num_normal(), ideal_.order())) {}

JetClass truncate(const MultiPoly& p, const IdealSpec& ideal) { return JetClass(ideal, p); }

namespace {

void require_same_ideal(const IdealSpec& a, const IdealSpec& b) {
  if (!(a == b)) throw Error(ErrorCode::VariableMismatch, "classes over different ideals");
}

void require_logarithmic(const VectorFieldJet& v) {
  if (!v.is_logarithmic()) {
    throw Error(ErrorCode::NotLogarithmic, "field is not logarithmic along S, so it does not act on O_S(k)");
  }
}

// sum_p v^p * d f / d z^p on raw polynomials.
MultiPoly apply_raw(const std::vector<MultiPoly>& v, const MultiPoly& f) {
  MultiPoly out = f.zero_like();
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p].is_zero() || !f.depends_on(p)) continue;
    out += v[p] * f.derivative(p);
  }
  return out;
}

std::string partial_name(const std::string& var) { return "d/d" + var; }

}  // namespace

JetClass operator+(const JetClass& a, const JetClass& b) {
  require_same_ideal(a.ideal_, b.ideal_);
  JetClass r = a;
  r.rep_ += b.rep_;
  return r;
}

JetClass operator-(const JetClass& a, const JetClass& b) {
  require_same_ideal(a.ideal_, b.ideal_);
  JetClass r = a;
  r.rep_ -= b.rep_;
  return r;
}

JetClass operator*(const JetClass& a, const JetClass& b) {
  require_same_ideal(a.ideal_, b.ideal_);
  return JetClass(a.ideal_, a.rep_ * b.rep_);
}

bool operator==(const JetClass& a, const JetClass& b) { return a.ideal_ == b.ideal_ && a.rep_ == b.rep_; }

std::string_view status_name(FieldStatus s) { return s == FieldStatus::Logarithmic ? "logarithmic" : "general"; }

VectorFieldRep VectorFieldRep::zero(const IdealSpec& ideal) {
  return VectorFieldRep{ideal, std::vector<MultiPoly>(ideal.num_variables(), ideal.zero())};
}

VectorFieldRep VectorFieldRep::from_map(const IdealSpec& ideal, const std::map<std::string, MultiPoly>& components) {
  VectorFieldRep v = zero(ideal);
  for (const auto& [name, p] : components) v.components[ideal.index_of(name)] = ideal.adopt(p);
  return v;
}

bool VectorFieldJet::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const JetClass& c) { return c.is_zero(); });
}

VectorFieldRep VectorFieldJet::rep() const {
  VectorFieldRep r{ideal_, {}};
  for (const auto& c : components_) r.components.push_back(c.rep());
  return r;
}

std::string VectorFieldJet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const MultiPoly& c = components_[i].rep();
    if (c.is_zero()) continue;
    const std::string& var = ideal_.variables()[i];
    std::string term;
    if (c.is_constant() && c.constant_term().is_real()) {
      const Rational k = c.constant_term().re();
      const bool neg = k.sign() < 0;
      const Rational mag = neg ? -k : k;
      term = (mag == Rational(1) ? "" : mag.to_string() + "*") + partial_name(var);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      out += term;
      continue;
    }
    if (c.size() > 1) {
      term = "(" + c.to_string() + ")*" + partial_name(var);
      if (!out.empty()) out += " + ";
      out += term;
      continue;
    }
    term = c.to_string() + "*" + partial_name(var);
    if (term.front() == '-') {
      out += out.empty() ? "-" : " - ";
      term.erase(0, 1);
    } else if (!out.empty()) {
      out += " + ";
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

bool operator==(const VectorFieldJet& a, const VectorFieldJet& b) {
  return a.ideal_ == b.ideal_ && a.components_ == b.components_;
}

VectorFieldJet classify_field(const VectorFieldRep& v) {
  if (v.components.size() != v.ideal.num_variables()) {
    throw Error(ErrorCode::VariableMismatch, "field needs one component per chart variable");
  }
  VectorFieldJet out;
  out.ideal_ = v.ideal;
  bool log = true;
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    out.components_.emplace_back(v.ideal, v.components[i]);
    if (v.ideal.is_normal(i)) {
      for (const auto& [e, c] : out.components_.back().rep().terms()) {
        if (v.ideal.normal_degree(e) == 0) {
          log = false;
          break;
        }
      }
    }
  }
  out.status_ = log ? FieldStatus::Logarithmic : FieldStatus::General;
  return out;
}

VectorFieldJet classify_field(const std::map<std::string, MultiPoly>& components, const IdealSpec& ideal) {
  return classify_field(VectorFieldRep::from_map(ideal, components));
}

VectorFieldJet scale(const JetClass& g, const VectorFieldJet& v) {
  require_same_ideal(g.ideal(), v.ideal());
  VectorFieldRep r = VectorFieldRep::zero(v.ideal());
  for (std::size_t i = 0; i < r.components.size(); ++i) r.components[i] = g.rep() * v.component(i).rep();
  return classify_field(r);
}

VectorFieldJet operator+(const VectorFieldJet& a, const VectorFieldJet& b) {
  require_same_ideal(a.ideal(), b.ideal());
  VectorFieldRep r = a.rep();
  for (std::size_t i = 0; i < r.components.size(); ++i) r.components[i] += b.component(i).rep();
  return classify_field(r);
}

VectorFieldJet operator-(const VectorFieldJet& a, const VectorFieldJet& b) {
  require_same_ideal(a.ideal(), b.ideal());
  VectorFieldRep r = a.rep();
  for (std::size_t i = 0; i < r.components.size(); ++i) r.components[i] -= b.component(i).rep();
  return classify_field(r);
}

JetClass jet_apply(const VectorFieldJet& v, const JetClass& f) {
  require_logarithmic(v);
  require_same_ideal(v.ideal(), f.ideal());
  return JetClass(v.ideal(), apply_raw(v.rep().components, f.rep()));
}

VectorFieldRep lie_bracket(const VectorFieldRep& u, const VectorFieldRep& v) {
  require_same_ideal(u.ideal, v.ideal);
  VectorFieldRep out = VectorFieldRep::zero(u.ideal);
  for (std::size_t h = 0; h < out.components.size(); ++h) {
    out.components[h] = apply_raw(u.components, v.components[h]) - apply_raw(v.components, u.components[h]);
  }
  return out;
}

VectorFieldJet jet_bracket(const VectorFieldJet& u, const VectorFieldJet& v) {
  require_logarithmic(u);
  require_logarithmic(v);
  return classify_field(lie_bracket(u.rep(), v.rep()));
}

VectorFieldJet restrict_to_S(const VectorFieldJet& v) {
  require_logarithmic(v);
  const IdealSpec& ideal = v.ideal();
  const IdealSpec on_s({}, ideal.tangential_vars(), 0);
  VectorFieldRep r = VectorFieldRep::zero(on_s);
  for (std::size_t t = 0; t < ideal.tangential_vars().size(); ++t) {
    const MultiPoly& c = v.component(ideal.num_normal() + t).rep();
    const MultiPoly base = c.filter([&](const Exponent& e) { return ideal.normal_degree(e) == 0; });
    r.components[t] = on_s.adopt(base);
  }
  return classify_field(r);
}

JetClass primitive_of_closed_1form(const std::map<std::string, JetClass>& coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "empty 1-form");
  const IdealSpec& ideal = coeffs.begin()->second.ideal();
  std::vector<std::size_t> listed;
  for (const auto& [name, c] : coeffs) {
    require_same_ideal(ideal, c.ideal());
    const std::size_t idx = ideal.index_of(name);
    if (ideal.is_normal(idx)) {
      throw Error(ErrorCode::InvalidArgument, "1-form variable '" + name + "' is not tangential");
    }
    listed.push_back(idx);
  }
  for (auto a = coeffs.begin(); a != coeffs.end(); ++a) {
    for (auto b = std::next(a); b != coeffs.end(); ++b) {
      const std::size_t ia = ideal.index_of(a->first);
      const std::size_t ib = ideal.index_of(b->first);
      if (a->second.rep().derivative(ib) != b->second.rep().derivative(ia)) {
        throw Error(ErrorCode::NotClosed, "d/d" + b->first + " of the " + a->first + "-coefficient differs from d/d" +
                                              a->first + " of the " + b->first + "-coefficient");
      }
    }
  }
  // h(z) = int_0^1 sum_i c_i(t z) z_i dt, with t scaling only the listed variables.
  MultiPoly h = ideal.zero();
  for (const auto& [name, c] : coeffs) {
    const std::size_t i = ideal.index_of(name);
    for (const auto& [e, coef] : c.rep().terms()) {
      int listed_degree = 0;
      for (std::size_t j : listed) listed_degree += e[j];
      Exponent raised = e;
      raised[i] += 1;
      h.add_term(raised, coef * GaussianRational(Rational(1, listed_degree + 1)));
    }
  }
  return JetClass(ideal, h);
}

VectorFieldRep normalize_commuting_representative(const VectorFieldRep& w,
                                                  const std::vector<std::string>& frame_vars) {
  const IdealSpec& ideal = w.ideal;
  if (!classify_field(w).is_logarithmic()) {
    throw Error(ErrorCode::PreconditionFailed, "field is not tangent to S(k)");
  }
  std::vector<std::size_t> frame;
  for (const auto& name : frame_vars) {
    const std::size_t idx = ideal.index_of(name);
    if (ideal.is_normal(idx)) throw Error(ErrorCode::InvalidArgument, "frame variable '" + name + "' is not tangential");
    frame.push_back(idx);
  }
  for (std::size_t h = 0; h < w.components.size(); ++h) {
    for (std::size_t i : frame) {
      if (!truncate(w.components[h].derivative(i), ideal).is_zero()) {
        throw Error(ErrorCode::PreconditionFailed, "[d/d" + ideal.variables()[i] + ", w] has a nonzero " +
                                                       ideal.variables()[h] + "-component modulo I_S^" +
                                                       std::to_string(ideal.order() + 1));
      }
    }
  }
  const int k = ideal.order();
  const std::size_t m = ideal.num_normal();
  VectorFieldRep out = VectorFieldRep::zero(ideal);
  for (std::size_t h = 0; h < w.components.size(); ++h) {
    const MultiPoly& g = w.components[h];
    MultiPoly result = truncate_rep(g, m, k);
    // High part sum_mu z^mu f_mu, grouped by normal multi-index mu.
    std::map<Exponent, MultiPoly> by_mu;
    for (const auto& [e, c] : g.terms()) {
      if (ideal.normal_degree(e) <= k) continue;
      Exponent mu(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m));
      Exponent rest = e;
      std::fill(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(m), 0);
      auto it = by_mu.try_emplace(mu, ideal.zero()).first;
      it->second.add_term(rest, c);
    }
    for (const auto& [mu, f] : by_mu) {
      MultiPoly replaced = f;
      if (!frame.empty()) {
        // The frame-derivative 1-form of f_mu is closed; subtract its primitive.
        std::map<std::string, JetClass> omega;
        for (std::size_t i : frame) omega.emplace(ideal.variables()[i], JetClass(ideal, f.derivative(i)));
        MultiPoly h_mu;
        try {
          h_mu = primitive_of_closed_1form(omega).rep();
        } catch (const Error& err) {
          if (err.code() == ErrorCode::NotClosed) throw Error(ErrorCode::InternalError, err.what());
          throw;
        }
        replaced -= h_mu;
      }
      Exponent shift(ideal.num_variables(), 0);
      std::copy(mu.begin(), mu.end(), shift.begin());
      MultiPoly mono(ideal.variable_handle());
      mono.add_term(shift, GaussianRational(1));
      result += replaced * mono;
    }
    out.components[h] = result;
  }
  return out;
}

}  // namespace foliate
