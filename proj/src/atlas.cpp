#include "foliate/atlas.hpp"

#include <algorithm>
#include <set>

#include "foliate/error.hpp"
#include "foliate/rational_jet.hpp"

namespace foliate {

namespace {

using FunctionMap = std::map<std::string, RationalFunction>;

ChartPair sorted_pair(const std::string& a, const std::string& b) { return a < b ? ChartPair{a, b} : ChartPair{b, a}; }

FunctionMap compose_maps(const FunctionMap& first, const FunctionMap& second) {
  FunctionMap out;
  for (const auto& [name, f] : second) out.emplace(name, f.compose(first));
  return out;
}

// f - g modulo I_S^{k+1}, as a truncated class.
RationalJet difference_class(const IdealSpec& ideal, const RationalFunction& f, const RationalFunction& g) {
  return RationalJet::from_function(ideal, f) - RationalJet::from_function(ideal, g);
}

RationalFunction restrict_normals(const RationalFunction& f, const VarList& normal) {
  RationalFunction r = f;
  for (const auto& name : normal) r = r.bind(name, GaussianRational());
  return r;
}

std::vector<std::pair<std::string, std::string>> directed_overlaps(const TransitionAtlas& atlas) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : atlas.overlaps()) {
    out.emplace_back(a, b);
    out.emplace_back(b, a);
  }
  return out;
}

void require_adapted(const TransitionAtlas& atlas) {
  const CheckReport r = check_adapted(atlas);
  if (!r.passed()) {
    const auto& f = r.failures.front();
    throw Error(ErrorCode::NotAdapted, "transition " + f.from + "->" + f.to + " sends S outside S (component " +
                                           f.component + " = " + f.value + ")");
  }
}

}  // namespace

VarList VariableRoles::all() const {
  VarList out = normal;
  out.insert(out.end(), tangential.begin(), tangential.end());
  return out;
}

bool VariableRoles::is_foliation(const std::string& name) const {
  return std::find(foliation.begin(), foliation.end(), name) != foliation.end();
}

VarList VariableRoles::non_foliation() const {
  VarList out = normal;
  for (const auto& t : tangential) {
    if (!is_foliation(t)) out.push_back(t);
  }
  return out;
}

TransitionAtlas::TransitionAtlas(VariableRoles roles, int order, std::vector<std::string> charts,
                                 std::vector<Transition> transitions, std::vector<ChartPair> overlaps,
                                 std::vector<ChartTriple> triples)
    : roles_(std::move(roles)), order_(order), ideal_(roles_.normal, roles_.tangential, order),
      charts_(std::move(charts)) {
  for (const auto& f : roles_.foliation) {
    if (std::find(roles_.tangential.begin(), roles_.tangential.end(), f) == roles_.tangential.end()) {
      throw Error(ErrorCode::InvalidDocument, "foliation variable '" + f + "' is not tangential");
    }
  }
  if (charts_.empty()) throw Error(ErrorCode::InvalidDocument, "atlas has no charts");
  if (std::set<std::string>(charts_.begin(), charts_.end()).size() != charts_.size()) {
    throw Error(ErrorCode::InvalidDocument, "duplicate chart name");
  }
  const VarList all = roles_.all();
  for (auto& t : transitions) {
    const std::string label = t.from + "->" + t.to;
    if (!has_chart(t.from) || !has_chart(t.to)) {
      throw Error(ErrorCode::MalformedTransition, "transition " + label + " names an unknown chart");
    }
    if (t.from == t.to) throw Error(ErrorCode::MalformedTransition, "transition " + label + " maps a chart to itself");
    for (const auto& name : all) {
      if (!t.map.count(name)) {
        throw Error(ErrorCode::MalformedTransition, "transition " + label + " lacks component '" + name + "'");
      }
    }
    for (auto& [name, f] : t.map) {
      if (std::find(all.begin(), all.end(), name) == all.end()) {
        throw Error(ErrorCode::MalformedTransition, "transition " + label + " has unknown component '" + name + "'");
      }
      f = f.with_variables(all);
      if (f.den().constant_term().is_zero()) {
        throw Error(ErrorCode::MalformedTransition, "transition " + label + " component '" + name +
                                                        "' has a denominator vanishing at the chart center");
      }
    }
    const ChartPair key{t.from, t.to};
    if (!transitions_.emplace(key, std::move(t)).second) {
      throw Error(ErrorCode::MalformedTransition, "duplicate transition " + label);
    }
  }
  if (overlaps.empty()) {
    for (const auto& [key, t] : transitions_) overlaps.push_back(key);
  }
  std::set<ChartPair> pairs;
  for (const auto& [a, b] : overlaps) {
    if (a == b) throw Error(ErrorCode::InvalidDocument, "overlap of chart '" + a + "' with itself");
    pairs.insert(sorted_pair(a, b));
  }
  overlaps_.assign(pairs.begin(), pairs.end());
  for (const auto& [a, b] : overlaps_) {
    transition(a, b);
    transition(b, a);
  }
  for (auto t : triples) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw Error(ErrorCode::InvalidDocument, "triple with a repeated chart");
    for (const auto& p : {ChartPair{t[0], t[1]}, ChartPair{t[1], t[2]}, ChartPair{t[0], t[2]}}) {
      if (!pairs.count(p)) {
        throw Error(ErrorCode::MissingPair, "triple needs the overlap " + p.first + "/" + p.second);
      }
    }
    triples_.push_back(t);
  }
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());

  auto require_identity = [&](const FunctionMap& composite, const std::string& what) {
    for (const auto& name : all) {
      const RationalFunction z(ideal_.variable(name));
      if (!difference_class(ideal_, composite.at(name), z).is_zero()) {
        throw Error(ErrorCode::InconsistentAtlas, what + " is not the identity on '" + name + "' modulo I_S^" +
                                                      std::to_string(order_ + 1));
      }
    }
  };
  for (const auto& [a, b] : overlaps_) {
    require_identity(compose_maps(transition(a, b).map, transition(b, a).map), a + "->" + b + "->" + a);
    require_identity(compose_maps(transition(b, a).map, transition(a, b).map), b + "->" + a + "->" + b);
  }
  for (const auto& t : triples_) {
    const FunctionMap via = compose_maps(transition(t[0], t[1]).map, transition(t[1], t[2]).map);
    const FunctionMap direct = transition(t[0], t[2]).map;
    for (const auto& name : all) {
      if (!difference_class(ideal_, via.at(name), direct.at(name)).is_zero()) {
        throw Error(ErrorCode::InconsistentAtlas, t[0] + "->" + t[1] + "->" + t[2] + " differs from " + t[0] + "->" +
                                                      t[2] + " on '" + name + "'");
      }
    }
  }
}

bool TransitionAtlas::has_chart(const std::string& name) const {
  return std::find(charts_.begin(), charts_.end(), name) != charts_.end();
}

bool TransitionAtlas::has_transition(const std::string& from, const std::string& to) const {
  return transitions_.count({from, to}) > 0;
}

const Transition& TransitionAtlas::transition(const std::string& from, const std::string& to) const {
  const auto it = transitions_.find({from, to});
  if (it == transitions_.end()) throw Error(ErrorCode::MissingPair, "no transition " + from + "->" + to);
  return it->second;
}

CheckReport check_adapted(const TransitionAtlas& atlas) {
  CheckReport report{"adapted", 0, {}};
  const IdealSpec ideal = atlas.ideal(0);
  for (const auto& [a, b] : directed_overlaps(atlas)) {
    const Transition& t = atlas.transition(a, b);
    for (const auto& r : atlas.roles().normal) {
      const RationalJet on_s = RationalJet::from_function(ideal, t.map.at(r));
      if (!on_s.is_zero()) report.failures.push_back({a, b, r, on_s.to_string()});
    }
  }
  return report;
}

CheckReport check_extension_condition(const TransitionAtlas& atlas, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "order must be nonnegative");
  require_adapted(atlas);
  CheckReport report{"extension", k, {}};
  const IdealSpec ideal = atlas.ideal(k);
  for (const auto& [a, b] : directed_overlaps(atlas)) {
    const Transition& t = atlas.transition(a, b);
    for (const auto& target : atlas.roles().non_foliation()) {
      for (const auto& i : atlas.roles().foliation) {
        const RationalJet d = RationalJet::from_function(ideal, t.map.at(target).derivative(i));
        if (!d.is_zero()) report.failures.push_back({a, b, "d" + target + "/d" + i, d.to_string()});
      }
    }
  }
  return report;
}

CheckReport check_k_splitting(const TransitionAtlas& atlas, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "order must be nonnegative");
  require_adapted(atlas);
  CheckReport report{"k-splitting", k, {}};
  if (k == 0) return report;
  const IdealSpec ideal = atlas.ideal(k - 1);
  for (const auto& [a, b] : directed_overlaps(atlas)) {
    const Transition& t = atlas.transition(a, b);
    for (const auto& p : atlas.roles().tangential) {
      for (const auto& r : atlas.roles().normal) {
        const RationalJet d = RationalJet::from_function(ideal, t.map.at(p).derivative(r));
        if (!d.is_zero()) report.failures.push_back({a, b, "d" + p + "/d" + r, d.to_string()});
      }
    }
  }
  return report;
}

OverlapGeometry::OverlapGeometry(const TransitionAtlas& atlas, const std::string& from, const std::string& to) {
  const Transition& fwd = atlas.transition(from, to);
  const Transition& bwd = atlas.transition(to, from);
  const VarList all = atlas.roles().all();
  const VarList& normal = atlas.roles().normal;
  for (const auto& p : atlas.roles().tangential) phi.emplace(p, restrict_normals(fwd.map.at(p), normal));
  jacobian.assign(all.size(), {});
  inverse_jacobian.assign(all.size(), {});
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      jacobian[a].push_back(restrict_normals(fwd.map.at(all[a]).derivative(all[b]), normal));
      // d z_from / d z_to is a function of z_to; on S the normal z_to vanish and
      // the tangential ones are phi(z_from).
      const RationalFunction d = restrict_normals(bwd.map.at(all[a]).derivative(all[b]), normal);
      inverse_jacobian[a].push_back(d.compose(phi));
    }
  }
}

JetClass SplittingData::rho(const JetClass& f) const {
  const IdealSpec& ideal = f.ideal();
  return JetClass(ideal, f.rep().filter([&](const Exponent& e) { return ideal.normal_degree(e) > 0; }));
}

JetClass SplittingData::theta1(const JetClass& f) const { return JetClass(f.ideal().with_order(0), f.rep()); }

VectorFieldJet splitting_projection(const VectorFieldJet& v, const SplittingData& data, const std::string& chart) {
  const IdealSpec& ideal = v.ideal();
  if (ideal.order() != 1) {
    throw Error(ErrorCode::OrderMismatch, "splitting projection acts on fields at order 1, got order " +
                                              std::to_string(ideal.order()));
  }
  if (const TransitionAtlas* atlas = data.atlas()) {
    if (!chart.empty() && !atlas->has_chart(chart)) throw Error(ErrorCode::InvalidArgument, "unknown chart '" + chart + "'");
    if (ideal.normal_vars() != atlas->roles().normal || ideal.tangential_vars() != atlas->roles().tangential) {
      throw Error(ErrorCode::VariableMismatch, "field variables differ from the atlas roles");
    }
  }
  VectorFieldRep r = v.rep();
  for (std::size_t i = 0; i < ideal.num_normal(); ++i) r.components[i] = data.rho(v.component(i)).rep();
  return classify_field(r);
}

std::map<std::string, RationalFunction> push_forward(const std::map<std::string, RationalFunction>& field,
                                                     const std::map<std::string, RationalFunction>& forward,
                                                     const std::map<std::string, RationalFunction>& backward) {
  std::map<std::string, RationalFunction> out;
  for (const auto& [name, image] : forward) {
    RationalFunction acc(image.num().zero_like());
    for (const auto& [var, coeff] : field) {
      if (coeff.is_zero()) continue;
      acc = acc + coeff.with_variables(image.variables()) * image.derivative(var);
    }
    out.emplace(name, acc.compose(backward));
  }
  return out;
}

}  // namespace foliate
