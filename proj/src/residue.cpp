#include "foliate/residue.hpp"

#include <algorithm>

#include "foliate/error.hpp"
#include "foliate/laurent.hpp"

namespace foliate {

namespace {

void require_tangent(const VectorFieldJet& v) {
  if (!v.is_logarithmic()) throw Error(ErrorCode::NotTangential, "field " + v.to_string() + " is not tangent to S(1)");
}

// Non-foliation directions of the chart, in variable order.
VarList quotient_frame(const IdealSpec& ideal, const VarList& foliation) {
  VarList out;
  for (const auto& name : ideal.variables()) {
    if (std::find(foliation.begin(), foliation.end(), name) == foliation.end()) out.push_back(name);
  }
  return out;
}

// v(f) for a class on S lifted by its normal-free representative.
JetClass apply_on_s(const VectorFieldJet& v, const JetClass& f) {
  const IdealSpec s_ideal = v.ideal().with_order(0);
  MultiPoly acc = s_ideal.zero();
  for (std::size_t p = 0; p < s_ideal.num_variables(); ++p) {
    if (f.rep().depends_on(p)) acc += v.component(p).rep() * f.rep().derivative(p);
  }
  return JetClass(s_ideal, acc);
}

// The foliation must be preserved along S: d v^t / d z^j vanishes on S for
// non-foliation tangential t and foliation j.
void require_preserves_foliation(const VectorFieldJet& v, const VarList& foliation) {
  const IdealSpec& ideal = v.ideal();
  const IdealSpec s_ideal = ideal.with_order(0);
  for (const auto& t : ideal.tangential_vars()) {
    if (std::find(foliation.begin(), foliation.end(), t) != foliation.end()) continue;
    for (const auto& j : foliation) {
      if (!JetClass(s_ideal, v.component(t).rep().derivative(ideal.index_of(j))).is_zero()) {
        throw Error(ErrorCode::NotTangential, "field " + v.to_string() + " does not preserve the foliation along S");
      }
    }
  }
}

void require_surface_on_s(const SurfaceFieldInput& input) {
  if (input.b.bind("x", GaussianRational()).is_zero()) {
    throw Error(ErrorCode::ZeroOnS, "B vanishes identically on S, so the singular set is not isolated");
  }
}

void require_tangential_mode(const SurfaceFieldInput& input) {
  if (input.mode != SurfaceMode::Tangential) {
    throw Error(ErrorCode::InvalidArgument, "operation needs a tangential-mode field");
  }
  if (!input.a.bind("x", GaussianRational()).is_zero()) {
    throw Error(ErrorCode::NotTangential, "A = " + input.a.to_string() + " does not vanish on S");
  }
  require_surface_on_s(input);
}

// Drops x from a polynomial that no longer depends on it.
MultiPoly to_y(const MultiPoly& p) { return p.bind("x", GaussianRational()).with_variables({"y"}); }

}  // namespace

SurfaceFieldInput SurfaceFieldInput::make(const MultiPoly& a, const MultiPoly& b, SurfaceMode mode) {
  const IdealSpec ideal = SurfaceFieldInput::ideal(1);
  return SurfaceFieldInput{ideal.adopt(a), ideal.adopt(b), mode};
}

const VarList& SurfaceFieldInput::variables() {
  static const VarList kVars{"x", "y"};
  return kVars;
}

IdealSpec SurfaceFieldInput::ideal(int order) { return IdealSpec({"x"}, {"y"}, order); }

std::string MeromorphicForm1D::to_string() const {
  if (f.is_zero()) return "0";
  return "(" + f.to_string() + ")*dy";
}

std::map<std::string, JetClass> universal_connection_apply(const VectorFieldJet& v, const std::string& t,
                                                           const VarList& foliation_vars) {
  require_tangent(v);
  const IdealSpec& ideal = v.ideal();
  if (ideal.order() != 1) {
    throw Error(ErrorCode::OrderMismatch, "the connection acts through fields at order 1, got order " +
                                              std::to_string(ideal.order()));
  }
  const VarList frame = quotient_frame(ideal, foliation_vars);
  if (std::find(frame.begin(), frame.end(), t) == frame.end()) {
    throw Error(ErrorCode::InvalidArgument, "'" + t + "' is not a non-foliation direction");
  }
  // [v, d/dz^t] = -sum_h (d v^h / d z^t) d/dz^h.
  const std::size_t ti = ideal.index_of(t);
  const IdealSpec s_ideal = ideal.with_order(0);
  std::map<std::string, JetClass> out;
  for (const auto& h : frame) {
    out.emplace(h, JetClass(s_ideal, -v.component(h).rep().derivative(ti)));
  }
  return out;
}

std::vector<std::vector<JetClass>> flatness_check(const VectorFieldJet& u, const VectorFieldJet& v,
                                                  const VarList& foliation_vars) {
  require_tangent(u);
  require_tangent(v);
  require_preserves_foliation(u, foliation_vars);
  require_preserves_foliation(v, foliation_vars);
  const VectorFieldJet w = jet_bracket(u, v);
  const VarList frame = quotient_frame(u.ideal(), foliation_vars);

  std::map<std::string, std::map<std::string, JetClass>> du;
  std::map<std::string, std::map<std::string, JetClass>> dv;
  for (const auto& t : frame) {
    du.emplace(t, universal_connection_apply(u, t, foliation_vars));
    dv.emplace(t, universal_connection_apply(v, t, foliation_vars));
  }
  // delta_X (sum_h a^h d_h) = sum_h X(a^h) d_h + a^h delta_X(d_h).
  auto act = [&](const VectorFieldJet& x, const std::map<std::string, std::map<std::string, JetClass>>& dx,
                 const std::map<std::string, JetClass>& section) {
    std::map<std::string, JetClass> out;
    for (const auto& h : frame) out.emplace(h, apply_on_s(x, section.at(h)));
    for (const auto& h : frame) {
      const JetClass& a = section.at(h);
      if (a.is_zero()) continue;
      for (const auto& g : frame) out.at(g) = out.at(g) + a * dx.at(h).at(g);
    }
    return out;
  };
  std::vector<std::vector<JetClass>> curvature;
  for (const auto& t : frame) {
    const auto uv = act(u, du, dv.at(t));
    const auto vu = act(v, dv, du.at(t));
    const auto wt = universal_connection_apply(w, t, foliation_vars);
    std::vector<JetClass> row;
    for (const auto& h : frame) row.push_back(uv.at(h) - vu.at(h) - wt.at(h));
    curvature.push_back(std::move(row));
  }
  return curvature;
}

MeromorphicForm1D connection_matrix_2d(const SurfaceFieldInput& input) {
  require_tangential_mode(input);
  const IdealSpec ideal = SurfaceFieldInput::ideal(1);
  VectorFieldRep rep = VectorFieldRep::zero(ideal);
  rep.components = {ideal.adopt(input.a), ideal.adopt(input.b)};
  const VectorFieldJet v = classify_field(rep);
  // delta_v(nu) = a nu with nu the class of d/dx; along d/dy = v / B on S.
  const JetClass a = universal_connection_apply(v, "x", {"y"}).at("x");
  return MeromorphicForm1D{RationalFunction(to_y(a.rep()), to_y(input.b))};
}

MeromorphicForm1D bott_difference_form_2d(const SurfaceFieldInput& input) {
  const MeromorphicForm1D omega = connection_matrix_2d(input);
  const MultiPoly b_s = to_y(input.b);
  // Minus the trace of diag(omega, -(dB/dy)/B dy).
  const RationalFunction tangent_part(b_s.derivative("y"), b_s);
  return MeromorphicForm1D{-omega.f + tangent_part};
}

GaussianRational kls_residue(const SurfaceFieldInput& input) {
  const MeromorphicForm1D form = bott_difference_form_2d(input);
  return residue_coefficient(laurent_expand(form.f.num(), form.f.den(), "y", -1));
}

GaussianRational transversal_residue(const SurfaceFieldInput& input, const SplittingData& data) {
  if (input.mode != SurfaceMode::Transversal) {
    throw Error(ErrorCode::InvalidArgument, "transversal residue needs a transversal-mode field");
  }
  require_surface_on_s(input);
  const IdealSpec ideal = SurfaceFieldInput::ideal(1);
  VectorFieldRep rep = VectorFieldRep::zero(ideal);
  rep.components = {ideal.adopt(input.a), ideal.adopt(input.b)};
  const VectorFieldJet projected = splitting_projection(classify_field(rep), data);
  return kls_residue(SurfaceFieldInput{projected.component(0).rep(), projected.component(1).rep(),
                                       SurfaceMode::Tangential});
}

RationalFunction residue_integrand(const SurfaceFieldInput& input) {
  require_surface_on_s(input);
  const MultiPoly num = to_y(input.a.derivative("x") + input.b.derivative("y"));
  return RationalFunction(num, to_y(input.b));
}

}  // namespace foliate
