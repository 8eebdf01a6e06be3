#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "foliate/poly.hpp"

namespace foliate {

/// The ideal I_S generated by the normal variables, together with a
/// truncation order k. Chart variables are normal ++ tangential.
class IdealSpec {
 public:
  IdealSpec();
  IdealSpec(VarList normal, VarList tangential, int order);

  const VarList& normal_vars() const { return data_->normal; }
  const VarList& tangential_vars() const { return data_->tangential; }
  const VarList& variables() const { return *data_->all; }
  const std::shared_ptr<const VarList>& variable_handle() const { return data_->all; }
  int order() const { return data_->order; }
  std::size_t num_normal() const { return data_->normal.size(); }
  std::size_t num_variables() const { return data_->all->size(); }

  bool is_normal(std::size_t index) const { return index < num_normal(); }
  bool is_normal(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;
  int normal_degree(const Exponent& e) const;

  IdealSpec with_order(int order) const;

  MultiPoly zero() const { return MultiPoly(data_->all); }
  MultiPoly constant(const GaussianRational& c) const { return zero().constant_like(c); }
  MultiPoly variable(std::string_view name) const { return zero().variable_like(name); }
  /// Re-expresses p over this chart's list (VariableMismatch if impossible).
  MultiPoly adopt(const MultiPoly& p) const;

  friend bool operator==(const IdealSpec& a, const IdealSpec& b);

 private:
  struct Data {
    VarList normal;
    VarList tangential;
    int order;
    std::shared_ptr<const VarList> all;
  };
  std::shared_ptr<const Data> data_;
};

/// Class [f]_{k+1} in O_M / I_S^{k+1}, stored by its canonical representative:
/// the polynomial with every monomial of normal degree > k removed.
class JetClass {
 public:
  JetClass() = default;
  JetClass(IdealSpec ideal, const MultiPoly& p);

  const IdealSpec& ideal() const { return ideal_; }
  const MultiPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  std::string to_string() const { return rep_.to_string(); }

  JetClass operator-() const { return JetClass(ideal_, -rep_); }
  friend JetClass operator+(const JetClass& a, const JetClass& b);
  friend JetClass operator-(const JetClass& a, const JetClass& b);
  friend JetClass operator*(const JetClass& a, const JetClass& b);
  friend bool operator==(const JetClass& a, const JetClass& b);

 private:
  IdealSpec ideal_;
  MultiPoly rep_;
};

JetClass truncate(const MultiPoly& p, const IdealSpec& ideal);

/// Drops monomials of normal degree > order (no ideal object needed).
MultiPoly truncate_rep(const MultiPoly& p, std::size_t num_normal, int order);

enum class FieldStatus { General, Logarithmic };

std::string_view status_name(FieldStatus s);

/// Raw vector field: one polynomial per chart variable, in ideal order.
struct VectorFieldRep {
  IdealSpec ideal;
  std::vector<MultiPoly> components;

  static VectorFieldRep zero(const IdealSpec& ideal);
  static VectorFieldRep from_map(const IdealSpec& ideal, const std::map<std::string, MultiPoly>& components);
  const MultiPoly& component(std::string_view name) const { return components[ideal.index_of(name)]; }
};

/// Vector field with class coefficients. Status is computed: logarithmic
/// (equivalently tangent to S(k)) when every normal component lies in I_S.
class VectorFieldJet {
 public:
  VectorFieldJet() = default;

  const IdealSpec& ideal() const { return ideal_; }
  const std::vector<JetClass>& components() const { return components_; }
  const JetClass& component(std::size_t i) const { return components_[i]; }
  const JetClass& component(std::string_view name) const { return components_[ideal_.index_of(name)]; }
  FieldStatus status() const { return status_; }
  bool is_logarithmic() const { return status_ == FieldStatus::Logarithmic; }
  bool is_zero() const;
  VectorFieldRep rep() const;

  /// "a*d/dx + b*d/dy" style text.
  std::string to_string() const;

  friend VectorFieldJet classify_field(const VectorFieldRep& v);
  friend bool operator==(const VectorFieldJet& a, const VectorFieldJet& b);

 private:
  IdealSpec ideal_;
  std::vector<JetClass> components_;
  FieldStatus status_ = FieldStatus::General;
};

VectorFieldJet classify_field(const VectorFieldRep& v);
VectorFieldJet classify_field(const std::map<std::string, MultiPoly>& components, const IdealSpec& ideal);

/// Field with coefficients scaled by a class.
VectorFieldJet scale(const JetClass& g, const VectorFieldJet& v);
VectorFieldJet operator+(const VectorFieldJet& a, const VectorFieldJet& b);
VectorFieldJet operator-(const VectorFieldJet& a, const VectorFieldJet& b);

JetClass jet_apply(const VectorFieldJet& v, const JetClass& f);
VectorFieldJet jet_bracket(const VectorFieldJet& u, const VectorFieldJet& v);
/// Ordinary Lie bracket of raw fields, without truncation.
VectorFieldRep lie_bracket(const VectorFieldRep& u, const VectorFieldRep& v);
/// Field on S: normal variables set to zero, tangential components kept, order 0.
VectorFieldJet restrict_to_S(const VectorFieldJet& v);

/// Primitive h with dh = sum coeffs[i] dz^i, h(0) = 0, by integration along rays
/// from the origin in the listed variables. Throws NotClosed.
JetClass primitive_of_closed_1form(const std::map<std::string, JetClass>& coeffs);

/// Replaces the high-normal-degree part of each component so that the result
/// is exactly independent of every frame variable while staying congruent to
/// w modulo I_S^{k+1}. Throws PreconditionFailed when some [d/dz^i, w] is
/// nonzero modulo I_S^{k+1}.
VectorFieldRep normalize_commuting_representative(const VectorFieldRep& w, const std::vector<std::string>& frame_vars);

}  // namespace foliate
