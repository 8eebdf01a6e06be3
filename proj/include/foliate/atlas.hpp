#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "foliate/jet.hpp"
#include "foliate/rational_function.hpp"

namespace foliate {

/// Variable-role template shared by every chart: normal variables cut out S,
/// foliation variables (a subset of the tangential ones) span the leaves.
struct VariableRoles {
  VarList normal;
  VarList tangential;
  VarList foliation;

  VarList all() const;
  bool is_foliation(const std::string& name) const;
  /// normal ++ tangential variables that are not foliation variables.
  VarList non_foliation() const;
};

/// Coordinates of chart `to` as rational functions of the coordinates of `from`.
struct Transition {
  std::string from;
  std::string to;
  std::map<std::string, RationalFunction> map;
};

using ChartPair = std::pair<std::string, std::string>;
using ChartTriple = std::array<std::string, 3>;

class TransitionAtlas {
 public:
  /// Validates the atlas: every overlap has both directions, denominators are
  /// units at the chart center, and round trips (and declared triples) compose
  /// to the identity modulo I_S^{order+1}. Overlaps and triples are stored
  /// sorted; an empty overlap list means every pair with a transition.
  TransitionAtlas(VariableRoles roles, int order, std::vector<std::string> charts, std::vector<Transition> transitions,
                  std::vector<ChartPair> overlaps = {}, std::vector<ChartTriple> triples = {});

  const VariableRoles& roles() const { return roles_; }
  int order() const { return order_; }
  IdealSpec ideal() const { return ideal_; }
  IdealSpec ideal(int k) const { return ideal_.with_order(k); }
  const std::vector<std::string>& charts() const { return charts_; }
  const std::vector<ChartPair>& overlaps() const { return overlaps_; }
  const std::vector<ChartTriple>& triples() const { return triples_; }
  bool has_chart(const std::string& name) const;
  bool has_transition(const std::string& from, const std::string& to) const;
  /// Throws MissingPair.
  const Transition& transition(const std::string& from, const std::string& to) const;

 private:
  VariableRoles roles_;
  int order_;
  IdealSpec ideal_;
  std::vector<std::string> charts_;
  std::map<ChartPair, Transition> transitions_;
  std::vector<ChartPair> overlaps_;
  std::vector<ChartTriple> triples_;
};

struct CheckFailure {
  std::string from;
  std::string to;
  std::string component;
  std::string value;
};

struct CheckReport {
  std::string check;
  int order = 0;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Normal coordinates of each chart must vanish on S in every other chart.
CheckReport check_adapted(const TransitionAtlas& atlas);
/// [d z_b^t / d z_a^i]_{k+1} = 0 for non-foliation t and foliation i.
CheckReport check_extension_condition(const TransitionAtlas& atlas, int k);
/// d z_b^p / d z_a^r lies in I_S^k for tangential p and normal r.
CheckReport check_k_splitting(const TransitionAtlas& atlas, int k);

/// Restriction to S of the derivative data of one overlap, in the
/// coordinates of `from`. All functions are over the chart variable list
/// with the normal variables already set to zero.
struct OverlapGeometry {
  OverlapGeometry(const TransitionAtlas& atlas, const std::string& from, const std::string& to);

  /// Tangential coordinates of `to` restricted to S.
  std::map<std::string, RationalFunction> phi;
  /// jacobian[a][b] = d z_to^a / d z_from^b on S.
  std::vector<std::vector<RationalFunction>> jacobian;
  /// inverse_jacobian[a][b] = d z_from^a / d z_to^b on S, as a function of z_from.
  std::vector<std::vector<RationalFunction>> inverse_jacobian;
};

/// The coordinate theta_1-derivation rho([f]_2) = [f - f|_S]_2 of one chart.
class SplittingData {
 public:
  SplittingData() = default;
  explicit SplittingData(std::shared_ptr<const TransitionAtlas> atlas) : atlas_(std::move(atlas)) {}

  const TransitionAtlas* atlas() const { return atlas_.get(); }
  JetClass rho(const JetClass& f) const;
  JetClass theta1(const JetClass& f) const;

 private:
  std::shared_ptr<const TransitionAtlas> atlas_;
};

/// Replaces each normal component by its rho-image, keeping tangential ones.
/// Throws OrderMismatch unless v lives at order 1.
VectorFieldJet splitting_projection(const VectorFieldJet& v, const SplittingData& data, const std::string& chart = "");

/// Components of a vector field after a change of coordinates: `forward`
/// gives the new coordinates in the old ones, `backward` the old in the new.
std::map<std::string, RationalFunction> push_forward(const std::map<std::string, RationalFunction>& field,
                                                     const std::map<std::string, RationalFunction>& forward,
                                                     const std::map<std::string, RationalFunction>& backward);

}  // namespace foliate
