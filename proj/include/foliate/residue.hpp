#pragma once

#include <map>
#include <string>
#include <vector>

#include "foliate/atlas.hpp"
#include "foliate/jet.hpp"
#include "foliate/rational_function.hpp"

namespace foliate {

enum class SurfaceMode { Tangential, Transversal };

/// v = A d/dx + B d/dy on a surface chart with S = {x = 0}.
struct SurfaceFieldInput {
  MultiPoly a;
  MultiPoly b;
  SurfaceMode mode = SurfaceMode::Tangential;

  /// Re-expresses A and B over the list {x, y}.
  static SurfaceFieldInput make(const MultiPoly& a, const MultiPoly& b, SurfaceMode mode);
  static const VarList& variables();
  static IdealSpec ideal(int order);
};

/// (num / den) dy with num, den polynomials in y.
struct MeromorphicForm1D {
  RationalFunction f;
  std::string to_string() const;
};

/// Coefficients of delta_v(d/dz^t) = pr([v, d/dz^t]) on the non-foliation frame,
/// as classes on S.
std::map<std::string, JetClass> universal_connection_apply(const VectorFieldJet& v, const std::string& t,
                                                           const VarList& foliation_vars);

/// curvature[t][h]: coefficient on d/dz^h of
/// (delta_u delta_v - delta_v delta_u - delta_[u,v]) (d/dz^t).
std::vector<std::vector<JetClass>> flatness_check(const VectorFieldJet& u, const VectorFieldJet& v,
                                                  const VarList& foliation_vars);

MeromorphicForm1D connection_matrix_2d(const SurfaceFieldInput& input);
MeromorphicForm1D bott_difference_form_2d(const SurfaceFieldInput& input);
GaussianRational kls_residue(const SurfaceFieldInput& input);
GaussianRational transversal_residue(const SurfaceFieldInput& input, const SplittingData& data = {});

/// ((dA/dx + dB/dy) / B) on S, shared by the exact and numeric residues.
RationalFunction residue_integrand(const SurfaceFieldInput& input);

}  // namespace foliate
