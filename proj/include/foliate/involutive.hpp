#pragma once

#include <optional>
#include <span>
#include <vector>

#include "foliate/jet.hpp"

namespace foliate {

enum class InvolutivityVerdict { Involutive, NotInvolutive, Inconclusive };

std::string_view verdict_name(InvolutivityVerdict v);

struct BracketWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  VectorFieldJet bracket;
  /// bracket = sum_j coefficients[j] * gens[j] when the membership solve succeeded.
  std::vector<JetClass> coefficients;
};

struct InvolutivityResult {
  InvolutivityVerdict verdict = InvolutivityVerdict::Inconclusive;
  std::vector<BracketWitness> witnesses;
  /// First pair whose bracket could not be expressed.
  std::optional<BracketWitness> failure;
  /// Degree D at which the restriction to S was unsolvable modulo m^{D+1}.
  int obstruction_degree = -1;
};

/// Degree-bounded membership test for [gens, gens] in the span of gens.
InvolutivityResult involutivity_check(const std::vector<VectorFieldJet>& gens, int degree_bound);

/// Rank of the generator values at a point of S, given by tangential coordinates.
std::size_t rank_on_S(const std::vector<VectorFieldJet>& gens, std::span<const GaussianRational> point);

}  // namespace foliate
