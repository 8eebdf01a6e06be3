#pragma once

#include <optional>
#include <vector>

#include "foliate/rational.hpp"

namespace foliate {

using Matrix = std::vector<std::vector<GaussianRational>>;

/// One exact solution of A x = b (free unknowns set to zero), or nullopt
/// when the system is inconsistent. A has rows of equal length.
std::optional<std::vector<GaussianRational>> solve_linear(Matrix a, std::vector<GaussianRational> b,
                                                          std::size_t num_unknowns);

std::size_t matrix_rank(Matrix a);

}  // namespace foliate
