#pragma once

#include <string>
#include <vector>

namespace testing {

struct ResidueCase {
  const char* a;
  const char* b;
  long num;  // frozen residue num/den
  long den;
};

// Residues frozen from the contour oracle at radius 1/2; every other pole of
// B(0, y) lies outside |y| = 1/2.
inline const std::vector<ResidueCase> kResidueCorpus{
    {"x", "y", 2, 1},
    {"x*y", "y", 1, 1},
    {"0", "y^2", 2, 1},
    {"x", "1 + y", 0, 1},
    {"0", "y*(1 - y)", 1, 1},
    {"x*y^2", "y^3", 4, 1},
    {"2*x + x^2", "y + y^2", 3, 1},
    {"x*(1 + y)", "y^2*(1 + y)", 2, 1},
    {"x*y + x^2*y^5", "y^2 + x*y", 3, 1},
    {"3*x - x*y", "y^3 + y^5", 0, 1},
    {"x*y^3", "y^4 + x", 5, 1},
    {"x/2", "3*y - y^2", 7, 6},
};

}  // namespace testing
