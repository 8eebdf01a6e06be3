#pragma once

#include <complex>

#include "foliate/residue.hpp"

namespace foliate {

struct ContourSpec {
  double radius = 0.5;
  int samples = 512;
};

/// (1 / 2 pi i) of the contour integral of ((dA/dx + dB/dy) / B)(0, y) dy over
/// |y| = radius, by the trapezoidal rule. Throws PoleOnContour when |B(0, y)|
/// drops below 1e-12 at a sample point.
std::complex<double> contour_residue_numeric(const SurfaceFieldInput& input, const ContourSpec& spec = {});

}  // namespace foliate
