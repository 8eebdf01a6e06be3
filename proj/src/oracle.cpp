#include "foliate/oracle.hpp"

#include <cmath>
#include <numbers>

#include "foliate/error.hpp"

namespace foliate {

namespace {

constexpr double kPoleFloor = 1e-12;

}  // namespace

std::complex<double> contour_residue_numeric(const SurfaceFieldInput& input, const ContourSpec& spec) {
  if (!(spec.radius > 0.0) || !std::isfinite(spec.radius)) {
    throw Error(ErrorCode::InvalidArgument, "contour radius must be positive");
  }
  if (spec.samples < 16) throw Error(ErrorCode::InvalidArgument, "contour needs at least 16 samples");
  const MultiPoly num = input.a.derivative("x") + input.b.derivative("y");
  const MultiPoly& den = input.b;
  const std::size_t n = static_cast<std::size_t>(spec.samples);
  std::vector<std::complex<double>> ys(n);
  std::vector<std::complex<double>> bs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    ys[k] = std::polar(spec.radius, angle);
    const std::complex<double> point[2] = {0.0, ys[k]};
    bs[k] = den.evaluate(point);
    if (std::abs(bs[k]) < kPoleFloor) {
      throw Error(ErrorCode::PoleOnContour, "B(0, y) vanishes near the contour at angle " + std::to_string(angle));
    }
  }
  // dy = i y dtheta, so (1 / 2 pi i) * integral = mean of f(y) * y.
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::complex<double> point[2] = {0.0, ys[k]};
    sum += num.evaluate(point) / bs[k] * ys[k];
  }
  return sum / static_cast<double>(n);
}

}  // namespace foliate
