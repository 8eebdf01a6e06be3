#include <doctest.h>

#include "foliate/error.hpp"
#include "foliate/laurent.hpp"
#include "support.hpp"

using namespace foliate;
using namespace testing;

namespace {

const VarList kY{"y"};

// Residue at 0 by (1/(m-1)!) d^{m-1}/dy^{m-1} [y^m f] at y = 0, with m the pole order bound.
GaussianRational derivative_residue(const MultiPoly& num, const MultiPoly& den) {
  const int m = valuation(den, 0);
  if (m <= 0) return GaussianRational();
  const MultiPoly ym = P("y", kY).pow(static_cast<unsigned>(m));
  RationalFunction g(num * ym, den);
  GaussianRational fact(1);
  for (int j = 1; j < m; ++j) {
    g = g.derivative("y");
    fact *= GaussianRational(j);
  }
  const GaussianRational zero;
  return g.evaluate(std::span(&zero, 1)) / fact;
}

}  // namespace

TEST_CASE("laurent expansion of simple quotients") {
  const LaurentSeries s = laurent_expand(P("1", kY), P("y^2 - y^3", kY), "y", 2);
  CHECK(s.min_exponent == -2);
  for (int e = -2; e <= 2; ++e) CHECK(s.coefficient(e) == GaussianRational(1));
  CHECK(s.coefficient(-3).is_zero());
  CHECK(residue_coefficient(laurent_expand(P("3 + y", kY), P("y", kY), "y", 0)) == GaussianRational(3));
  CHECK(laurent_expand(MultiPoly(kY), P("y", kY), "y", 3).is_zero());
}

TEST_CASE("laurent errors") {
  const LaurentSeries s = laurent_expand(P("1", kY), P("y^3", kY), "y", -2);
  CHECK_THROWS_AS(residue_coefficient(s), Error);
  CHECK_THROWS_AS(laurent_expand(P("1", kY), MultiPoly(kY), "y", 0), Error);
  const VarList xy{"x", "y"};
  CHECK_THROWS_AS(laurent_expand(P("x", xy), P("y", xy), "y", 0), Error);
}

TEST_CASE("series times denominator recovers numerator") {
  Rng rng(21);
  const auto vars = std::make_shared<const VarList>(kY);
  for (int n = 0; n < 100; ++n) {
    MultiPoly den = random_unit(rng, vars, 3, 3);
    den *= P("y", kY).pow(static_cast<unsigned>(uniform(rng, 0, 3)));
    const MultiPoly num = random_poly(rng, vars, 3, 3);
    const int order = 4;
    const LaurentSeries s = laurent_expand(num, den, "y", order);
    // (sum c_e y^e) * den agrees with num through y^order.
    for (int e = -6; e <= order; ++e) {
      GaussianRational acc;
      for (const auto& [exp, c] : den.terms()) acc += c * s.coefficient(e - exp[0]);
      CHECK(acc == (e < 0 ? GaussianRational() : num.coefficient({e})));
    }
  }
}

TEST_CASE("residue agrees with the derivative formula") {
  Rng rng(22);
  const auto vars = std::make_shared<const VarList>(kY);
  for (int n = 0; n < 100; ++n) {
    MultiPoly den = random_unit(rng, vars, 2, 3);
    den *= P("y", kY).pow(static_cast<unsigned>(uniform(rng, 1, 4)));
    const MultiPoly num = random_poly(rng, vars, 4, 4);
    CHECK(residue_coefficient(laurent_expand(num, den, "y", -1)) == derivative_residue(num, den));
  }
}

TEST_CASE("residue of a logarithmic derivative counts zeros at the origin") {
  Rng rng(23);
  const auto vars = std::make_shared<const VarList>(kY);
  for (int n = 0; n < 100; ++n) {
    const long k = uniform(rng, 0, 5);
    const MultiPoly unit = random_unit(rng, vars, 3, 3);
    const MultiPoly g = unit * P("y", kY).pow(static_cast<unsigned>(k));
    CHECK(residue_coefficient(laurent_expand(g.derivative("y"), g, "y", -1)) == GaussianRational(k));
  }
}
