#include <doctest.h>

#include "foliate/error.hpp"
#include "foliate/involutive.hpp"
#include "support.hpp"

using namespace foliate;
using namespace testing;

namespace {

VectorFieldJet field(const IdealSpec& ideal, const std::map<std::string, std::string>& comps) {
  std::map<std::string, MultiPoly> m;
  for (const auto& [name, text] : comps) m.emplace(name, P(text, ideal.variables()));
  return classify_field(m, ideal);
}

}  // namespace

TEST_CASE("involutive pair with a witness") {
  const IdealSpec s({"x"}, {"y", "z"}, 1);
  const std::vector<VectorFieldJet> gens{field(s, {{"y", "1"}, {"x", "x"}}), field(s, {{"z", "1 + x*y"}})};
  const InvolutivityResult r = involutivity_check(gens, 2);
  CHECK(r.verdict == InvolutivityVerdict::Involutive);
  REQUIRE(r.witnesses.size() == 1);
  const BracketWitness& w = r.witnesses.front();
  CHECK(scale(w.coefficients[0], gens[0]) + scale(w.coefficients[1], gens[1]) == w.bracket);
}

TEST_CASE("bracket leaving the span on S") {
  const IdealSpec s({"x"}, {"y", "z", "w"}, 1);
  const InvolutivityResult r =
      involutivity_check({field(s, {{"y", "1"}}), field(s, {{"z", "1"}, {"w", "y"}})}, 2);
  CHECK(r.verdict == InvolutivityVerdict::NotInvolutive);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->bracket == field(s, {{"w", "1"}}));
  CHECK(r.obstruction_degree == 0);
}

TEST_CASE("bracket in the span on S only") {
  const IdealSpec s({"x"}, {"y", "z"}, 1);
  const InvolutivityResult r = involutivity_check({field(s, {{"y", "1"}}), field(s, {{"z", "1"}, {"x", "x*y"}})}, 2);
  CHECK(r.verdict == InvolutivityVerdict::Inconclusive);
  CHECK(verdict_name(r.verdict) == "inconclusive");
}

TEST_CASE("involutivity input errors") {
  const IdealSpec s({"x"}, {"y"}, 1);
  CHECK_THROWS_AS(involutivity_check({}, 1), Error);
  CHECK_THROWS_AS(involutivity_check({field(s, {{"x", "1"}})}, 1), Error);
}

TEST_CASE("commuting coordinate fields are involutive at every order") {
  Rng rng(51);
  for (int k = 1; k <= 3; ++k) {
    const IdealSpec s({"x"}, {"y", "z"}, k);
    for (int n = 0; n < 10; ++n) {
      // u = d/dy + a(x, z) x d/dx with [u, d/dz] = -(da/dz) x d/dx, a multiple of u only when a_z = 0.
      const MultiPoly a = random_poly(rng, s, 2, 3).bind("y", GaussianRational()).bind("z", GaussianRational());
      VectorFieldRep u = VectorFieldRep::zero(s);
      u.components[1] = P("1", s.variables());
      u.components[0] = P("x", s.variables()) * a;
      VectorFieldRep v = VectorFieldRep::zero(s);
      v.components[2] = P("1", s.variables());
      CHECK(involutivity_check({classify_field(u), classify_field(v)}, 1).verdict == InvolutivityVerdict::Involutive);
    }
  }
}

TEST_CASE("rank on S") {
  const IdealSpec s({"x"}, {"y", "z"}, 1);
  const std::vector<VectorFieldJet> gens{field(s, {{"y", "1"}}), field(s, {{"y", "z"}})};
  const GaussianRational pt[] = {GaussianRational(1), GaussianRational(2)};
  CHECK(rank_on_S(gens, pt) == 1);
}
