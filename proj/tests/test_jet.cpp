#include <doctest.h>

#include "foliate/error.hpp"
#include "foliate/involutive.hpp"
#include "support.hpp"

using namespace foliate;
using namespace testing;

namespace {

IdealSpec chart(int k) { return IdealSpec({"x1", "x2"}, {"y1", "y2"}, k); }

VectorFieldRep raw(const IdealSpec& ideal, const std::map<std::string, std::string>& comps) {
  std::map<std::string, MultiPoly> m;
  for (const auto& [name, text] : comps) m.emplace(name, P(text, ideal.variables()));
  return VectorFieldRep::from_map(ideal, m);
}

}  // namespace

TEST_CASE("ideal spec validation") {
  CHECK_THROWS_AS(IdealSpec({"x"}, {"x"}, 1), Error);
  CHECK_THROWS_AS(IdealSpec({"x"}, {"y"}, -1), Error);
  const IdealSpec s({"x1", "x2"}, {"y"}, 2);
  CHECK(s.normal_degree({2, 1, 5}) == 3);
  CHECK(s.index_of("y") == 2);
  CHECK_THROWS_AS(s.index_of("w"), Error);
}

TEST_CASE("truncation drops high normal degree") {
  const IdealSpec s({"x"}, {"y"}, 1);
  const JetClass f = truncate(P("1 + x + x^2 + x*y^7 + x^3*y", s.variables()), s);
  CHECK(f.to_string() == "x*y^7 + x + 1");
  CHECK(truncate(P("x^2", s.variables()), s).is_zero());
}

TEST_CASE("truncation is a ring homomorphism") {
  Rng rng(41);
  for (int k = 0; k <= 3; ++k) {
    const IdealSpec s = chart(k);
    for (int n = 0; n < 40; ++n) {
      const MultiPoly a = random_poly(rng, s, 4, 5);
      const MultiPoly b = random_poly(rng, s, 4, 5);
      CHECK(truncate(a * b, s) == truncate(a, s) * truncate(b, s));
      CHECK(truncate(a + b, s) == truncate(a, s) + truncate(b, s));
      CHECK(truncate(a + random_in_power(rng, s, k + 1), s) == truncate(a, s));
    }
  }
}

TEST_CASE("classification of fields") {
  const IdealSpec s = chart(1);
  CHECK(classify_field(raw(s, {{"x1", "x1*y1"}, {"y2", "1"}})).is_logarithmic());
  CHECK_FALSE(classify_field(raw(s, {{"x1", "y1"}})).is_logarithmic());
  // x2^2 drops at k = 1, so the normal component still lies in I_S.
  CHECK(classify_field(raw(s, {{"x1", "x2 + x1^2"}})).is_logarithmic());
  CHECK(status_name(FieldStatus::General) == "general");
  CHECK(status_name(FieldStatus::Logarithmic) == "logarithmic");
}

TEST_CASE("jet bracket on a worked pair") {
  const IdealSpec s({"x"}, {"y"}, 1);
  const VectorFieldJet u = classify_field(raw(s, {{"x", "x*y"}, {"y", "1"}}));
  const VectorFieldJet v = classify_field(raw(s, {{"x", "x"}, {"y", "y^2"}}));
  const VectorFieldJet w = jet_bracket(u, v);
  CHECK(w.component("x").to_string() == "-x*y^2");
  CHECK(w.component("y").to_string() == "2*y");
  CHECK(w.is_logarithmic());
  CHECK_THROWS_AS(jet_bracket(u, classify_field(raw(s, {{"x", "1"}}))), Error);
}

TEST_CASE("bracket algebra for random logarithmic fields") {
  Rng rng(42);
  for (int k = 1; k <= 3; ++k) {
    const IdealSpec s = chart(k);
    for (int n = 0; n < 25; ++n) {
      const VectorFieldJet u = random_log_field(rng, s);
      const VectorFieldJet v = random_log_field(rng, s);
      const VectorFieldJet w = random_log_field(rng, s);
      const JetClass g = truncate(random_poly(rng, s), s);
      CHECK((jet_bracket(u, v) + jet_bracket(v, u)).is_zero());
      CHECK((jet_bracket(u, jet_bracket(v, w)) + jet_bracket(v, jet_bracket(w, u)) + jet_bracket(w, jet_bracket(u, v)))
                .is_zero());
      CHECK(jet_bracket(scale(g, u), v) == scale(g, jet_bracket(u, v)) - scale(jet_apply(v, g), u));
      CHECK(jet_bracket(u, v).is_logarithmic());
    }
  }
}

TEST_CASE("bracket and derivation ignore the choice of representative") {
  Rng rng(43);
  for (int k = 1; k <= 3; ++k) {
    const IdealSpec s = chart(k);
    for (int n = 0; n < 25; ++n) {
      const VectorFieldRep u = random_log_rep(rng, s);
      const VectorFieldRep v = random_log_rep(rng, s);
      const MultiPoly f = random_poly(rng, s, 4, 5);
      const VectorFieldJet u2 = classify_field(perturb(rng, u));
      const VectorFieldJet v2 = classify_field(perturb(rng, v));
      CHECK(jet_bracket(classify_field(u), classify_field(v)) == jet_bracket(u2, v2));
      CHECK(jet_apply(classify_field(u), truncate(f, s)) ==
            jet_apply(u2, truncate(f + random_in_power(rng, s, k + 1), s)));
      // The raw bracket of representatives projects to the jet bracket.
      CHECK(classify_field(lie_bracket(u, v)) == jet_bracket(classify_field(u), classify_field(v)));
    }
  }
}

TEST_CASE("derivations satisfy the product rule") {
  Rng rng(44);
  const IdealSpec s = chart(2);
  for (int n = 0; n < 60; ++n) {
    const VectorFieldJet v = random_log_field(rng, s);
    const JetClass f = truncate(random_poly(rng, s), s);
    const JetClass g = truncate(random_poly(rng, s), s);
    CHECK(jet_apply(v, f * g) == jet_apply(v, f) * g + f * jet_apply(v, g));
  }
}

TEST_CASE("restriction to S") {
  const IdealSpec s({"x"}, {"y", "z"}, 2);
  const VectorFieldJet v = classify_field(raw(s, {{"x", "x*y"}, {"y", "1 + x + z"}, {"z", "x*z + y^2"}}));
  const VectorFieldJet r = restrict_to_S(v);
  CHECK(r.ideal().order() == 0);
  CHECK(r.ideal().variables() == VarList{"y", "z"});
  CHECK(r.component("y").to_string() == "z + 1");
  CHECK(r.component("z").to_string() == "y^2");
}

TEST_CASE("primitive of a worked closed form") {
  const IdealSpec s({"x"}, {"y", "z"}, 2);
  const auto& v = s.variables();
  const JetClass h =
      primitive_of_closed_1form({{"y", truncate(P("2*y*z + x", v), s)}, {"z", truncate(P("y^2", v), s)}});
  CHECK(h.to_string() == "y^2*z + x*y");
  CHECK_THROWS_AS(primitive_of_closed_1form({{"y", truncate(P("z", v), s)}, {"z", truncate(P("2*y", v), s)}}),
                  Error);
  CHECK_THROWS_AS(primitive_of_closed_1form({{"x", truncate(P("1", v), s)}}), Error);
}

TEST_CASE("primitive inverts partial differentiation on random exact forms") {
  Rng rng(45);
  const IdealSpec s({"x1", "x2"}, {"y1", "y2", "y3"}, 2);
  const VarList listed{"y1", "y3"};
  for (int n = 0; n < 100; ++n) {
    const MultiPoly g = truncate(random_poly(rng, s, 5, 6), s).rep();
    std::map<std::string, JetClass> omega;
    for (const auto& name : listed) omega.emplace(name, truncate(g.derivative(name), s));
    const JetClass h = primitive_of_closed_1form(omega);
    for (const auto& name : listed) CHECK(truncate(h.rep().derivative(name), s) == omega.at(name));
    // Vanishes where the listed variables vanish.
    CHECK(h.rep().bind("y1", GaussianRational()).bind("y3", GaussianRational()).is_zero());
  }
}

TEST_CASE("commuting representative") {
  Rng rng(46);
  for (int k = 1; k <= 3; ++k) {
    const IdealSpec s({"x"}, {"y1", "y2", "y3"}, k);
    const auto& v = s.variables();
    const VarList frame{"y1", "y2"};
    for (int n = 0; n < 30; ++n) {
      // Low part free of the frame variables; high part arbitrary.
      VectorFieldRep w = VectorFieldRep::zero(s);
      for (std::size_t h = 0; h < v.size(); ++h) {
        MultiPoly low = h == 0 ? P("x", v) * random_poly(rng, s) : random_poly(rng, s);
        low = truncate_rep(low.bind("y1", GaussianRational()).bind("y2", GaussianRational()), 1, k);
        w.components[h] = low + random_in_power(rng, s, k + 1);
      }
      const VectorFieldRep out = normalize_commuting_representative(w, frame);
      for (std::size_t h = 0; h < v.size(); ++h) {
        CHECK(truncate(out.components[h], s) == truncate(w.components[h], s));
        for (const auto& f : frame) CHECK(out.components[h].derivative(f).is_zero());
      }
    }
    VectorFieldRep bad = VectorFieldRep::zero(s);
    bad.components[1] = P("y1", v);
    CHECK_THROWS_AS(normalize_commuting_representative(bad, frame), Error);
    bad.components[1] = P("1", v);
    bad.components[0] = P("1", v);
    CHECK_THROWS_AS(normalize_commuting_representative(bad, frame), Error);
  }
}
