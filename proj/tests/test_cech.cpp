#include <doctest.h>

#include "atlases.hpp"
#include "foliate/cech.hpp"
#include "foliate/error.hpp"
#include "support.hpp"

using namespace foliate;
using namespace testing;

namespace {

RationalJet entry(const CechCochain& c, const std::string& text) {
  return RationalJet::from_function(c.ideal, R(text, c.ideal.variables()));
}

// Random degree-0 cochain: entries in O_S, or linear in the fibers.
CechCochain random_sigma(Rng& rng, CochainKind kind, const TransitionAtlas& atlas) {
  CechCochain s = empty_cochain(kind, 0, atlas);
  const IdealSpec& ideal = s.ideal;
  for (const auto& chart : atlas.charts()) {
    Tensor t = s.zero_tensor();
    for (auto& e : t) {
      MultiPoly p = ideal.zero();
      if (kind == CochainKind::Atiyah) {
        p = truncate(random_poly(rng, ideal, 3, 3), ideal).rep();
      } else {
        for (const auto& f : ideal.normal_vars()) p += ideal.variable(f) * random_poly(rng, ideal.with_order(0), 2, 2);
        p = truncate_rep(p, ideal.num_normal(), 1);
      }
      MultiPoly den = ideal.constant(1);
      if (uniform(rng, 0, 3) == 0) den += ideal.variable(ideal.tangential_vars().front()) * random_nonzero(rng);
      e = RationalJet(ideal, p, den);
    }
    s.chart_components.emplace(chart, std::move(t));
  }
  return s;
}

const std::vector<const char*> kAdaptedAtlases{kProduct, kCounter, kFirstOrder, kSplit, kThreeCharts, kThreeDim};

}  // namespace

TEST_CASE("atiyah obstruction on the counterexample") {
  const TransitionAtlas a = atlas_from(kCounter);
  const CechCochain c = atiyah_obstruction(a);
  CHECK(c.degree == 1);
  CHECK_FALSE(c.is_zero());
  REQUIRE(c.pair_components.size() == 1);
  const Tensor& t = c.pair_components.at({"A", "B"});
  REQUIRE(t.size() == 1);
  // d^2 x_A / dx_B dy_B = -1/(1+y)^2, times d x_B / d x_A = 1 + y.
  CHECK(t[0] == entry(c, "-1/(1 + y)"));
  CHECK(verify_cocycle(c, a));
}

TEST_CASE("normal extension obstruction on the counterexample") {
  const TransitionAtlas a = atlas_from(kCounter);
  const CechCochain c = normal_extension_obstruction(a);
  REQUIRE(c.pair_components.size() == 1);
  // Same second derivative, contracted with v_x of chart B = (1 + y) v_x of chart A.
  CHECK(c.pair_components.at({"A", "B"})[0] == entry(c, "-v_x/(1 + y)"));
  CHECK(c.slots[0].kind == SlotKind::Vertical);
}

TEST_CASE("obstructions vanish on extendable atlases") {
  for (const char* text : kAdaptedAtlases) {
    const TransitionAtlas a = atlas_from(text);
    const CechCochain at = atiyah_obstruction(a);
    const CechCochain ne = normal_extension_obstruction(a);
    if (check_extension_condition(a, 1).passed()) {
      CHECK(at.is_zero());
      CHECK(ne.is_zero());
    }
    CHECK(at.is_zero() == ne.is_zero());
    CHECK(verify_cocycle(at, a));
    CHECK(verify_cocycle(ne, a));
  }
  CHECK_FALSE(atiyah_obstruction(atlas_from(kThreeCharts)).is_zero());
  CHECK_FALSE(atiyah_obstruction(atlas_from(kThreeDim)).is_zero());
}

TEST_CASE("obstructions need an atlas adapted to the foliation") {
  CHECK_THROWS_AS(atiyah_obstruction(atlas_from(kUnadapted)), Error);
  const TransitionAtlas tilted = atlas_from(R"J({
    "roles": {"normal": ["x"], "tangential": ["y", "w"], "foliation": ["y"]}, "charts": ["A", "B"],
    "transitions": [{"from": "A", "to": "B", "map": {"x": "x", "y": "y", "w": "w + y"}},
                    {"from": "B", "to": "A", "map": {"x": "x", "y": "y", "w": "w - y"}}]})J");
  CHECK_THROWS_AS(atiyah_obstruction(tilted), Error);
  CHECK_THROWS_AS(normal_extension_obstruction(tilted), Error);
}

TEST_CASE("transport there and back is the identity") {
  Rng rng(71);
  for (const char* text : kAdaptedAtlases) {
    const TransitionAtlas a = atlas_from(text);
    for (CochainKind kind : {CochainKind::Atiyah, CochainKind::NormalExtension}) {
      const CechCochain s = random_sigma(rng, kind, a);
      for (const auto& [p, q] : a.overlaps()) {
        const Tensor& t = s.chart_components.at(q);
        CHECK(transport(s, transport(s, t, a, p, q), a, q, p) == t);
      }
    }
  }
}

TEST_CASE("coboundaries split and are cocycles") {
  Rng rng(72);
  int count = 0;
  for (int round = 0; round < 9; ++round) {
    for (const char* text : kAdaptedAtlases) {
      const TransitionAtlas a = atlas_from(text);
      for (CochainKind kind : {CochainKind::Atiyah, CochainKind::NormalExtension}) {
        const CechCochain s = random_sigma(rng, kind, a);
        const CechCochain d = coboundary(s, a);
        CHECK(verify_splitting(d, s, a));
        CHECK(verify_cocycle(d, a));
        ++count;
      }
    }
  }
  CHECK(count >= 100);
}

TEST_CASE("a wrong splitting is rejected") {
  Rng rng(73);
  const TransitionAtlas a = atlas_from(kCounter);
  const CechCochain c = atiyah_obstruction(a);
  CechCochain s = empty_cochain(CochainKind::Atiyah, 0, a);
  s.chart_components.emplace("A", s.zero_tensor());
  s.chart_components.emplace("B", s.zero_tensor());
  CHECK_FALSE(verify_splitting(c, s, a));
  // sigma_B = c rewritten in the frames of B splits c.
  s.chart_components.at("B") = transport(s, c.pair_components.at({"A", "B"}), a, "B", "A");
  CHECK(verify_splitting(c, s, a));
  CHECK_THROWS_AS(verify_splitting(s, s, a), Error);
  CHECK_THROWS_AS(verify_splitting(normal_extension_obstruction(a), s, a), Error);
}

TEST_CASE("extension generators glue across charts") {
  const TransitionAtlas a = atlas_from(kThreeDim);
  const CechCochain c = normal_extension_obstruction(a);
  CechCochain s = empty_cochain(CochainKind::NormalExtension, 0, a);
  s.chart_components.emplace("A", s.zero_tensor());
  s.chart_components.emplace("B", transport(s, c.pair_components.at({"A", "B"}), a, "B", "A"));
  REQUIRE(verify_splitting(c, s, a));
  const auto gens = extension_generators(s, a);
  const VarList& vars = s.ideal.variables();
  const VectorFieldJet& ga = gens.at("A").at(0);
  const VectorFieldJet& gb = gens.at("B").at(0);
  CHECK(ga.to_string() == "d/dy");
  // Total space of the normal bundle: v_B = J(y) v_A with J = [[1, y], [0, 1]].
  const std::map<std::string, RationalFunction> fwd{
      {"v_x1", R("v_x1 + y*v_x2", vars)}, {"v_x2", R("v_x2", vars)}, {"y", R("y", vars)}, {"w", R("w", vars)}};
  const std::map<std::string, RationalFunction> bwd{
      {"v_x1", R("v_x1 - y*v_x2", vars)}, {"v_x2", R("v_x2", vars)}, {"y", R("y", vars)}, {"w", R("w", vars)}};
  std::map<std::string, RationalFunction> field;
  for (std::size_t h = 0; h < vars.size(); ++h) field.emplace(vars[h], RationalFunction(ga.component(h).rep()));
  const auto pushed = push_forward(field, fwd, bwd);
  for (std::size_t h = 0; h < vars.size(); ++h) CHECK(pushed.at(vars[h]) == RationalFunction(gb.component(h).rep()));
}

TEST_CASE("extension generator errors") {
  const TransitionAtlas a = atlas_from(kCounter);
  CechCochain s = empty_cochain(CochainKind::NormalExtension, 0, a);
  Tensor t = s.zero_tensor();
  t[0] = entry(s, "1 + v_x");
  s.chart_components.emplace("A", t);
  CHECK_THROWS_AS(extension_generators(s, a), Error);
  t[0] = entry(s, "v_x/(1 + y)");
  s.chart_components.at("A") = t;
  CHECK_THROWS_AS(extension_generators(s, a), Error);
  CHECK_THROWS_AS(extension_generators(empty_cochain(CochainKind::Atiyah, 0, a), a), Error);
}

TEST_CASE("cochain index helpers") {
  const TransitionAtlas a = atlas_from(kThreeDim);
  const CechCochain c = empty_cochain(CochainKind::Atiyah, 1, a);
  // non-foliation {x1, x2, w} x foliation {y} x normal {x1, x2}
  CHECK(c.entry_count() == 6);
  for (std::size_t i = 0; i < c.entry_count(); ++i) CHECK(c.flat_index(c.multi_index(i)) == i);
  CHECK_THROWS_AS(empty_cochain(CochainKind::Atiyah, 2, a), Error);
}
