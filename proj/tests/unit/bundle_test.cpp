#include <doctest.h>

#include "gsa/bundle.hpp"

using namespace gsa;

namespace {

CoordinateSymbol coord(std::string name, Parity p, std::vector<int> w) {
  return {std::move(name), p, Weight(std::move(w))};
}

Polynomial var(const ChartPtr& ch, std::string_view n) { return Polynomial::coordinate(ch, n); }
Polynomial num(const ChartPtr& ch, const Rational& v) { return Polynomial::constant(ch, v); }

// Degree-2 weighted chart pair with z' = z + xi1 xi2 (or z' = z + x when `broken`).
AtlasPtr degree_two(bool broken = false) {
  auto mk = [](std::string n) {
    return make_chart(n, {coord("x", Parity::Even, {0}), coord("xi1", Parity::Odd, {1}),
                          coord("xi2", Parity::Odd, {1}), coord("z", Parity::Even, {2})});
  };
  auto u = mk("U"), v = mk("V");
  auto shift = broken ? var(u, "x") : var(u, "xi1") * var(u, "xi2");
  auto back = broken ? var(v, "x") : var(v, "xi1") * var(v, "xi2");
  Atlas a;
  a.kind = AtlasKind::weighted(2);
  a.nmanifold = true;
  a.charts = {u, v};
  PolynomialMap fwd(v, u, {var(u, "x"), var(u, "xi1"), var(u, "xi2"), var(u, "z") + shift});
  PolynomialMap inv(u, v, {var(v, "x"), var(v, "xi1"), var(v, "xi2"), var(v, "z") - back});
  a.transitions.push_back({0, 1, fwd, inv});
  return std::make_shared<const Atlas>(a);
}

// DVB (x; y, Y; z) with z' = 2z + yYx.
AtlasPtr dvb() {
  auto mk = [](std::string n) {
    return make_chart(n, {coord("x", Parity::Even, {0, 0}), coord("y", Parity::Even, {1, 0}),
                          coord("Y", Parity::Even, {0, 1}), coord("z", Parity::Even, {1, 1})});
  };
  auto u = mk("U"), v = mk("V");
  Atlas a;
  a.kind = AtlasKind::multivector(2);
  a.charts = {u, v};
  PolynomialMap fwd(v, u, {var(u, "x"), var(u, "y"), var(u, "Y"),
                           num(u, 2) * var(u, "z") + var(u, "y") * var(u, "Y") * var(u, "x")});
  PolynomialMap inv(u, v, {var(v, "x"), var(v, "y"), var(v, "Y"),
                           Rational(1, 2) * (var(v, "z") - var(v, "y") * var(v, "Y") * var(v, "x"))});
  a.transitions.push_back({0, 1, fwd, inv});
  return std::make_shared<const Atlas>(a);
}

}  // namespace

TEST_CASE("validate_atlas on weighted examples") {
  auto good = degree_two();
  CHECK(validate_atlas(*good).ok());
  auto bad = validate_atlas(*degree_two(true));
  CHECK(bad.has("homogeneity"));

  auto ch = make_chart("U", {coord("x", Parity::Even, {0, 0}), coord("w", Parity::Even, {2, 0})});
  Atlas a;
  a.kind = AtlasKind::multivector(2);
  a.charts = {ch};
  CHECK(validate_atlas(a).has("kind"));

  auto odd_z = make_chart("U", {coord("z", Parity::Odd, {2})});
  CHECK(validate_chart(AtlasKind::weighted(2), true, *odd_z).has("nmanifold"));
}

TEST_CASE("declared inverse and cocycle checks") {
  auto base = *degree_two();
  auto bad = base;
  auto& inv = bad.transitions[0].inverse;
  auto v = bad.charts[1];
  inv = PolynomialMap(inv.vars(), v, {var(v, "x"), var(v, "xi1"), var(v, "xi2"), var(v, "z")});
  CHECK(validate_atlas(bad).has("inverse"));

  // Three charts with identical data: the cocycle holds trivially for the identity
  // overlaps and fails once one leg is twisted.
  auto w = make_chart("W", base.charts[0]->coordinates());
  Atlas a = base;
  a.charts.push_back(w);
  auto u = a.charts[0], vv = a.charts[1];
  auto id_vw = PolynomialMap::identity(vv).relabeled(w, vv);
  auto id_wv = PolynomialMap::identity(w).relabeled(vv, w);
  a.transitions.push_back({1, 2, id_vw, id_wv});
  a.transitions.push_back({0, 2, a.transitions[0].forward.relabeled(w, u),
                           a.transitions[0].inverse.relabeled(u, w)});
  a.cocycles.push_back({0, 1, 2});
  CHECK(validate_atlas(a).ok());
  a.transitions[2] = {0, 2, PolynomialMap::identity(u).relabeled(w, u),
                      PolynomialMap::identity(w).relabeled(u, w)};
  CHECK(validate_atlas(a).has("cocycle"));
}

TEST_CASE("weight and Euler vector fields") {
  auto a = degree_two();
  auto fields = weight_vector_field(*a);
  const auto& u = a->charts[0];
  Derivation expect(u);
  expect.set_component(1, var(u, "xi1"));
  expect.set_component(2, var(u, "xi2"));
  expect.set_component(3, num(u, 2) * var(u, "z"));
  CHECK(fields[0] == expect);

  auto d = dvb();
  auto e1 = weight_vector_field(*d, 0);
  auto e2 = weight_vector_field(*d, 1);
  const auto& du = d->charts[0];
  Derivation n1(du);
  n1.set_component(1, var(du, "y"));
  n1.set_component(3, var(du, "z"));
  CHECK(e1[0] == n1);
  CHECK(bracket(e1[0], e2[0]).is_zero());
  CHECK(weight_vector_field(*d)[0] == e1[0] + e2[0]);

  CHECK_THROWS_AS(weight_vector_field(*degree_two(true)), ValidationError);
}

TEST_CASE("dilations form a monoid action") {
  auto a = degree_two();
  CHECK(dilation(a, 1) == identity_morphism(a));
  auto h0 = dilation(a, 0);
  const auto& u = a->charts[0];
  CHECK(h0.maps[0].map.image(3).is_zero());
  CHECK(h0.maps[0].map.image(0) == var(u, "x"));
  CHECK(compose(dilation(a, 2), dilation(a, 3)) == dilation(a, 6));
  CHECK(compose(dilation(a, Rational(1, 2)), dilation(a, 4)) == dilation(a, 2));
  CHECK(check_morphism(dilation(a, 3)).ok());
  CHECK(check_morphism(identity_morphism(a)).ok());

  auto d = dvb();
  CHECK(compose(dilation(d, 2, 0), dilation(d, 2, 1)) == dilation(d, 2));
}

TEST_CASE("check_morphism rejects weight-changing maps") {
  auto a = degree_two();
  auto m = identity_morphism(a);
  const auto& u = a->charts[0];
  // z -> x keeps parity but drops weight 2 to 0.
  m.maps[0].map = PolynomialMap(u, u, {var(u, "x"), var(u, "xi1"), var(u, "xi2"), var(u, "x")});
  auto r = check_morphism(m);
  CHECK(r.has("homogeneity"));
  CHECK(r.has("dilation"));
  CHECK_THROWS_AS(PolynomialMap(u, u, {var(u, "x"), var(u, "z"), var(u, "xi2"), var(u, "z")}),
                  ParityError);

  auto gap = identity_morphism(a);
  gap.maps.pop_back();
  CHECK(check_morphism(gap).has("coverage"));
}

TEST_CASE("restriction to a weight and cores") {
  auto d = dvb();
  auto core = restrict_to_weight(*d, Weight({1, 1}));
  CHECK(validate_atlas(core).ok());
  REQUIRE(core.charts[0]->size() == 2);
  CHECK((*core.charts[0])[1].name == "z");
  const auto& cu = core.charts[0];
  CHECK(core.transitions[0].forward.image(1) == num(cu, 2) * var(cu, "z"));

  auto side = restrict_to_weight(*d, Weight({1, 0}));
  CHECK(validate_atlas(side).ok());
  CHECK((*side.charts[0])[1].name == "y");
  CHECK_THROWS(restrict_to_weight(*d, Weight({0, 0})));

  auto c12 = core_bundle(*d, 0, 1);
  CHECK(c12 == core);
  CHECK_THROWS(core_bundle(*d, 0, 0));

  auto ch = make_chart("U", {coord("x", Parity::Even, {0, 0, 0}), coord("a", Parity::Even, {1, 0, 1}),
                             coord("b", Parity::Even, {1, 1, 0}), coord("c", Parity::Odd, {0, 1, 0})});
  Atlas three;
  three.kind = AtlasKind::multivector(3);
  three.charts = {ch};
  auto c13 = core_bundle(three, 0, 2);
  REQUIRE(c13.charts[0]->size() == 3);
  CHECK((*c13.charts[0])[1].weight == Weight({1}));
  CHECK((*c13.charts[0])[2].weight == Weight({0}));
  CHECK(validate_atlas(c13).ok());

  auto base_only = make_chart("U", {coord("x", Parity::Even, {0, 0})});
  Atlas b;
  b.kind = AtlasKind::multivector(2);
  b.charts = {base_only};
  CHECK(core_bundle(b, 0, 1).charts[0]->size() == 1);
}

TEST_CASE("slot permutation reindexes weights only") {
  auto d = dvb();
  auto p = permute_slots(*d, Permutation::transposition(2, 0, 1));
  CHECK(validate_atlas(p).ok());
  CHECK((*p.charts[0])[1].weight == Weight({0, 1}));
  CHECK(permute_slots(p, Permutation::transposition(2, 0, 1)) == *d);
  CHECK(retype_degree(*degree_two(), 3).kind.degree == 3);
}
