#include <doctest.h>

#include "gsa/parity.hpp"
#include "gsa/random.hpp"
#include "gsa/symmetry.hpp"
#include "gsa/tangent.hpp"

using namespace gsa;

namespace {

CoordinateSymbol coord(std::string name, Parity p, std::vector<int> w) {
  return {std::move(name), p, Weight(std::move(w))};
}

Polynomial var(const ChartPtr& ch, std::string_view n) { return Polynomial::coordinate(ch, n); }

// One chart: x; y (01), Y (10) odd; z (11) even. The swap sends z to z + yYx.
ActionTable twisted_swap(const Rational& zscale = 1) {
  auto u = make_chart("U", {coord("x", Parity::Even, {0, 0}), coord("y", Parity::Odd, {0, 1}),
                            coord("Y", Parity::Odd, {1, 0}), coord("z", Parity::Even, {1, 1})});
  Atlas a;
  a.kind = AtlasKind::multivector(2);
  a.nmanifold = true;
  a.charts = {u};
  auto atlas = std::make_shared<const Atlas>(a);
  PolynomialMap s(u, u, {var(u, "x"), var(u, "Y"), var(u, "y"),
                         zscale * var(u, "z") + var(u, "y") * var(u, "Y") * var(u, "x")});
  return generate_action(atlas, Flavor::Symmetric, {{s}});
}

Atlas even_manifold(AtlasGenerator& gen, std::size_t odd = 0) {
  RandomAtlasOptions o;
  o.kind = AtlasKind::multivector(0);
  o.even_base = 2;
  o.odd_base = odd;
  o.charts = 2;
  return gen.atlas(o);
}

// Same action with -1 on the fibers of the core: I^sigma followed by z -> sgn(w_z, sigma) z.
ActionTable core_signed(const ActionTable& t) {
  ActionTable out{t.atlas, Flavor::Skew, {}};
  for (const auto& [s, maps] : t.maps) {
    std::vector<PolynomialMap> signed_maps;
    for (std::size_t c = 0; c < maps.size(); ++c) {
      const auto& ch = t.atlas->charts[c];
      std::vector<Polynomial> d;
      for (std::size_t i = 0; i < ch->size(); ++i)
        d.push_back(Polynomial::coordinate(ch, i) * Rational(koszul_sign((*ch)[i].weight, s)));
      signed_maps.push_back(compose(PolynomialMap(ch, ch, d), maps[c]));
    }
    out.maps.emplace(s, std::move(signed_maps));
  }
  return out;
}

std::size_t ch_size(const ActionTable& t) { return t.atlas->charts[0]->size(); }

}  // namespace

TEST_CASE("nice coordinates for the twisted swap") {
  auto t = twisted_swap();
  REQUIRE(validate_action(t).ok());
  CHECK_FALSE(check_nice(t).ok());
  auto nice = nice_coordinates(t);
  const auto& u = t.atlas->charts[0];
  CHECK(nice.to_nice.maps[0].map.image(3) ==
        var(u, "z") + Rational(1, 2) * var(u, "y") * var(u, "Y") * var(u, "x"));
  CHECK(nice.to_nice.maps[0].map.image(1) == var(u, "y"));
  CHECK(validate_action(nice.action).ok());
  CHECK(check_nice(nice.action).ok());
  CHECK(compose(nice.to_nice, nice.from_nice) == identity_morphism(nice.atlas));

  auto again = nice_coordinates(nice.action);
  for (const auto& cm : again.to_nice.maps) CHECK(cm.map == PolynomialMap::identity(nice.atlas->charts[0]));
}

TEST_CASE("Xi of a symmetric [2]-vector bundle is a purely even skew bundle") {
  auto t = twisted_swap();
  auto j = xi_functor(t);
  CHECK(validate_atlas(*j.atlas).ok());
  CHECK(validate_action(j).ok());
  for (const auto& c : j.atlas->charts[0]->coordinates()) CHECK(c.parity == Parity::Even);
  const auto& u = j.atlas->charts[0];
  auto s = Permutation::transposition(2, 0, 1);
  // z_pi -> -z_pi + (sign) y_pi Y_pi x on the core fiber
  CHECK(restrict_map(j.at(s)[0], core_bundle(*j.atlas, 0, 1).charts[0], core_bundle(*j.atlas, 0, 1).charts[0])
            .image(1) == -Polynomial::coordinate(core_bundle(*j.atlas, 0, 1).charts[0], 1));
  CHECK(j.at(s)[0].image(3).term_count() == 2);
  CHECK(xi_inverse(j).maps == t.maps);
  (void)u;
}

TEST_CASE("action validation reports failures") {
  auto bad = twisted_swap(2);
  auto r = validate_action(bad);
  CHECK(r.has("group"));
  CHECK(r.has("core"));

  auto missing = twisted_swap();
  missing.maps.erase(Permutation::transposition(2, 0, 1));
  CHECK(validate_action(missing).has("structure"));

  auto skew = twisted_swap();
  skew.flavor = Flavor::Skew;
  CHECK(validate_action(skew).has("core"));
}

TEST_CASE("flip on the second tangent bundle: symmetric, and skew after the core sign") {
  AtlasGenerator gen(11);
  for (int i = 0; i < 3; ++i) {
    auto it = iterated_tangent(even_manifold(gen, i % 2), 2);
    auto t = flip_action(it);
    CHECK(validate_action(t).ok());
    CHECK(check_nice(t).ok());
    auto s = core_signed(t);
    // only valid when the core sign is compatible with the transitions, which
    // requires the second-order part of the transitions to vanish: check the core only
    auto r = validate_action(s);
    CHECK_FALSE(r.has("core"));
    CHECK_FALSE(r.has("group"));
  }
}

TEST_CASE("Xi on the flip action of T(3)") {
  AtlasGenerator gen(19);
  for (int i = 0; i < 2; ++i) {
    auto m = std::make_shared<const Atlas>(even_manifold(gen));
    auto it = iterated_tangent(*m, 3);
    auto t = flip_action(it);
    auto j = xi_functor(t);
    CHECK(j.flavor == Flavor::Skew);
    CHECK(validate_action(j).ok());
    CHECK(check_nice(j).ok());
    for (std::size_t k = 0; k < ch_size(j); ++k) {
      const auto& z = (*t.atlas->charts[0])[k];
      CHECK((*j.atlas->charts[0])[k].parity == z.parity + parity_of(z.weight.total()));
    }
    // transpositions are -1 on the fibers of each core
    auto s12 = Permutation::transposition(3, 0, 1);
    const auto& ch = j.atlas->charts[0];
    auto x110 = ch->index_of("x1_pi[1,1,0]");
    CHECK(j.at(s12)[0].image(x110) == -Polynomial::coordinate(ch, x110));

    auto back = xi_inverse(j);
    CHECK(back.flavor == Flavor::Symmetric);
    CHECK(*back.atlas == *t.atlas);
    CHECK(back.maps == t.maps);

    // Pi of a morphism of symmetric bundles intertwines the J actions
    BundleMorphism f = gen.automorphism(m);
    for (std::size_t l = 1; l <= 3; ++l) f = tangent_of_morphism(f, it.levels[l], it.levels[l]);
    CHECK(check_intertwines(f, t, t).ok());
    auto pf = total_reversion(f);
    CHECK(check_intertwines(pf, j, j).ok());
  }
}

TEST_CASE("nice coordinates after a random change of coordinates") {
  AtlasGenerator gen(23);
  for (int i = 0; i < 4; ++i) {
    auto it = iterated_tangent(even_manifold(gen, i % 2), i < 2 ? 2 : 3);
    auto t = flip_action(it);
    auto [e2, iso] = gen.recoordinatize(it.atlas());
    ActionTable moved{e2, Flavor::Symmetric, {}};
    for (const auto& [s, maps] : t.maps) {
      std::vector<PolynomialMap> conj;
      for (std::size_t c = 0; c < maps.size(); ++c) {
        const auto& fwd = iso.maps[c].map;
        conj.push_back(compose(fwd, compose(maps[c], invert_graded(fwd)))
                           .relabeled(e2->charts[c], e2->charts[c]));
      }
      moved.maps.emplace(s, std::move(conj));
    }
    REQUIRE(validate_action(moved).ok());
    auto nice = nice_coordinates(moved);
    CHECK(validate_atlas(*nice.atlas).ok());
    CHECK(validate_action(nice.action).ok());
    CHECK(check_nice(nice.action).ok());
    CHECK(check_morphism(nice.to_nice).ok());
    CHECK(compose(nice.from_nice, nice.to_nice) == identity_morphism(e2));

    auto j = xi_functor(nice.action);
    CHECK(validate_action(j).ok());
    CHECK(check_nice(j).ok());
  }
}

TEST_CASE("graded inversion") {
  AtlasGenerator gen(31);
  RandomAtlasOptions o;
  o.kind = AtlasKind::multivector(2);
  o.odd_base = 1;
  auto a = gen.atlas(o);
  const auto& u = a.charts[0];
  for (int i = 0; i < 10; ++i) {
    PolynomialMap inv = PolynomialMap::identity(u);
    auto f = gen.triangular(u, u, &inv);
    CHECK(invert_graded(f) == inv);
  }
  const auto& x = var(u, "x1");
  std::vector<Polynomial> imgs;
  for (std::size_t k = 0; k < u->size(); ++k) imgs.push_back(Polynomial::coordinate(u, k));
  imgs[0] = x + x * x;
  CHECK_THROWS_AS(invert_graded(PolynomialMap(u, u, imgs)), std::invalid_argument);
}
