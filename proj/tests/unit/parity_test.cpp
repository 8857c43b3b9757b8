#include <doctest.h>

#include "gsa/parity.hpp"
#include "gsa/random.hpp"

using namespace gsa;

namespace {

CoordinateSymbol coord(std::string name, Parity p, std::vector<int> w) {
  return {std::move(name), p, Weight(std::move(w))};
}

Polynomial var(const ChartPtr& ch, std::string_view n) { return Polynomial::coordinate(ch, n); }

// Independent sign: bubble sort the sequence alpha(sigma(0..n-1)) keyed by sigma,
// counting swaps of two 1-entries.
int bubble_sign(const Weight& alpha, const Permutation& sigma) {
  std::vector<int> key(sigma.image()), bit;
  for (std::size_t k = 0; k < sigma.size(); ++k) bit.push_back(alpha[sigma(k)]);
  int sign = 1;
  for (std::size_t pass = 0; pass < key.size(); ++pass)
    for (std::size_t i = 0; i + 1 < key.size(); ++i)
      if (key[i] > key[i + 1]) {
        std::swap(key[i], key[i + 1]);
        std::swap(bit[i], bit[i + 1]);
        if (bit[i] == 1 && bit[i + 1] == 1) sign = -sign;
      }
  return sign;
}

// Double vector bundle x00; x10, x01 odd; x11 even with x11' = x11 + x10 x01.
Atlas example_dvb(bool linear = false) {
  auto mk = [](std::string n) {
    return make_chart(n, {coord("x00", Parity::Even, {0, 0}), coord("x10", Parity::Odd, {1, 0}),
                          coord("x01", Parity::Odd, {0, 1}), coord("x11", Parity::Even, {1, 1})});
  };
  auto u = mk("U"), v = mk("V");
  Atlas a;
  a.kind = AtlasKind::multivector(2);
  a.nmanifold = true;
  a.charts = {u, v};
  auto extra_u = linear ? Polynomial(u) : var(u, "x10") * var(u, "x01");
  auto extra_v = linear ? Polynomial(v) : var(v, "x10") * var(v, "x01");
  PolynomialMap f(v, u, {var(u, "x00"), var(u, "x10"), var(u, "x01"),
                         Rational(linear ? 3 : 1) * var(u, "x11") + extra_u});
  PolynomialMap g(u, v, {var(v, "x00"), var(v, "x10"), var(v, "x01"),
                         Rational(1, linear ? 3 : 1) * (var(v, "x11") - extra_v)});
  a.transitions.push_back({0, 1, f, g});
  return a;
}

std::vector<Weight> all_weights(std::size_t n) {
  std::vector<Weight> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::vector<int> e;
    for (std::size_t s = 0; s < n; ++s) e.push_back((bits >> s) & 1);
    out.emplace_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("Koszul signs") {
  auto t = Permutation::transposition(2, 0, 1);
  CHECK(koszul_sign(Weight({1, 1}), t) == -1);
  CHECK(koszul_sign(Weight({1, 0}), t) == 1);
  CHECK(koszul_sign(Weight({1, 0, 1}), Permutation::identity(3)) == 1);
  CHECK(koszul_sign(Weight({1, 0, 1}), Permutation::from_one_based({3, 2, 1})) == -1);

  const auto group = Permutation::all(4);
  for (const auto& a : all_weights(4))
    for (const auto& s1 : group) {
      CHECK(koszul_sign(a, s1) == bubble_sign(a, s1));
      if (a.total() <= 1) CHECK(koszul_sign(a, s1) == 1);
      for (const auto& s : group)
        CHECK(koszul_sign(a, s1 * s) == koszul_sign(a.permuted(s1), s) * koszul_sign(a, s1));
    }
}

TEST_CASE("reversed coordinate names") {
  CHECK(reversed_name("z") == "z_pi");
  CHECK(reversed_name("z_pi") == "z");
  CHECK(reversed_name("x[1,0]") == "x_pi[1,0]");
  CHECK(reversed_name("x_pi[1,0]") == "x[1,0]");
}

TEST_CASE("total reversion of the double vector bundle example") {
  auto a = example_dvb();
  REQUIRE(validate_atlas(a).ok());
  auto p = total_reversion(a);
  CHECK(validate_atlas(p).ok());
  for (const auto& c : p.charts[0]->coordinates()) CHECK(c.parity == Parity::Even);
  CHECK(to_string(p.transitions[0].forward.image(3)) == "-x10_pi*x01_pi + x11_pi");
  CHECK((*p.charts[0])[0].name == "x00");

  // the other order keeps the plus sign, and the two are related by -1 on the core
  auto q = total_reversion(a, Permutation::transposition(2, 0, 1));
  CHECK(to_string(q.transitions[0].forward.image(3)) == "x10_pi*x01_pi + x11_pi");

  CHECK(total_reversion(p, Permutation::from_one_based({2, 1})) == a);
  CHECK(reverse_parity(reverse_parity(a, 0), 0) == a);

  auto lin = example_dvb(true);
  auto plin = total_reversion(lin);
  const auto& pu = plin.charts[0];
  CHECK(plin.transitions[0].forward.image(3) == Rational(3) * var(pu, "x11_pi"));
}

TEST_CASE("total reversion on random atlases") {
  AtlasGenerator gen(2024);
  for (int i = 0; i < 20; ++i) {
    RandomAtlasOptions o;
    o.kind = AtlasKind::multivector(1 + i % 3);
    o.nmanifold = i % 2 == 0;
    o.charts = 3;
    o.odd_base = o.nmanifold ? 0 : 1;
    auto a = gen.atlas(o);
    REQUIRE(validate_atlas(a).ok());
    const std::size_t n = a.kind.vector_slots;
    auto p = total_reversion(a);
    CHECK(validate_atlas(p).ok());
    for (std::size_t c = 0; c < a.charts[0]->size(); ++c) {
      const auto& z = (*a.charts[0])[c];
      CHECK((*p.charts[0])[c].parity == z.parity + parity_of(z.weight.total()));
      if (o.nmanifold) CHECK((*p.charts[0])[c].parity == Parity::Even);
    }
    std::vector<int> rev;
    for (std::size_t k = n; k >= 1; --k) rev.push_back(static_cast<int>(k));
    CHECK(total_reversion(p, Permutation::from_one_based(rev)) == a);
    for (const auto& s : Permutation::all(n)) CHECK(validate_atlas(total_reversion(a, s)).ok());
  }
}

TEST_CASE("Phi isomorphisms") {
  auto a = example_dvb();
  CHECK(phi_iso(a, Permutation::identity(2)) ==
        identity_morphism(std::make_shared<const Atlas>(total_reversion(a))));
  auto phi = phi_iso(a, Permutation::transposition(2, 0, 1));
  CHECK(check_morphism(phi).ok());
  const auto& m = phi.maps[0].map;
  const auto& sc = m.over();
  CHECK(m.image(1) == var(sc, "x10_pi"));
  CHECK(m.image(2) == var(sc, "x01_pi"));
  CHECK(m.image(3) == -var(sc, "x11_pi"));

  // same weight after permuting: the sign is the sign of the permutation
  for (const auto& s : Permutation::all(3))
    CHECK(koszul_sign(Weight({1, 1, 1}), s) == s.sign());
}

TEST_CASE("only one sign convention makes Phi a morphism") {
  auto mk = [](std::string n) {
    return make_chart(n, {coord("a", Parity::Odd, {1, 0, 0}), coord("b", Parity::Odd, {0, 1, 0}),
                          coord("z", Parity::Even, {1, 1, 0})});
  };
  auto u = mk("U"), v = mk("V");
  Atlas e;
  e.kind = AtlasKind::multivector(3);
  e.charts = {u, v};
  e.transitions.push_back({0, 1, PolynomialMap(v, u, {var(u, "a"), var(u, "b"), var(u, "z") + var(u, "a") * var(u, "b")}),
                           PolynomialMap(u, v, {var(v, "a"), var(v, "b"), var(v, "z") - var(v, "a") * var(v, "b")})});
  REQUIRE(validate_atlas(e).ok());
  auto sigma = Permutation::from_one_based({2, 3, 1});
  auto phi = phi_iso(e, sigma);
  CHECK(check_morphism(phi).ok());

  // the literal pair product evaluated at sigma instead of sigma^{-1}
  auto flipped = phi;
  for (auto& cm : flipped.maps) {
    std::vector<Polynomial> imgs;
    for (std::size_t i = 0; i < e.charts[0]->size(); ++i)
      imgs.push_back(Polynomial::coordinate(cm.map.over(), i) *
                     Rational(koszul_sign((*e.charts[0])[i].weight, sigma.inverse())));
    cm.map = PolynomialMap(cm.map.vars(), cm.map.over(), imgs);
  }
  CHECK(check_morphism(flipped).has("naturality"));
}

TEST_CASE("Phi composition law and naturality on random 3-vector atlases") {
  AtlasGenerator gen(77);
  const auto group = Permutation::all(3);
  for (int i = 0; i < 6; ++i) {
    RandomAtlasOptions o;
    o.kind = AtlasKind::multivector(3);
    o.nmanifold = i % 2 == 0;
    o.odd_base = o.nmanifold ? 0 : 1;
    auto e = std::make_shared<const Atlas>(gen.atlas(o));
    for (const auto& s1 : group) {
      auto e1 = permute_slots(*e, s1);
      auto phi1 = phi_iso(*e, s1);
      REQUIRE(check_morphism(phi1).ok());
      for (const auto& s : group)
        CHECK(phi_iso(*e, s1 * s) == compose(permute_morphism(phi1, s), phi_iso(e1, s)));
    }

    auto [e2, iso] = gen.recoordinatize(e);
    auto f = compose(iso, gen.automorphism(e));
    REQUIRE(check_morphism(f).ok());
    auto pf = total_reversion(f);
    CHECK(check_morphism(pf).ok());
    auto g = gen.automorphism(e2);
    CHECK(total_reversion(compose(g, f)) == compose(total_reversion(g), pf));
    for (const auto& s : group) {
      auto lhs = compose(phi_iso(*e2, s), total_reversion(permute_morphism(f, s)));
      auto rhs = compose(permute_morphism(pf, s), phi_iso(*e, s));
      CHECK(lhs == rhs);
    }
  }
}
