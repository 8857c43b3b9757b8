#include "gsa/laws.hpp"

#include <cctype>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "gsa/dsl.hpp"
#include "gsa/parity.hpp"
#include "gsa/polar.hpp"
#include "gsa/random.hpp"
#include "gsa/symmetry.hpp"
#include "gsa/tangent.hpp"

namespace gsa {

bool SuiteReport::ok() const {
  return !laws.empty() &&
         std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.informational || l.ok(); });
}

namespace {

class Tally {
public:
  explicit Tally(SuiteReport& r) : report_(r) {}

  void check(const std::string& law, bool ok, const std::function<std::string()>& detail = {}) {
    auto& l = find(law);
    ++l.cases;
    if (!ok) {
      if (l.failures++ == 0 && detail) {
        l.first_failure = detail();
        while (!l.first_failure.empty() && std::isspace(static_cast<unsigned char>(l.first_failure.back())))
          l.first_failure.pop_back();
      }
      if (l.first_failure.empty()) l.first_failure = "case " + std::to_string(l.cases);
    }
  }
  void note(const std::string& law, bool ok, const std::function<std::string()>& detail = {}) {
    check(law, ok, detail);
    find(law).informational = true;
  }
  void check(const std::string& law, const ValidationReport& r) {
    check(law, r.ok(), [&] { return r.to_string(); });
  }
  // Runs body; an exception counts as a failure of `law`.
  void guard(const std::string& law, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(law, false, [&] { return std::string("exception: ") + e.what(); });
    }
  }

private:
  LawResult& find(const std::string& law) {
    for (auto& l : report_.laws)
      if (l.law == law) return l;
    LawResult fresh;
    fresh.law = law;
    report_.laws.push_back(fresh);
    return report_.laws.back();
  }
  SuiteReport& report_;
};

std::size_t pick(const SuiteOptions& o, std::size_t dflt) { return o.count ? o.count : dflt; }

CoordinateSymbol coord(std::string name, Parity p, std::vector<int> w) {
  return {std::move(name), p, Weight(std::move(w))};
}

// Sign by explicit reordering: walk the 1-entries of alpha^sigma back to alpha by
// adjacent swaps keyed by sigma, counting exchanges of two 1s.
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

std::vector<Weight> all_weights(std::size_t n) {
  std::vector<Weight> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::vector<int> e;
    for (std::size_t s = 0; s < n; ++s) e.push_back(static_cast<int>((bits >> s) & 1));
    out.emplace_back(e);
  }
  return out;
}

Atlas random_manifold(AtlasGenerator& gen, std::size_t even, std::size_t odd, std::size_t charts = 2) {
  RandomAtlasOptions o;
  o.kind = AtlasKind::multivector(0);
  o.even_base = even;
  o.odd_base = odd;
  o.charts = charts;
  return gen.atlas(o);
}

// Conjugates an action along an isomorphism given chartwise (vars = new, over = old).
ActionTable transport(const ActionTable& t, const AtlasPtr& target, const BundleMorphism& iso) {
  ActionTable out{target, t.flavor, {}};
  std::vector<PolynomialMap> inv;
  for (const auto& cm : iso.maps) inv.push_back(invert_graded(cm.map));
  for (const auto& [s, maps] : t.maps) {
    std::vector<PolynomialMap> conj;
    for (std::size_t c = 0; c < maps.size(); ++c)
      conj.push_back(compose(iso.maps[c].map, compose(maps[c], inv[c])).relabeled(target->charts[c], target->charts[c]));
    out.maps.emplace(s, std::move(conj));
  }
  return out;
}

// --- suites -----------------------------------------------------------------

void algebra_suite(Tally& t, const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto ch = make_chart("R", {coord("a", Parity::Even, {0}), coord("th", Parity::Odd, {0}),
                             coord("b", Parity::Even, {1}), coord("p", Parity::Odd, {1}),
                             coord("q", Parity::Odd, {1}), coord("c", Parity::Even, {2})});
  auto poly = [&](std::optional<Parity> parity) {
    Polynomial out(ch);
    int terms = uniform(0, 4);
    for (int k = 0; k < terms; ++k) {
      Factors f;
      int len = uniform(0, 3);
      for (int i = 0; i < len; ++i) f.push_back(static_cast<std::uint32_t>(uniform(0, 5)));
      Rational c(uniform(-4, 4), uniform(1, 3));
      c.canonicalize();
      auto m = Polynomial::monomial(ch, c, f);
      if (parity && !m.is_zero() && *weight_and_parity(m).parity != *parity) continue;
      out += m;
    }
    return out;
  };
  const std::size_t rounds = pick(o, 1000) / 3 + 1;
  for (std::size_t r = 0; r < rounds; ++r) {
    Parity pa = uniform(0, 1) ? Parity::Odd : Parity::Even;
    Parity pb = uniform(0, 1) ? Parity::Odd : Parity::Even;
    auto a = poly(pa), b = poly(pb), c = poly(std::nullopt);

    Polynomial rebuilt(ch);
    for (const auto& [f, k] : a.terms()) {
      // reversed factor order, compensated by the Koszul sign of the reversal
      Factors rev(f.rbegin(), f.rend());
      Factors probe = rev;
      int s = sort_with_sign(probe, [&](std::uint32_t i) { return ch->odd(i); });
      rebuilt += Polynomial::monomial(ch, k * Rational(s), rev);
    }
    t.check("canonical form is idempotent", rebuilt == a);
    int s = (is_odd(pa) && is_odd(pb)) ? -1 : 1;
    t.check("supercommutativity", a * b == Rational(s) * (b * a), [&] { return to_string(a) + " | " + to_string(b); });
    t.check("associativity", (a * b) * c == a * (b * c));
    std::size_t i = static_cast<std::size_t>(uniform(0, 5));
    int si = (ch->odd(i) && is_odd(pa)) ? -1 : 1;
    t.check("Leibniz rule", partial(a * c, i) == partial(a, i) * c + Rational(si) * (a * partial(c, i)),
            [&] { return to_string(a) + " | " + to_string(c); });
    std::size_t j = static_cast<std::size_t>(uniform(0, 5));
    int sij = (ch->odd(i) && ch->odd(j)) ? -1 : 1;
    t.check("graded Schwarz rule", partial(partial(c, j), i) == Rational(sij) * partial(partial(c, i), j));
  }
}

void koszul_suite(Tally& t, const SuiteOptions& o) {
  for (std::size_t n = 1; n <= std::max<std::size_t>(o.n_max, 1); ++n) {
    const auto group = Permutation::all(n);
    const auto id = Permutation::identity(n);
    for (const auto& a : all_weights(n)) {
      t.check("sgn(alpha, id) = 1", koszul_sign(a, id) == 1);
      for (const auto& s1 : group) {
        t.check("agrees with explicit reordering", koszul_sign(a, s1) == bubble_sign(a, s1),
                [&] { return a.to_string() + " " + s1.to_string(); });
        for (const auto& s : group)
          t.check("sgn(a, s's) = sgn(a^s', s) sgn(a, s')",
                  koszul_sign(a, s1 * s) == koszul_sign(a.permuted(s1), s) * koszul_sign(a, s1),
                  [&] { return a.to_string() + " " + s1.to_string() + " " + s.to_string(); });
      }
    }
  }
}

void phi_suite(Tally& t, const SuiteOptions& o) {
  AtlasGenerator gen(o.seed);
  const std::size_t n = std::min<std::size_t>(3, std::max<std::size_t>(o.n_max, 2));
  const auto group = Permutation::all(n);
  for (std::size_t i = 0; i < pick(o, 100); ++i) {
    t.guard("Phi composition law", [&] {
      RandomAtlasOptions ro;
      ro.kind = AtlasKind::multivector(n);
      ro.nmanifold = i % 2 == 0;
      ro.odd_base = ro.nmanifold ? 0 : 1;
      ro.max_per_weight = 1 + static_cast<int>(i % 3);
      auto e = std::make_shared<const Atlas>(gen.atlas(ro));
      for (const auto& s1 : group) {
        auto phi1 = phi_iso(*e, s1);
        auto e1 = permute_slots(*e, s1);
        for (const auto& s : group)
          t.check("Phi composition law", phi_iso(*e, s1 * s) == compose(permute_morphism(phi1, s), phi_iso(e1, s)),
                  [&] { return s1.to_string() + " " + s.to_string(); });
      }
      auto [e2, iso] = gen.recoordinatize(e);
      auto f = compose(iso, gen.automorphism(e));
      auto pf = total_reversion(f);
      t.check("Pi maps morphisms to morphisms", check_morphism(pf));
      for (const auto& s : group) {
        auto lhs = compose(phi_iso(*e2, s), total_reversion(permute_morphism(f, s)));
        auto rhs = compose(permute_morphism(pf, s), phi_iso(*e, s));
        t.check("Phi naturality", lhs == rhs, [&] { return s.to_string(); });
      }
    });
  }
}

void flip_suite(Tally& t, const SuiteOptions& o) {
  AtlasGenerator gen(o.seed);
  const std::size_t k = std::max<std::size_t>(3, std::min<std::size_t>(o.n_max, 3));
  const auto group = Permutation::all(k);
  for (std::size_t i = 0; i < pick(o, 3); ++i) {
    t.guard("flip group law", [&] {
      auto it = iterated_tangent(random_manifold(gen, 1, 1), k);
      auto table = flip_action(it);
      const auto& a = it.atlas();
      t.check("T(3) atlas validates", validate_atlas(*a));
      for (const auto& s : group) {
        t.check("flips are bundle isomorphisms", check_morphism(action_morphism(table, s)));
        for (const auto& s2 : group)
          t.check("flip group law", table.at(s * s2) == compose_charts(table.at(s), table.at(s2)),
                  [&] { return s.to_string() + " " + s2.to_string(); });
      }
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = x + 1; y < k; ++y) {
          auto s = Permutation::transposition(k, x, y);
          t.check("kappa^2 = id", compose_charts(table.at(s), table.at(s)) == table.at(Permutation::identity(k)));
          auto core = core_bundle(*a, x, y);
          for (std::size_t c = 0; c < core.charts.size(); ++c)
            t.check("transpositions are the identity on cores",
                    restrict_map(table.at(s)[c], core.charts[c], core.charts[c]) ==
                        PolynomialMap::identity(core.charts[c]));
        }
    });
  }
}

void nice_suite(Tally& t, const SuiteOptions& o) {
  AtlasGenerator gen(o.seed);
  for (std::size_t i = 0; i < pick(o, 50); ++i) {
    t.guard("nice coordinates", [&] {
      const std::size_t k = (i % 2 == 0 || o.n_max < 3) ? 2 : 3;
      auto it = k == 2 ? iterated_tangent(random_manifold(gen, 1 + i % 2, i % 3 == 0 ? 0 : 1), 2)
                       : iterated_tangent(random_manifold(gen, 1, i % 4 == 1 ? 0 : 1), 3);
      auto [e2, iso] = gen.recoordinatize(it.atlas());
      auto moved = transport(flip_action(it), e2, iso);
      t.note("randomized action is not already nice", !check_nice(moved).ok());
      t.check("randomized action is symmetric", validate_action(moved));
      auto nice = nice_coordinates(moved);
      t.check("nice coordinates", check_nice(nice.action));
      t.check("nice atlas validates", validate_atlas(*nice.atlas));
      t.check("nice action validates", validate_action(nice.action));
      t.check("change of coordinates is a morphism", check_morphism(nice.to_nice));
      t.check("inverse change is a morphism", check_morphism(nice.from_nice));
      t.check("changes are mutually inverse", compose(nice.from_nice, nice.to_nice) == identity_morphism(e2) &&
                                                  compose(nice.to_nice, nice.from_nice) == identity_morphism(nice.atlas));
    });
  }
}

ActionTable twisted_swap() {
  auto u = make_chart("U", {coord("x", Parity::Even, {0, 0}), coord("y", Parity::Odd, {0, 1}),
                            coord("Y", Parity::Odd, {1, 0}), coord("z", Parity::Even, {1, 1})});
  Atlas a;
  a.kind = AtlasKind::multivector(2);
  a.nmanifold = true;
  a.charts = {u};
  auto v = [&](const char* n) { return Polynomial::coordinate(u, n); };
  PolynomialMap s(u, u, {v("x"), v("Y"), v("y"), v("z") + v("y") * v("Y") * v("x")});
  return generate_action(std::make_shared<const Atlas>(a), Flavor::Symmetric, {{s}});
}

void xi_suite(Tally& t, const SuiteOptions& o) {
  AtlasGenerator gen(o.seed);
  std::vector<ActionTable> fixtures{twisted_swap()};
  for (std::size_t i = 0; i < pick(o, 6); ++i) {
    const std::size_t k = 2 + i % std::max<std::size_t>(1, std::min<std::size_t>(o.n_max, 3) - 1);
    if (i % 3 == 2) {
      RandomAtlasOptions ro;
      ro.kind = AtlasKind::weighted(static_cast<int>(k));
      ro.nmanifold = true;
      ro.max_per_weight = 1;
      fixtures.push_back(polarize(std::make_shared<const Atlas>(gen.atlas(ro)), k).action);
    } else {
      fixtures.push_back(flip_action(iterated_tangent(random_manifold(gen, 1, i % 2), k)));
    }
  }
  for (const auto& f : fixtures) {
    t.guard("Xi output is skew", [&] {
      auto j = xi_functor(f);
      t.check("Xi output atlas validates", validate_atlas(*j.atlas));
      t.check("Xi output is skew", j.flavor == Flavor::Skew);
      auto r = validate_action(j);
      t.check("Xi group law", !r.has("group") && !r.has("structure"), [&] { return r.to_string(); });
      t.check("transpositions are -1 on cores", !r.has("core"), [&] { return r.to_string(); });
      t.check("J is a family of isomorphisms", r);
      if (f.atlas->nmanifold) {
        bool even = true;
        for (const auto& ch : j.atlas->charts)
          for (const auto& c : ch->coordinates()) even = even && c.parity == Parity::Even;
        t.check("[n]-vector inputs give purely even outputs", even);
      }
      auto back = xi_inverse(j);
      t.check("Xi is invertible", *back.atlas == *f.atlas && back.maps == f.maps && back.flavor == f.flavor);
    });
  }
}

// Two charts of a degree-k N-manifold glued by z' = z + xi1...xik.
AtlasPtr product_atlas(int k) {
  auto mk = [k](std::string n) {
    std::vector<CoordinateSymbol> c{coord("x", Parity::Even, {0})};
    for (int i = 1; i <= k; ++i) c.push_back(coord("xi" + std::to_string(i), Parity::Odd, {1}));
    c.push_back(coord("z", parity_of(k), {k}));
    return make_chart(n, c);
  };
  auto u = mk("U"), v = mk("V");
  auto prod = [k](const ChartPtr& ch) {
    Polynomial p = Polynomial::constant(ch, 1);
    for (int i = 1; i <= k; ++i) p = p * Polynomial::coordinate(ch, "xi" + std::to_string(i));
    return p;
  };
  std::vector<Polynomial> f, g;
  for (std::size_t i = 0; i + 1 < u->size(); ++i) {
    f.push_back(Polynomial::coordinate(u, i));
    g.push_back(Polynomial::coordinate(v, i));
  }
  f.push_back(Polynomial::coordinate(u, "z") + prod(u));
  g.push_back(Polynomial::coordinate(v, "z") - prod(v));
  Atlas a;
  a.kind = AtlasKind::weighted(k);
  a.nmanifold = true;
  a.charts = {u, v};
  a.transitions.push_back({0, 1, PolynomialMap(v, u, f), PolynomialMap(u, v, g)});
  return std::make_shared<const Atlas>(a);
}

void polar_suite(Tally& t, const SuiteOptions& o) {
  AtlasGenerator gen(o.seed);
  const int dmax = static_cast<int>(std::min<std::size_t>(3, std::max<std::size_t>(o.n_max, 1)));
  for (std::size_t i = 0; i < pick(o, 50); ++i) {
    t.guard("roundtrip isomorphism", [&] {
      RandomAtlasOptions ro;
      const int deg = 1 + static_cast<int>(i) % dmax;
      ro.kind = AtlasKind::weighted(deg);
      ro.odd_base = 1;
      ro.max_per_weight = deg == 3 ? 1 : 2;
      auto a = std::make_shared<const Atlas>(gen.atlas(ro));
      auto p = polarize(a, static_cast<std::size_t>(deg));
      t.check("polarization validates", validate_atlas(*p.atlas));
      t.check("polarization is symmetric", validate_action(p.action));
      auto d = diagonalize(p.action);
      t.check("diagonalization validates", validate_atlas(*d.atlas));
      auto iso = roundtrip_isomorphism(p, d, DiagScale::Factorial);
      t.check("roundtrip isomorphism", check_morphism(iso));
      BundleMorphism back{d.atlas, a, {}};
      for (const auto& cm : iso.maps) back.maps.push_back({cm.target_chart, cm.source_chart, invert_graded(cm.map)});
      t.check("roundtrip inverse", check_morphism(back));
      t.check("diag image is fixed by all flips", check_fixed(diag_embedding(p, DiagScale::Factorial), p.action));
      auto by_weight = diag_embedding(p, DiagScale::Weight);
      if (deg <= 2) {
        t.check("diag with |alpha| (degree <= 2)", check_weighted_morphism(by_weight));
        t.check("diag with |alpha| image is fixed (degree <= 2)", check_fixed(by_weight, p.action));
      } else {
        auto r = check_weighted_morphism(by_weight);
        t.note("diag with |alpha| is a morphism (degree 3)", r.ok(), [&] { return r.to_string(); });
      }
      auto f = gen.automorphism(a), g = gen.automorphism(a);
      auto pf = polarize_morphism(f, p, p);
      t.check("polarized morphisms intertwine", check_intertwines(pf, p.action, p.action));
      t.check("polarization is functorial", polarize_morphism(compose(g, f), p, p) ==
                                                compose(polarize_morphism(g, p, p), pf));
    });
  }
  if (dmax >= 3) {
    t.guard("roundtrip isomorphism", [&] {
      auto p = polarize(product_atlas(3), 3);
      auto d = diagonalize(p.action);
      t.check("roundtrip isomorphism", check_morphism(roundtrip_isomorphism(p, d, DiagScale::Factorial)));
      auto r = check_weighted_morphism(diag_embedding(p, DiagScale::Weight));
      t.note("diag with |alpha| is a morphism (degree 3)", r.ok(), [&] { return r.to_string(); });
    });
  }
}

void desuper_suite(Tally& t, const SuiteOptions& o) {
  AtlasGenerator gen(o.seed);
  for (std::size_t i = 0; i < pick(o, 20); ++i) {
    t.guard("desuperization is skew", [&] {
      const int deg = o.n_max >= 3 ? 2 + static_cast<int>(i % 2) : 2;
      RandomAtlasOptions ro;
      ro.kind = AtlasKind::weighted(deg);
      ro.nmanifold = true;
      ro.max_per_weight = 1;
      auto a = std::make_shared<const Atlas>(gen.atlas(ro));
      auto p = polarize(a, static_cast<std::size_t>(deg));
      auto l = xi_functor(p.action);
      bool even = true;
      for (const auto& ch : l.atlas->charts)
        for (const auto& c : ch->coordinates()) even = even && c.parity == Parity::Even;
      t.check("desuperization is purely even", even);
      t.check("desuperization validates", validate_atlas(*l.atlas));
      t.check("desuperization is skew", l.flavor == Flavor::Skew && validate_action(l).ok());
      auto f = gen.automorphism(a), g = gen.automorphism(a);
      auto lf = desuperize_morphism(f, p, p);
      t.check("desuperized morphisms are morphisms", check_morphism(lf));
      t.check("desuperized morphisms intertwine", check_intertwines(lf, l, l));
      t.check("desuperization preserves composition",
              desuperize_morphism(compose(g, f), p, p) == compose(desuperize_morphism(g, p, p), lf));
    });
  }
}

void tangent_suite(Tally& t, const SuiteOptions& o) {
  AtlasGenerator gen(o.seed);
  auto ch = make_chart("R", {coord("a", Parity::Even, {0}), coord("th", Parity::Odd, {0}),
                             coord("b", Parity::Even, {1}), coord("p", Parity::Odd, {1})});
  auto tch = tangent_chart(ch);
  auto field = [&](Parity par) {
    Derivation d(ch);
    for (std::size_t i = 0; i < ch->size(); ++i)
      if (gen.coin()) d.set_component(i, gen.homogeneous(ch, Weight({gen.uniform(0, 2)}), par + (*ch)[i].parity, 2, 2));
    return d;
  };
  for (std::size_t i = 0; i < pick(o, 100); ++i) {
    auto x = field(gen.coin() ? Parity::Odd : Parity::Even);
    auto y = field(gen.coin() ? Parity::Odd : Parity::Even);
    t.check("[d_T X, d_T Y] = d_T [X, Y]",
            bracket(tangent_lift(x, tch), tangent_lift(y, tch)) == tangent_lift(bracket(x, y), tch));
  }
  for (std::size_t i = 0; i < pick(o, 100); ++i) {
    Parity par = gen.coin() ? Parity::Odd : Parity::Even;
    auto f = gen.homogeneous(ch, Weight({gen.uniform(0, 3)}), par, 3, 3);
    std::size_t a = static_cast<std::size_t>(gen.uniform(0, 3)), b = static_cast<std::size_t>(gen.uniform(0, 3));
    int s = (ch->odd(a) && ch->odd(b)) ? -1 : 1;
    t.check("graded Schwarz rule for partials",
            partial(partial(f, b), a) == Rational(s) * partial(partial(f, a), b));
  }
  for (std::size_t i = 0; i < pick(o, 100) / 10 + 1; ++i) {
    t.guard("Schwarz symmetry of T(2)", [&] {
      RandomAtlasOptions ro;
      ro.kind = AtlasKind::weighted(2);
      ro.odd_base = 1;
      auto it = iterated_tangent(gen.atlas(ro), 2);
      const auto& t2 = *it.atlas();
      auto kappa = adjacent_flip(it, 0);
      for (const auto& tr : t2.transitions)
        t.check("Schwarz symmetry of T(2)",
                compose(kappa[tr.to], tr.forward) == compose(tr.forward, kappa[tr.from]));
      t.check("T(2) validates", validate_atlas(t2));
    });
  }
}

void dsl_suite(Tally& t, const SuiteOptions& o) {
  AtlasGenerator gen(o.seed);
  for (std::size_t i = 0; i < pick(o, 20); ++i) {
    t.guard("emit o parse o emit = emit", [&] {
      RandomAtlasOptions ro;
      ro.kind = i % 2 ? AtlasKind::multivector(2) : AtlasKind::weighted(2);
      ro.odd_base = 1;
      ro.charts = 2 + i % 2;
      Document doc{std::make_shared<const Atlas>(gen.atlas(ro)), std::nullopt};
      auto text = emit_document(doc);
      auto back = parse_document(text);
      t.check("parse o emit = id", *back.atlas == *doc.atlas);
      t.check("emit o parse o emit = emit", emit_document(back) == text);
      t.check("JSON roundtrip", *from_json(to_json(doc)).atlas == *doc.atlas);
    });
  }
}

using SuiteFn = void (*)(Tally&, const SuiteOptions&);
const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"algebra", algebra_suite}, {"koszul", koszul_suite}, {"tangent", tangent_suite}, {"flip", flip_suite},
      {"phi", phi_suite},         {"nice", nice_suite},     {"xi", xi_suite},           {"polar", polar_suite},
      {"desuper", desuper_suite}, {"dsl", dsl_suite}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      SuiteReport r{name, {}, 0};
      Tally t(r);
      auto start = std::chrono::steady_clock::now();
      fn(t, options);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace gsa
