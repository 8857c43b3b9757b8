#include "gsa/polar.hpp"

#include <set>

#include "gsa/parity.hpp"

namespace gsa {

namespace {

std::vector<int> vector_part(const Weight& w, std::size_t n) {
  std::vector<int> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(w[k]);
  return out;
}

int ones(const std::vector<int>& v) { return static_cast<int>(std::count(v.begin(), v.end(), 1)); }

bool recompute_nmanifold(const Atlas& a) {
  return std::all_of(a.charts.begin(), a.charts.end(),
                     [&](const ChartPtr& ch) { return validate_chart(a.kind, true, *ch).ok(); });
}

Rational factorial(int k) { return k <= 1 ? Rational(1) : Rational(k) * factorial(k - 1); }

std::string strip_index(const std::string& name) { return name.substr(0, name.find('[')); }

}  // namespace

Polarization polarize(const AtlasPtr& source, std::size_t n) {
  const Atlas& a = *source;
  if (a.kind.vector_slots != 0 || !a.kind.degree)
    throw std::invalid_argument("polarize: source must be N-weighted, got kind " + a.kind.to_string());
  if (n == 0 || static_cast<std::size_t>(*a.kind.degree) > n)
    throw std::invalid_argument("polarize: degree " + std::to_string(*a.kind.degree) + " exceeds n = " +
                                std::to_string(n));
  auto report = validate_atlas(a);
  if (!report.ok()) throw ValidationError(report);

  Polarization p{source, iterated_tangent(a, n), nullptr, {}, {}};
  const Atlas& t = *p.tangent.atlas();
  auto keep = [n](const CoordinateSymbol& c) {
    const int w = c.weight[c.weight.size() - 1];
    return ones(vector_part(c.weight, n)) == w;
  };
  Atlas out = restrict_atlas(t, {keep, [n](const CoordinateSymbol& c) { return Weight(vector_part(c.weight, n)); },
                                 AtlasKind::multivector(n)});
  out.nmanifold = recompute_nmanifold(out);
  p.atlas = std::make_shared<const Atlas>(std::move(out));

  for (std::size_t c = 0; c < t.charts.size(); ++c) {
    const Chart& tc = *t.charts[c];
    const std::size_t base_size = a.charts[c]->size();
    std::vector<std::pair<std::size_t, Weight>> o;
    for (std::size_t i = 0; i < tc.size(); ++i)
      if (keep(tc[i])) o.emplace_back(i % base_size, Weight(vector_part(tc[i].weight, n)));
    p.origin.push_back(std::move(o));
  }

  auto flips = flip_action(p.tangent);
  p.action = {p.atlas, Flavor::Symmetric, {}};
  for (const auto& [s, maps] : flips.maps) {
    std::vector<PolynomialMap> r;
    for (std::size_t c = 0; c < maps.size(); ++c)
      r.push_back(restrict_map(maps[c], p.atlas->charts[c], p.atlas->charts[c]));
    p.action.maps.emplace(s, std::move(r));
  }
  return p;
}

BundleMorphism polarize_morphism(const BundleMorphism& f, const Polarization& p1, const Polarization& p2) {
  if (!(*f.source == *p1.source) || !(*f.target == *p2.source))
    throw std::invalid_argument("polarize_morphism: morphism does not match the polarized atlases");
  if (p1.tangent.k() != p2.tangent.k()) throw std::invalid_argument("polarize_morphism: polarization orders differ");
  BundleMorphism g = f;
  for (std::size_t l = 1; l <= p1.tangent.k(); ++l)
    g = tangent_of_morphism(g, p1.tangent.levels[l], p2.tangent.levels[l]);
  BundleMorphism out{p1.atlas, p2.atlas, {}};
  for (const auto& cm : g.maps)
    out.maps.push_back({cm.source_chart, cm.target_chart,
                        restrict_map(cm.map, p2.atlas->charts[cm.target_chart], p1.atlas->charts[cm.source_chart])});
  return out;
}

Diagonalization diagonalize(const ActionTable& table) {
  if (table.flavor != Flavor::Symmetric) throw std::invalid_argument("diagonalize: action must be symmetric");
  const std::size_t n = table.degree();
  if (table.atlas->kind.degree) throw std::invalid_argument("diagonalize: expected an n-vector atlas");
  Diagonalization d{nullptr, nice_coordinates(table), {}, {}};
  const Atlas& nice = *d.nice.atlas;

  auto representative = [n](int m) {
    std::vector<int> e(n, 0);
    std::fill(e.end() - m, e.end(), 1);
    return Weight(e);
  };
  auto rank_of = [](const Chart& ch, std::size_t pos) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < pos; ++i)
      if (ch[i].weight == ch[pos].weight && ch[i].parity == ch[pos].parity) ++r;
    return r;
  };

  Atlas out;
  out.kind = AtlasKind::weighted(static_cast<int>(n));
  out.cocycles = nice.cocycles;
  for (const auto& ch : nice.charts) {
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < ch->size(); ++p) {
      const auto& w = (*ch)[p].weight;
      if (w.is_zero() || w == representative(w.total())) kept.push_back(p);
    }
    std::multiset<std::string> stems;
    for (auto p : kept) stems.insert(strip_index((*ch)[p].name));
    std::vector<CoordinateSymbol> coords;
    for (auto p : kept) {
      const auto& z = (*ch)[p];
      auto stem = strip_index(z.name);
      coords.push_back({stems.count(stem) == 1 ? stem : z.name, z.parity, Weight({z.weight.total()})});
    }
    auto collapsed = make_chart(ch->name(), std::move(coords));

    std::vector<Polynomial> proj;
    for (auto p : kept) proj.push_back(Polynomial::coordinate(ch, p));
    std::vector<Polynomial> emb;
    for (std::size_t p = 0; p < ch->size(); ++p) {
      const auto& z = (*ch)[p];
      const auto rep = representative(z.weight.total());
      const std::size_t rank = rank_of(*ch, p);
      std::size_t target = kept.size();
      for (std::size_t k = 0, seen = 0; k < kept.size(); ++k) {
        const auto& y = (*ch)[kept[k]];
        if (y.weight == rep && y.parity == z.parity && seen++ == rank) {
          target = k;
          break;
        }
      }
      if (target == kept.size())
        throw std::invalid_argument("diagonalize: no representative for " + z.name + " on chart " + ch->name());
      emb.push_back(Polynomial::coordinate(collapsed, target));
    }
    d.project.emplace_back(collapsed, ch, std::move(proj));
    d.embed.emplace_back(ch, collapsed, std::move(emb));
    out.charts.push_back(collapsed);
  }
  for (const auto& t : nice.transitions)
    out.transitions.push_back({t.from, t.to, compose(d.project[t.to], compose(t.forward, d.embed[t.from])),
                               compose(d.project[t.from], compose(t.inverse, d.embed[t.to]))});
  out.nmanifold = recompute_nmanifold(out);
  d.atlas = std::make_shared<const Atlas>(std::move(out));
  return d;
}

BundleMorphism diag_embedding(const Polarization& p, DiagScale scale) {
  BundleMorphism m{p.source, p.atlas, {}};
  for (std::size_t c = 0; c < p.atlas->charts.size(); ++c) {
    const auto& src = p.source->charts[c];
    std::vector<Polynomial> imgs;
    for (const auto& [idx, alpha] : p.origin[c]) {
      const int w = (*src)[idx].weight[0];
      Rational k = w == 0 ? Rational(1) : scale == DiagScale::Weight ? Rational(alpha.total()) : factorial(w);
      imgs.push_back(Polynomial::coordinate(src, idx) * k);
    }
    m.maps.push_back({c, c, PolynomialMap(p.atlas->charts[c], src, std::move(imgs))});
  }
  return m;
}

BundleMorphism roundtrip_isomorphism(const Polarization& p, const Diagonalization& d, DiagScale scale) {
  auto diag = diag_embedding(p, scale);
  BundleMorphism m{p.source, d.atlas, {}};
  for (const auto& cm : diag.maps) {
    const auto& to_nice = d.nice.to_nice.find(cm.target_chart, cm.target_chart)->map;
    auto map = compose(d.project[cm.target_chart], compose(to_nice, cm.map.relabeled(to_nice.over(), cm.map.over())));
    m.maps.push_back({cm.source_chart, cm.target_chart, map});
  }
  return m;
}

Atlas total_weighting(const Atlas& a) {
  Atlas out = a;
  out.kind = AtlasKind::weighted(static_cast<int>(a.kind.vector_slots) + a.kind.degree.value_or(0));
  for (auto& ch : out.charts) {
    auto coords = ch->coordinates();
    for (auto& c : coords) c.weight = Weight({c.weight.total()});
    ch = make_chart(ch->name(), std::move(coords));
  }
  for (auto& t : out.transitions) {
    t.forward = t.forward.relabeled(out.charts[t.to], out.charts[t.from]);
    t.inverse = t.inverse.relabeled(out.charts[t.from], out.charts[t.to]);
  }
  out.nmanifold = recompute_nmanifold(out);
  return out;
}

ValidationReport check_weighted_morphism(const BundleMorphism& m) {
  auto s = std::make_shared<const Atlas>(total_weighting(*m.source));
  auto t = std::make_shared<const Atlas>(total_weighting(*m.target));
  BundleMorphism w{s, t, {}};
  for (const auto& cm : m.maps)
    w.maps.push_back({cm.source_chart, cm.target_chart,
                      cm.map.relabeled(t->charts[cm.target_chart], s->charts[cm.source_chart])});
  return check_morphism(w);
}

ValidationReport check_fixed(const BundleMorphism& m, const ActionTable& table) {
  ValidationReport r;
  for (const auto& [s, maps] : table.maps)
    for (const auto& cm : m.maps)
      if (compose(maps[cm.target_chart], cm.map) != cm.map)
        r.fail("fixed", "I^" + s.to_string() + " moves the image of chart " +
                            m.source->charts[cm.source_chart]->name());
  return r;
}

ActionTable desuperize(const AtlasPtr& source, std::size_t n) { return xi_functor(polarize(source, n).action); }

BundleMorphism desuperize_morphism(const BundleMorphism& f, const Polarization& p1, const Polarization& p2) {
  return total_reversion(polarize_morphism(f, p1, p2));
}

}  // namespace gsa
