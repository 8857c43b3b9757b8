#include "gsa/tangent.hpp"

namespace gsa {

std::string tangent_name(std::string_view name, int bit) {
  const char b = bit ? '1' : '0';
  auto open = name.find('[');
  if (open != std::string_view::npos && name.back() == ']')
    return std::string(name.substr(0, open + 1)) + b + ',' + std::string(name.substr(open + 1));
  return std::string(name) + '[' + b + ']';
}

ChartPtr tangent_chart(const ChartPtr& chart) {
  std::vector<CoordinateSymbol> coords;
  coords.reserve(2 * chart->size());
  for (int bit : {0, 1})
    for (const auto& c : chart->coordinates()) {
      std::vector<int> w{bit};
      w.insert(w.end(), c.weight.entries().begin(), c.weight.entries().end());
      coords.push_back({tangent_name(c.name, bit), c.parity, Weight(std::move(w))});
    }
  return make_chart(chart->name(), std::move(coords));
}

namespace {

void require_tangent_of(const Chart& base, const Chart& tchart) {
  if (tchart.size() != 2 * base.size())
    throw ChartMismatchError("chart " + tchart.name() + " is not a tangent chart of " + base.name());
}

}  // namespace

Polynomial lift_to_tangent(const Polynomial& p, const ChartPtr& tchart) {
  require_tangent_of(*p.chart(), *tchart);
  Polynomial out(tchart);
  for (const auto& [f, c] : p.terms()) out.add_term(f, c);
  return out;
}

Polynomial total_differential(const Polynomial& p, const ChartPtr& tchart) {
  require_tangent_of(*p.chart(), *tchart);
  const std::size_t m = p.chart()->size();
  Polynomial out(tchart);
  for (std::size_t b = 0; b < m; ++b) {
    auto d = partial(p, b);
    if (d.is_zero()) continue;
    out += Polynomial::coordinate(tchart, m + b) * lift_to_tangent(d, tchart);
  }
  return out;
}

PolynomialMap tangent_of_map(const PolynomialMap& m, const ChartPtr& tvars, const ChartPtr& tover) {
  require_tangent_of(*m.vars(), *tvars);
  std::vector<Polynomial> imgs;
  imgs.reserve(tvars->size());
  for (const auto& f : m.images()) imgs.push_back(lift_to_tangent(f, tover));
  for (const auto& f : m.images()) imgs.push_back(total_differential(f, tover));
  return PolynomialMap(tvars, tover, std::move(imgs));
}

Atlas tangent_of_atlas(const Atlas& a) {
  Atlas out;
  out.kind = {a.kind.vector_slots + 1, a.kind.degree};
  out.nmanifold = a.nmanifold && a.kind.degree.has_value();
  out.cocycles = a.cocycles;
  for (const auto& ch : a.charts) out.charts.push_back(tangent_chart(ch));
  for (const auto& t : a.transitions) {
    const auto& u = out.charts[t.from];
    const auto& v = out.charts[t.to];
    out.transitions.push_back(
        {t.from, t.to, tangent_of_map(t.forward, v, u), tangent_of_map(t.inverse, u, v)});
  }
  return out;
}

BundleMorphism tangent_of_morphism(const BundleMorphism& m, const AtlasPtr& tsource,
                                   const AtlasPtr& ttarget) {
  BundleMorphism out{tsource, ttarget, {}};
  for (const auto& cm : m.maps)
    out.maps.push_back({cm.source_chart, cm.target_chart,
                        tangent_of_map(cm.map, ttarget->charts[cm.target_chart],
                                       tsource->charts[cm.source_chart])});
  return out;
}

Derivation tangent_lift(const Derivation& y, const ChartPtr& tchart) {
  require_tangent_of(*y.chart(), *tchart);
  const std::size_t m = y.chart()->size();
  Derivation out(tchart);
  for (std::size_t a = 0; a < m; ++a) {
    const auto& f = y.component(a);
    if (f.is_zero()) continue;
    out.set_component(a, lift_to_tangent(f, tchart));
    out.set_component(m + a, total_differential(f, tchart));
  }
  return out;
}

IteratedTangent iterated_tangent(const Atlas& a, std::size_t k) {
  if (k == 0) throw std::invalid_argument("iterated_tangent: k must be at least 1");
  IteratedTangent it;
  it.levels.push_back(std::make_shared<const Atlas>(a));
  for (std::size_t i = 0; i < k; ++i)
    it.levels.push_back(std::make_shared<const Atlas>(tangent_of_atlas(*it.levels.back())));
  return it;
}

PolynomialMap canonical_flip(const ChartPtr& t2chart) {
  if (t2chart->size() % 4 != 0) throw ChartMismatchError("canonical_flip: not a second tangent chart");
  const std::size_t m = t2chart->size() / 4;
  std::vector<Polynomial> imgs;
  for (std::size_t i = 0; i < t2chart->size(); ++i) {
    std::size_t block = i / m, j = i;
    if (block == 1) j = i + m;
    if (block == 2) j = i - m;
    imgs.push_back(Polynomial::coordinate(t2chart, j));
  }
  return PolynomialMap(t2chart, t2chart, std::move(imgs));
}

std::vector<PolynomialMap> adjacent_flip(const IteratedTangent& it, std::size_t i) {
  const std::size_t k = it.k();
  if (k < 2 || i + 1 >= k) throw std::out_of_range("adjacent_flip: slot out of range");
  const std::size_t level = k - i;
  std::vector<PolynomialMap> out;
  for (std::size_t c = 0; c < it.atlas()->charts.size(); ++c) {
    auto map = canonical_flip(it.levels[level]->charts[c]);
    for (std::size_t l = level + 1; l <= k; ++l) {
      const auto& ch = it.levels[l]->charts[c];
      map = tangent_of_map(map, ch, ch);
    }
    out.push_back(std::move(map));
  }
  return out;
}

ActionTable flip_action(const IteratedTangent& it) {
  std::vector<std::vector<PolynomialMap>> gens;
  for (std::size_t i = 0; i + 1 < it.k(); ++i) gens.push_back(adjacent_flip(it, i));
  return generate_action(it.atlas(), Flavor::Symmetric, gens);
}

}  // namespace gsa
