#include "gsa/parity.hpp"

#include <algorithm>

namespace gsa {

int koszul_sign(const Weight& alpha, const Permutation& sigma) {
  if (alpha.size() < sigma.size()) throw std::invalid_argument("koszul_sign: size mismatch");
  int sign = 1;
  const std::size_t n = sigma.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (alpha[sigma(i)] == 1 && alpha[sigma(j)] == 1 && sigma(i) > sigma(j)) sign = -sign;
  return sign;
}

std::string reversed_name(std::string_view name) {
  constexpr std::string_view tag = "_pi";
  auto open = name.find('[');
  std::string_view stem = name.substr(0, open);
  std::string_view rest = open == std::string_view::npos ? std::string_view{} : name.substr(open);
  if (stem.size() > tag.size() && stem.substr(stem.size() - tag.size()) == tag)
    return std::string(stem.substr(0, stem.size() - tag.size())) + std::string(rest);
  return std::string(stem) + std::string(tag) + std::string(rest);
}

namespace {

void require_slot(const AtlasKind& kind, std::size_t slot) {
  if (slot >= kind.vector_slots)
    throw std::invalid_argument("parity reversion: slot " + std::to_string(slot + 1) +
                                " out of range for kind " + kind.to_string());
}

ChartPtr rename_chart(const ChartPtr& chart, std::size_t slots) {
  auto coords = chart->coordinates();
  for (auto& c : coords) {
    bool carries = false;
    for (std::size_t k = 0; k < slots; ++k) carries = carries || c.weight[k] != 0;
    if (carries) c.name = reversed_name(c.name);
  }
  return make_chart(chart->name(), std::move(coords));
}

Atlas rename_atlas(const Atlas& a) {
  Atlas out = a;
  for (auto& ch : out.charts) ch = rename_chart(ch, a.kind.vector_slots);
  for (auto& t : out.transitions) {
    t.forward = t.forward.relabeled(out.charts[t.to], out.charts[t.from]);
    t.inverse = t.inverse.relabeled(out.charts[t.from], out.charts[t.to]);
  }
  return out;
}

BundleMorphism relabel_morphism(const BundleMorphism& m, const AtlasPtr& source, const AtlasPtr& target) {
  BundleMorphism out{source, target, {}};
  for (const auto& cm : m.maps)
    out.maps.push_back({cm.source_chart, cm.target_chart,
                        cm.map.relabeled(target->charts[cm.target_chart], source->charts[cm.source_chart])});
  return out;
}

}  // namespace

ChartPtr reverse_chart(const ChartPtr& chart, std::size_t slot) {
  auto coords = chart->coordinates();
  for (auto& c : coords)
    if (c.weight[slot] == 1) c.parity = c.parity + Parity::Odd;
  return make_chart(chart->name(), std::move(coords));
}

PolynomialMap reverse_map(const PolynomialMap& m, std::size_t slot, const ChartPtr& new_vars,
                          const ChartPtr& new_over) {
  const Chart& old = *m.over();
  const Chart& fresh = *new_over;
  if (old.size() != fresh.size()) throw ChartMismatchError("reverse_map: layouts differ");
  std::vector<Polynomial> imgs;
  for (const auto& img : m.images()) {
    Polynomial out(new_over);
    for (const auto& [f, c] : img.terms()) {
      std::size_t carriers = 0;
      for (auto i : f) carriers += old[i].weight[slot];
      if (carriers == 0) {
        out.add_term(f, c);
        continue;
      }
      if (carriers != 1)
        throw std::logic_error("reverse_map: monomial carries slot " + std::to_string(slot + 1) + " twice");
      // (g, other fiber factors, base factors)
      Factors seq;
      for (auto i : f)
        if (old[i].weight[slot] == 1) seq.push_back(i);
      for (auto i : f)
        if (old[i].weight[slot] != 1 && !old[i].weight.is_zero()) seq.push_back(i);
      for (auto i : f)
        if (old[i].weight.is_zero()) seq.push_back(i);
      Factors probe = seq;
      int s_old = sort_with_sign(probe, [&](std::uint32_t i) { return old.odd(i); });
      int s_new = sort_with_sign(seq, [&](std::uint32_t i) { return fresh.odd(i); });
      if (s_old == 0 || s_new == 0) throw std::logic_error("reverse_map: degenerate monomial");
      out.add_term(seq, c * Rational(s_old * s_new));
    }
    imgs.push_back(std::move(out));
  }
  return PolynomialMap(new_vars, new_over, std::move(imgs));
}

Atlas reverse_parity(const Atlas& a, std::size_t slot) {
  require_slot(a.kind, slot);
  Atlas out;
  out.kind = a.kind;
  out.cocycles = a.cocycles;
  for (const auto& ch : a.charts) out.charts.push_back(reverse_chart(ch, slot));
  out.nmanifold = std::all_of(out.charts.begin(), out.charts.end(), [&](const ChartPtr& ch) {
    return validate_chart(out.kind, true, *ch).ok();
  });
  for (const auto& t : a.transitions) {
    const auto& u = out.charts[t.from];
    const auto& v = out.charts[t.to];
    out.transitions.push_back(
        {t.from, t.to, reverse_map(t.forward, slot, v, u), reverse_map(t.inverse, slot, u, v)});
  }
  return out;
}

BundleMorphism reverse_parity(const BundleMorphism& m, std::size_t slot, const AtlasPtr& source,
                              const AtlasPtr& target) {
  require_slot(m.source->kind, slot);
  BundleMorphism out{source, target, {}};
  for (const auto& cm : m.maps)
    out.maps.push_back({cm.source_chart, cm.target_chart,
                        reverse_map(cm.map, slot, target->charts[cm.target_chart],
                                    source->charts[cm.source_chart])});
  return out;
}

Atlas total_reversion(const Atlas& a, const Permutation& order) {
  if (order.size() != a.kind.vector_slots)
    throw std::invalid_argument("total_reversion: order has wrong size");
  Atlas cur = a;
  for (std::size_t k = order.size(); k-- > 0;) cur = reverse_parity(cur, order(k));
  return rename_atlas(cur);
}

Atlas total_reversion(const Atlas& a) {
  return total_reversion(a, Permutation::identity(a.kind.vector_slots));
}

BundleMorphism total_reversion(const BundleMorphism& m, const Permutation& order) {
  if (order.size() != m.source->kind.vector_slots)
    throw std::invalid_argument("total_reversion: order has wrong size");
  BundleMorphism cur = m;
  for (std::size_t k = order.size(); k-- > 0;) {
    auto s = std::make_shared<const Atlas>(reverse_parity(*cur.source, order(k)));
    auto t = cur.source == cur.target ? s : std::make_shared<const Atlas>(reverse_parity(*cur.target, order(k)));
    cur = reverse_parity(cur, order(k), s, t);
  }
  auto s = std::make_shared<const Atlas>(rename_atlas(*cur.source));
  auto t = cur.source == cur.target ? s : std::make_shared<const Atlas>(rename_atlas(*cur.target));
  return relabel_morphism(cur, s, t);
}

BundleMorphism total_reversion(const BundleMorphism& m) {
  return total_reversion(m, Permutation::identity(m.source->kind.vector_slots));
}

BundleMorphism permute_morphism(const BundleMorphism& m, const Permutation& sigma) {
  auto s = std::make_shared<const Atlas>(permute_slots(*m.source, sigma));
  auto t = m.source == m.target ? s : std::make_shared<const Atlas>(permute_slots(*m.target, sigma));
  return relabel_morphism(m, s, t);
}

BundleMorphism phi_iso(const Atlas& a, const Permutation& sigma) {
  auto source = std::make_shared<const Atlas>(total_reversion(permute_slots(a, sigma)));
  auto target = std::make_shared<const Atlas>(permute_slots(total_reversion(a), sigma));
  BundleMorphism m{source, target, {}};
  for (std::size_t c = 0; c < a.charts.size(); ++c) {
    const auto& orig = *a.charts[c];
    const auto& tc = target->charts[c];
    const auto& sc = source->charts[c];
    std::vector<Polynomial> imgs;
    for (std::size_t i = 0; i < orig.size(); ++i)
      imgs.push_back(Polynomial::coordinate(sc, i) * Rational(koszul_sign(orig[i].weight, sigma)));
    m.maps.push_back({c, c, PolynomialMap(tc, sc, std::move(imgs))});
  }
  return m;
}

}  // namespace gsa
