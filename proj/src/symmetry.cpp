#include "gsa/symmetry.hpp"

#include <algorithm>

#include "gsa/parity.hpp"

namespace gsa {

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<PolynomialMap> identity_maps(const Atlas& a) {
  std::vector<PolynomialMap> out;
  for (const auto& ch : a.charts) out.push_back(PolynomialMap::identity(ch));
  return out;
}

// Weight of a coordinate with its vector part replaced by `bits` (trailing entry kept).
Weight with_vector_part(const Weight& w, const std::vector<int>& bits) {
  std::vector<int> e = bits;
  for (std::size_t k = bits.size(); k < w.size(); ++k) e.push_back(w[k]);
  return Weight(e);
}

// Position of the rank-th coordinate with the given weight and parity.
std::optional<std::size_t> find_ranked(const Chart& ch, const Weight& w, Parity p, std::size_t rank) {
  for (std::size_t i = 0; i < ch.size(); ++i)
    if (ch[i].weight == w && ch[i].parity == p && rank-- == 0) return i;
  return std::nullopt;
}

std::size_t rank_of(const Chart& ch, std::size_t pos) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < pos; ++i)
    if (ch[i].weight == ch[pos].weight && ch[i].parity == ch[pos].parity) ++r;
  return r;
}

Flavor opposite(Flavor f) { return f == Flavor::Symmetric ? Flavor::Skew : Flavor::Symmetric; }

}  // namespace

ValidationReport validate_action(const ActionTable& table) {
  ValidationReport r;
  const Atlas& a = *table.atlas;
  const std::size_t n = table.degree();
  const auto group = Permutation::all(n);
  for (const auto& s : group) {
    auto it = table.maps.find(s);
    if (it == table.maps.end()) {
      r.fail("structure", "missing entry for " + s.to_string());
      continue;
    }
    if (it->second.size() != a.charts.size()) {
      r.fail("structure", s.to_string() + ": expected one map per chart");
      continue;
    }
    for (std::size_t c = 0; c < a.charts.size(); ++c)
      if (!same_chart(it->second[c].vars(), a.charts[c]) || !same_chart(it->second[c].over(), a.charts[c]))
        r.fail("structure", s.to_string() + ": map on chart " + a.charts[c]->name() + " has the wrong layout");
  }
  if (table.maps.size() != group.size()) r.fail("structure", "entries outside S_n");
  if (!r.ok()) return r;

  if (table.at(Permutation::identity(n)) != identity_maps(a)) r.fail("group", "identity does not act trivially");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto si = Permutation::transposition(n, i, i + 1);
    for (const auto& s : group)
      if (table.at(si * s) != compose_charts(table.at(si), table.at(s)))
        r.fail("group", "I^(s" + std::to_string(i + 1) + " " + s.to_string() + ") != I^s" +
                            std::to_string(i + 1) + " o I^" + s.to_string());
  }

  // With the group law in place, the generators determine everything else.
  std::vector<Permutation> checked;
  if (r.ok() && n > 3)
    for (std::size_t i = 0; i + 1 < n; ++i) checked.push_back(Permutation::transposition(n, i, i + 1));
  else
    checked = group;
  for (const auto& s : checked) r.merge(check_morphism(action_morphism(table, s)), "I^" + s.to_string() + ": ");

  const Rational fiber_sign = table.flavor == Flavor::Symmetric ? 1 : -1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto core = core_bundle(a, i, j);
      const auto& maps = table.at(Permutation::transposition(n, i, j));
      for (std::size_t c = 0; c < a.charts.size(); ++c) {
        const auto& ch = core.charts[c];
        auto restricted = restrict_map(maps[c], ch, ch);
        std::vector<Polynomial> want;
        for (std::size_t k = 0; k < ch->size(); ++k)
          want.push_back(Polynomial::coordinate(ch, k) * ((*ch)[k].weight[0] == 1 ? fiber_sign : Rational(1)));
        if (restricted != PolynomialMap(ch, ch, want))
          r.fail("core", "transposition (" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ") on chart " +
                             ch->name() + " is not " +
                             (table.flavor == Flavor::Symmetric ? "the identity" : "-1 on the fibers") +
                             " of the core");
      }
    }
  return r;
}

ValidationReport check_nice(const ActionTable& table) {
  ValidationReport r;
  const Atlas& a = *table.atlas;
  for (const auto& [s, maps] : table.maps)
    for (std::size_t c = 0; c < a.charts.size(); ++c) {
      const auto& ch = a.charts[c];
      for (std::size_t i = 0; i < ch->size(); ++i) {
        const auto& z = (*ch)[i];
        auto j = find_ranked(*ch, z.weight.permuted(s), z.parity, rank_of(*ch, i));
        Rational sign = table.flavor == Flavor::Skew ? koszul_sign(z.weight, s) : 1;
        if (!j || maps[c].image(i) != Polynomial::coordinate(ch, *j) * sign)
          r.fail("nice", z.name + " o I^" + s.to_string() + " on chart " + ch->name() + " is " +
                             to_string(maps[c].image(i)));
      }
    }
  return r;
}

NiceCoordinates nice_coordinates(const ActionTable& table) {
  if (table.flavor != Flavor::Symmetric) throw std::invalid_argument("nice_coordinates: action must be symmetric");
  const Atlas& a = *table.atlas;
  const std::size_t n = table.degree();
  const auto group = Permutation::all(n);

  std::vector<PolynomialMap> fwd, inv;
  std::vector<ChartPtr> charts;
  for (std::size_t c = 0; c < a.charts.size(); ++c) {
    const auto& ch = a.charts[c];
    auto pullback = [&](const Polynomial& p, const Permutation& s) { return substitute(p, table.at(s)[c]); };
    std::map<std::size_t, Polynomial> zbeta;
    std::vector<Polynomial> images;
    for (std::size_t p = 0; p < ch->size(); ++p) {
      const auto& y = (*ch)[p];
      if (y.weight.is_zero()) {
        images.push_back(Polynomial::coordinate(ch, p));
        continue;
      }
      std::vector<int> alpha_bits(n), beta_bits(n, 0);
      std::size_t m = 0;
      for (std::size_t k = 0; k < n; ++k) m += (alpha_bits[k] = y.weight[k]);
      std::fill(beta_bits.begin(), beta_bits.begin() + m, 1);
      const Weight beta = with_vector_part(y.weight, beta_bits);
      auto src = find_ranked(*ch, beta, y.parity, rank_of(*ch, p));
      if (!src)
        throw std::invalid_argument("nice_coordinates: chart " + ch->name() + " lacks a coordinate of weight " +
                                    beta.to_string() + " matching " + y.name);
      auto zb = zbeta.find(*src);
      if (zb == zbeta.end()) {
        Polynomial acc(ch);
        std::size_t count = 0;
        for (const auto& s : group)
          if (beta.permuted(s) == beta) {
            acc += table.at(s)[c].image(*src);
            ++count;
          }
        zb = zbeta.emplace(*src, acc * Rational(1, static_cast<long>(count))).first;
      }
      Polynomial z(ch);
      for (const auto& s : group)
        if (beta.permuted(s) == y.weight) z += pullback(zb->second, s);
      z *= Rational(1, static_cast<long>(factorial(m) * factorial(n - m)));
      images.push_back(std::move(z));
    }
    auto fresh = make_chart(ch->name(), ch->coordinates());
    PolynomialMap f(fresh, ch, std::move(images));
    inv.push_back(invert_graded(f));
    fwd.push_back(std::move(f));
    charts.push_back(fresh);
  }

  Atlas out;
  out.kind = a.kind;
  out.nmanifold = a.nmanifold;
  out.cocycles = a.cocycles;
  out.charts = charts;
  for (const auto& t : a.transitions)
    out.transitions.push_back({t.from, t.to, compose(fwd[t.to], compose(t.forward, inv[t.from])),
                               compose(fwd[t.from], compose(t.inverse, inv[t.to]))});
  auto atlas = std::make_shared<const Atlas>(std::move(out));

  NiceCoordinates res{atlas, {atlas, table.flavor, {}}, {table.atlas, atlas, {}}, {atlas, table.atlas, {}}};
  for (const auto& [s, maps] : table.maps) {
    std::vector<PolynomialMap> conj;
    for (std::size_t c = 0; c < maps.size(); ++c) conj.push_back(compose(fwd[c], compose(maps[c], inv[c])));
    res.action.maps.emplace(s, std::move(conj));
  }
  for (std::size_t c = 0; c < charts.size(); ++c) {
    res.to_nice.maps.push_back({c, c, fwd[c]});
    res.from_nice.maps.push_back({c, c, inv[c]});
  }
  return res;
}

ActionTable xi_functor(const ActionTable& table) {
  auto pi = std::make_shared<const Atlas>(total_reversion(*table.atlas));
  ActionTable out{pi, opposite(table.flavor), {}};
  for (const auto& [s, maps] : table.maps) {
    auto j = compose(phi_iso(*table.atlas, s), total_reversion(action_morphism(table, s)));
    std::vector<PolynomialMap> stamped;
    for (std::size_t c = 0; c < pi->charts.size(); ++c)
      stamped.push_back(j.find(c, c)->map.relabeled(pi->charts[c], pi->charts[c]));
    out.maps.emplace(s, std::move(stamped));
  }
  return out;
}

ActionTable xi_inverse(const ActionTable& table) {
  const std::size_t n = table.degree();
  std::vector<int> rev;
  for (std::size_t k = n; k >= 1; --k) rev.push_back(static_cast<int>(k));
  const auto order = Permutation::from_one_based(rev);
  auto e = std::make_shared<const Atlas>(total_reversion(*table.atlas, order));
  ActionTable out{e, opposite(table.flavor), {}};
  for (const auto& [s, maps] : table.maps) {
    auto phi = phi_iso(*e, s);
    BundleMorphism phi_inv{phi.target, phi.source, {}};
    for (const auto& cm : phi.maps)
      phi_inv.maps.push_back({cm.target_chart, cm.source_chart,
                              cm.map.relabeled(phi.source->charts[cm.source_chart],
                                               phi.target->charts[cm.target_chart])});
    auto m = total_reversion(compose(phi_inv, action_morphism(table, s)), order);
    std::vector<PolynomialMap> stamped;
    for (std::size_t c = 0; c < e->charts.size(); ++c)
      stamped.push_back(m.find(c, c)->map.relabeled(e->charts[c], e->charts[c]));
    out.maps.emplace(s, std::move(stamped));
  }
  return out;
}

ValidationReport check_intertwines(const BundleMorphism& f, const ActionTable& a1, const ActionTable& a2) {
  ValidationReport r;
  for (const auto& [s, m1] : a1.maps) {
    const auto& m2 = a2.at(s);
    for (const auto& cm : f.maps) {
      auto lhs = compose(cm.map, m1[cm.source_chart]);
      auto rhs = compose(m2[cm.target_chart], cm.map);
      if (lhs != rhs)
        r.fail("intertwine", s.to_string() + ": charts " + f.source->charts[cm.source_chart]->name() + " -> " +
                                 f.target->charts[cm.target_chart]->name());
    }
  }
  return r;
}

}  // namespace gsa
