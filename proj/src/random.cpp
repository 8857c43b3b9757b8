#include "gsa/random.hpp"

#include <algorithm>
#include <numeric>

namespace gsa {

namespace {

// Multisets of indices from `allowed` (no repeated odd index) with the given weight
// and parity, of size 0..max_factors.
std::vector<Factors> candidates(const Chart& chart, const std::vector<std::size_t>& allowed,
                                const Weight& w, Parity p, int max_factors) {
  std::vector<Factors> out;
  Factors cur;
  std::vector<int> acc(w.size(), 0);
  std::function<void(std::size_t, Parity)> rec = [&](std::size_t start, Parity par) {
    if (acc == w.entries() && par == p) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_factors) return;
    for (std::size_t a = start; a < allowed.size(); ++a) {
      const auto& c = chart[allowed[a]];
      bool fits = true;
      for (std::size_t s = 0; s < w.size(); ++s)
        if (acc[s] + c.weight[s] > w[s]) fits = false;
      if (!fits) continue;
      for (std::size_t s = 0; s < w.size(); ++s) acc[s] += c.weight[s];
      cur.push_back(static_cast<std::uint32_t>(allowed[a]));
      rec(is_odd(c.parity) ? a + 1 : a, par + c.parity);
      cur.pop_back();
      for (std::size_t s = 0; s < w.size(); ++s) acc[s] -= c.weight[s];
    }
  };
  rec(0, Parity::Even);
  return out;
}

}  // namespace

Rational AtlasGenerator::coefficient(bool nonzero) {
  int num = 0;
  do num = uniform(-3, 3);
  while (nonzero && num == 0);
  Rational r(num, uniform(1, 2));
  r.canonicalize();
  return r;
}

std::vector<CoordinateSymbol> AtlasGenerator::layout(const RandomAtlasOptions& o) {
  std::vector<CoordinateSymbol> coords;
  const std::size_t len = o.kind.weight_length();
  for (std::size_t i = 0; i < o.even_base; ++i)
    coords.push_back({"x" + std::to_string(i + 1), Parity::Even, Weight::zero(len)});
  for (std::size_t i = 0; i < o.odd_base; ++i)
    coords.push_back({"s" + std::to_string(i + 1), Parity::Odd, Weight::zero(len)});

  // All nonzero fiber weights, ordered by total weight.
  std::vector<Weight> weights;
  const std::size_t n = o.kind.vector_slots;
  const int dmax = o.kind.degree.value_or(0);
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits)
    for (int d = 0; d <= dmax; ++d) {
      std::vector<int> e;
      for (std::size_t s = 0; s < n; ++s) e.push_back((bits >> s) & 1);
      if (o.kind.degree) e.push_back(d);
      Weight w(e);
      if (!w.is_zero()) weights.push_back(w);
    }
  std::stable_sort(weights.begin(), weights.end(),
                   [](const Weight& a, const Weight& b) { return a.total() < b.total(); });

  int even_count = 0, odd_count = 0;
  auto add = [&](const Weight& w, Parity p) {
    std::string name = is_odd(p) ? "p" + std::to_string(++odd_count) : "z" + std::to_string(++even_count);
    coords.push_back({name, p, w});
  };
  bool any = false;
  for (const auto& w : weights) {
    const int pw = o.kind.degree ? w[w.size() - 1] : w.total();
    if (o.nmanifold) {
      int c = uniform(0, o.max_per_weight);
      for (int i = 0; i < c; ++i) add(w, parity_of(pw));
      any = any || c > 0;
    } else {
      for (Parity p : {Parity::Even, Parity::Odd}) {
        int c = uniform(0, std::max(0, o.max_per_weight - 1));
        for (int i = 0; i < c; ++i) add(w, p);
        any = any || c > 0;
      }
    }
  }
  if (!any && !weights.empty()) {
    const auto& w = weights[uniform(0, static_cast<int>(weights.size()) - 1)];
    const int pw = o.kind.degree ? w[w.size() - 1] : w.total();
    add(w, o.nmanifold ? parity_of(pw) : (coin() ? Parity::Odd : Parity::Even));
  }
  return coords;
}

PolynomialMap AtlasGenerator::triangular(const ChartPtr& vars, const ChartPtr& over,
                                         PolynomialMap* inverse, int max_terms, int max_factors) {
  const Chart& ch = *over;
  if (vars->size() != ch.size()) throw ChartMismatchError("triangular: layouts differ");
  std::vector<std::size_t> order(ch.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ch[a].weight.total() < ch[b].weight.total(); });

  std::vector<Rational> scale(ch.size());
  std::vector<Polynomial> shift(ch.size(), Polynomial(over));
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t k = order[pos];
    scale[k] = coefficient();
    std::vector<std::size_t> earlier(order.begin(), order.begin() + pos);
    std::sort(earlier.begin(), earlier.end());
    auto cands = candidates(ch, earlier, ch[k].weight, ch[k].parity, max_factors);
    int terms = cands.empty() ? 0 : uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      const auto& f = cands[uniform(0, static_cast<int>(cands.size()) - 1)];
      shift[k] += Polynomial::monomial(over, coefficient(), f);
    }
  }

  std::vector<Polynomial> fwd;
  for (std::size_t k = 0; k < ch.size(); ++k)
    fwd.push_back(Polynomial::coordinate(over, k) * scale[k] + shift[k]);

  if (inverse) {
    // z_k = (z'_k - P_k(z)) / c_k, resolved in triangular order.
    std::vector<Polynomial> inv(ch.size(), Polynomial(vars));
    for (std::size_t k : order) {
      PolynomialMap partial_inv(over, vars, inv);
      Rational c = 1 / scale[k];
      inv[k] = (Polynomial::coordinate(vars, k) - substitute(shift[k], partial_inv)) * c;
    }
    *inverse = PolynomialMap(over, vars, std::move(inv));
  }
  return PolynomialMap(vars, over, std::move(fwd));
}

Atlas AtlasGenerator::atlas(const RandomAtlasOptions& o) {
  if (o.charts < 2 || o.charts > 3) throw std::invalid_argument("random atlas: 2 or 3 charts");
  auto coords = layout(o);
  Atlas a;
  a.kind = o.kind;
  a.nmanifold = o.nmanifold;
  const char* names[] = {"U", "V", "W"};
  for (std::size_t c = 0; c < o.charts; ++c) a.charts.push_back(make_chart(names[c], coords));

  auto next = [&](std::size_t from, std::size_t to) {
    PolynomialMap inv = PolynomialMap::identity(a.charts[from]);
    auto fwd = triangular(a.charts[to], a.charts[from], &inv, o.max_terms, o.max_factors);
    return Transition{from, to, fwd, inv};
  };
  a.transitions.push_back(next(0, 1));
  if (o.charts == 3) {
    auto vw = next(1, 2);
    const auto uv = a.transitions[0];
    a.transitions.push_back(vw);
    a.transitions.push_back(
        {0, 2, compose(vw.forward, uv.forward), compose(uv.inverse, vw.inverse)});
    a.cocycles.push_back({0, 1, 2});
  }
  return a;
}

BundleMorphism AtlasGenerator::automorphism(const AtlasPtr& a, int max_terms) {
  BundleMorphism m{a, a, {}};
  const auto& u = a->charts[0];
  auto phi = triangular(u, u, nullptr, max_terms);
  m.maps.push_back({0, 0, phi});
  for (std::size_t c = 1; c < a->charts.size(); ++c) {
    auto* t = a->find_transition(0, c);
    if (!t) throw std::invalid_argument("automorphism: chart 0 must overlap every chart");
    m.maps.push_back({c, c, compose(t->forward, compose(phi, t->inverse))});
  }
  return m;
}

std::pair<AtlasPtr, BundleMorphism> AtlasGenerator::recoordinatize(const AtlasPtr& a, int max_terms) {
  std::vector<PolynomialMap> fwd, inv;
  for (const auto& ch : a->charts) {
    PolynomialMap i = PolynomialMap::identity(ch);
    fwd.push_back(triangular(ch, ch, &i, max_terms));
    inv.push_back(i);
  }
  Atlas out = *a;
  for (auto& t : out.transitions) {
    t.forward = compose(fwd[t.to], compose(t.forward, inv[t.from]));
    t.inverse = compose(fwd[t.from], compose(t.inverse, inv[t.to]));
  }
  auto target = std::make_shared<const Atlas>(out);
  BundleMorphism m{a, target, {}};
  for (std::size_t c = 0; c < a->charts.size(); ++c) m.maps.push_back({c, c, fwd[c]});
  return {target, m};
}

Polynomial AtlasGenerator::homogeneous(const ChartPtr& chart, const Weight& w, Parity p,
                                       int max_terms, int max_factors) {
  std::vector<std::size_t> all(chart->size());
  std::iota(all.begin(), all.end(), 0);
  auto cands = candidates(*chart, all, w, p, max_factors);
  Polynomial out(chart);
  if (cands.empty()) return out;
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t)
    out += Polynomial::monomial(chart, coefficient(), cands[uniform(0, static_cast<int>(cands.size()) - 1)]);
  return out;
}

}  // namespace gsa
