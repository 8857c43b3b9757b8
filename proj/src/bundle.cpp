#include "gsa/bundle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace gsa {

std::string AtlasKind::to_string() const {
  std::ostringstream os;
  if (is_weighted())
    os << "weighted " << *degree;
  else if (is_multivector())
    os << "vector " << vector_slots;
  else
    os << "mixed " << vector_slots << ' ' << *degree;
  return os.str();
}

std::size_t Atlas::chart_index(std::string_view name) const {
  for (std::size_t i = 0; i < charts.size(); ++i)
    if (charts[i]->name() == name) return i;
  throw std::out_of_range("no chart named '" + std::string(name) + "'");
}

const Transition* Atlas::find_transition(std::size_t from, std::size_t to) const {
  for (const auto& t : transitions)
    if (t.from == from && t.to == to) return &t;
  return nullptr;
}

bool operator==(const Atlas& a, const Atlas& b) {
  if (a.kind != b.kind || a.nmanifold != b.nmanifold || a.charts.size() != b.charts.size())
    return false;
  for (std::size_t i = 0; i < a.charts.size(); ++i)
    if (!same_chart(a.charts[i], b.charts[i])) return false;
  return a.transitions == b.transitions && a.cocycles == b.cocycles;
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& i : other.issues_) issues_.push_back({i.check, prefix + i.message});
}

bool ValidationReport::has(std::string_view check) const {
  return std::any_of(issues_.begin(), issues_.end(),
                     [&](const ValidationIssue& i) { return i.check == check; });
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok\n";
  std::string out;
  for (const auto& i : issues_) out += i.check + ": " + i.message + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

int parity_weight(const AtlasKind& kind, const Weight& w) {
  return kind.degree ? w[w.size() - 1] : w.total();
}

Rational power(const Rational& t, int e) {
  Rational r = 1;
  for (int k = 0; k < e; ++k) r *= t;
  return r;
}

int selected_weight(const Weight& w, std::optional<std::size_t> slot) {
  return slot ? w[*slot] : w.total();
}

void check_homogeneous_images(const PolynomialMap& m, const std::string& what,
                              ValidationReport& report) {
  const Chart& vars = *m.vars();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto g = weight_and_parity(m.image(i));
    if (!g.has_weight(vars[i].weight))
      report.fail("homogeneity", what + ": image of " + vars[i].name + " is not homogeneous of weight " +
                                     vars[i].weight.to_string() + " (" + to_string(m.image(i)) + ")");
    if (!g.has_parity(vars[i].parity))
      report.fail("parity", what + ": image of " + vars[i].name + " has wrong parity");
  }
}

std::string transition_label(const Atlas& a, const Transition& t) {
  return a.charts[t.from]->name() + "->" + a.charts[t.to]->name();
}

}  // namespace

ValidationReport validate_chart(const AtlasKind& kind, bool nmanifold, const Chart& chart) {
  ValidationReport r;
  for (const auto& c : chart.coordinates()) {
    const std::string where = chart.name() + "." + c.name;
    if (c.weight.size() != kind.weight_length()) {
      r.fail("kind", where + ": weight " + c.weight.to_string() + " has wrong length for kind " +
                         kind.to_string());
      continue;
    }
    for (std::size_t s = 0; s < kind.vector_slots; ++s)
      if (c.weight[s] != 0 && c.weight[s] != 1)
        r.fail("kind", where + ": weight " + c.weight.to_string() + " is not in {0,1}^n");
    if (kind.degree) {
      int w = c.weight[kind.vector_slots];
      if (w < 0 || w > *kind.degree)
        r.fail("kind", where + ": weight " + std::to_string(w) + " exceeds degree " +
                           std::to_string(*kind.degree));
    }
    if (nmanifold && is_odd(c.parity) != (parity_weight(kind, c.weight) % 2 == 1))
      r.fail("nmanifold", where + ": parity does not agree with weight");
  }
  return r;
}

ValidationReport validate_atlas(const Atlas& atlas) {
  ValidationReport r;
  for (const auto& ch : atlas.charts) r.merge(validate_chart(atlas.kind, atlas.nmanifold, *ch));
  if (!r.ok()) return r;

  for (const auto& t : atlas.transitions) {
    if (t.from >= atlas.charts.size() || t.to >= atlas.charts.size()) {
      r.fail("structure", "transition refers to unknown chart");
      continue;
    }
    const std::string label = transition_label(atlas, t);
    const auto& u = atlas.charts[t.from];
    const auto& v = atlas.charts[t.to];
    if (!same_chart(t.forward.vars(), v) || !same_chart(t.forward.over(), u) ||
        !same_chart(t.inverse.vars(), u) || !same_chart(t.inverse.over(), v)) {
      r.fail("structure", label + ": transition charts do not match the atlas");
      continue;
    }
    check_homogeneous_images(t.forward, label, r);
    check_homogeneous_images(t.inverse, label + " (inverse)", r);
    if (!(compose(t.forward, t.inverse) == PolynomialMap::identity(v)) ||
        !(compose(t.inverse, t.forward) == PolynomialMap::identity(u)))
      r.fail("inverse", label + ": declared inverse does not compose to the identity");
  }

  for (const auto& c : atlas.cocycles) {
    auto* vu = atlas.find_transition(c.u, c.v);
    auto* wv = atlas.find_transition(c.v, c.w);
    auto* wu = atlas.find_transition(c.u, c.w);
    if (!vu || !wv || !wu) {
      r.fail("cocycle", "triple overlap lacks a transition");
      continue;
    }
    if (!(compose(wv->forward, vu->forward) == wu->forward))
      r.fail("cocycle", "g_" + atlas.charts[c.w]->name() + atlas.charts[c.u]->name() +
                            " differs from the composite through " + atlas.charts[c.v]->name());
  }
  return r;
}

Derivation weight_field(const ChartPtr& chart, std::optional<std::size_t> slot) {
  Derivation d(chart);
  for (std::size_t i = 0; i < chart->size(); ++i) {
    int w = selected_weight((*chart)[i].weight, slot);
    if (w != 0) d.set_component(i, Polynomial::coordinate(chart, i) * Rational(w));
  }
  return d;
}

std::vector<Derivation> weight_vector_field(const Atlas& atlas, std::optional<std::size_t> slot) {
  if (slot && *slot >= atlas.kind.weight_length())
    throw std::out_of_range("weight slot out of range");
  std::vector<Derivation> fields;
  for (const auto& ch : atlas.charts) fields.push_back(weight_field(ch, slot));

  ValidationReport r;
  for (const auto& t : atlas.transitions) {
    const Chart& v = *atlas.charts[t.to];
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& img = t.forward.image(i);
      int w = selected_weight(v[i].weight, slot);
      if (!(apply_derivation(fields[t.from], img) == img * Rational(w)))
        r.fail("weight-field", transition_label(atlas, t) + ": field not related on " + v[i].name);
    }
  }
  if (!slot) {
    for (const auto& ch : atlas.charts) {
      std::vector<Derivation> slots;
      for (std::size_t s = 0; s < atlas.kind.weight_length(); ++s) slots.push_back(weight_field(ch, s));
      for (std::size_t i = 0; i < slots.size(); ++i)
        for (std::size_t j = i + 1; j < slots.size(); ++j)
          if (!bracket(slots[i], slots[j]).is_zero())
            r.fail("weight-field", ch->name() + ": weight fields do not commute");
    }
  }
  if (!r.ok()) throw ValidationError(r);
  return fields;
}

// ---------------------------------------------------------------------------
// Morphisms

const ChartMap* BundleMorphism::find(std::size_t source_chart, std::size_t target_chart) const {
  for (const auto& m : maps)
    if (m.source_chart == source_chart && m.target_chart == target_chart) return &m;
  return nullptr;
}

bool operator==(const BundleMorphism& a, const BundleMorphism& b) {
  return *a.source == *b.source && *a.target == *b.target && a.maps == b.maps;
}

BundleMorphism identity_morphism(const AtlasPtr& atlas) {
  BundleMorphism m{atlas, atlas, {}};
  for (std::size_t i = 0; i < atlas->charts.size(); ++i)
    m.maps.push_back({i, i, PolynomialMap::identity(atlas->charts[i])});
  return m;
}

BundleMorphism compose(const BundleMorphism& g, const BundleMorphism& f) {
  if (g.source != f.target && !(*g.source == *f.target))
    throw std::invalid_argument("compose: morphisms are not composable");
  BundleMorphism out{f.source, g.target, {}};
  for (const auto& fm : f.maps)
    for (const auto& gm : g.maps)
      if (gm.source_chart == fm.target_chart) {
        auto gmap = gm.map.relabeled(gm.map.vars(), fm.map.vars());
        out.maps.push_back({fm.source_chart, gm.target_chart, compose(gmap, fm.map)});
      }
  return out;
}

PolynomialMap dilation_map(const ChartPtr& chart, const Rational& t, std::optional<std::size_t> slot) {
  std::vector<Polynomial> imgs;
  for (std::size_t i = 0; i < chart->size(); ++i)
    imgs.push_back(Polynomial::coordinate(chart, i) *
                   power(t, selected_weight((*chart)[i].weight, slot)));
  return PolynomialMap(chart, chart, std::move(imgs));
}

BundleMorphism dilation(const AtlasPtr& atlas, const Rational& t, std::optional<std::size_t> slot) {
  BundleMorphism m{atlas, atlas, {}};
  for (std::size_t i = 0; i < atlas->charts.size(); ++i)
    m.maps.push_back({i, i, dilation_map(atlas->charts[i], t, slot)});
  return m;
}

ValidationReport check_morphism(const BundleMorphism& m) {
  ValidationReport r;
  const Atlas& src = *m.source;
  const Atlas& tgt = *m.target;
  if (src.kind.weight_length() != tgt.kind.weight_length()) {
    r.fail("kind", "source and target weight layouts differ");
    return r;
  }
  for (std::size_t c = 0; c < src.charts.size(); ++c) {
    bool covered = std::any_of(m.maps.begin(), m.maps.end(),
                               [&](const ChartMap& cm) { return cm.source_chart == c; });
    if (!covered) r.fail("coverage", "source chart " + src.charts[c]->name() + " has no component");
  }
  for (const auto& cm : m.maps) {
    if (cm.source_chart >= src.charts.size() || cm.target_chart >= tgt.charts.size()) {
      r.fail("structure", "component refers to unknown chart");
      continue;
    }
    const auto& sc = src.charts[cm.source_chart];
    const auto& tc = tgt.charts[cm.target_chart];
    const std::string label = sc->name() + "=>" + tc->name();
    if (!same_chart(cm.map.vars(), tc) || !same_chart(cm.map.over(), sc)) {
      r.fail("structure", label + ": component charts do not match the atlases");
      continue;
    }
    check_homogeneous_images(cm.map, label, r);
    for (int t : {0, 2, 3}) {
      auto h = dilation_map(sc, t);
      for (std::size_t i = 0; i < tc->size(); ++i)
        if (!(substitute(cm.map.image(i), h) == cm.map.image(i) * power(t, (*tc)[i].weight.total())))
          r.fail("dilation", label + ": does not intertwine h_" + std::to_string(t) + " on " +
                                 (*tc)[i].name);
    }
  }
  if (!r.ok()) return r;

  // Components must agree across overlaps: g' o phi_UV = phi_U2V2 o g.
  for (const auto& gs : src.transitions)
    for (const auto& gt : tgt.transitions) {
      auto* a = m.find(gs.from, gt.from);
      auto* b = m.find(gs.to, gt.to);
      if (!a || !b) continue;
      if (!(compose(gt.forward, a->map) == compose(b->map, gs.forward)))
        r.fail("naturality", "components disagree across " + transition_label(src, gs) + " / " +
                                 transition_label(tgt, gt));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Restrictions

PolynomialMap zero_extension(const ChartPtr& full, const ChartPtr& restricted) {
  std::vector<Polynomial> imgs;
  for (const auto& c : full->coordinates()) {
    auto i = restricted->find(c.name);
    imgs.push_back(i ? Polynomial::coordinate(restricted, *i) : Polynomial(restricted));
  }
  return PolynomialMap(full, restricted, std::move(imgs));
}

PolynomialMap restrict_map(const PolynomialMap& m, const ChartPtr& vars_restricted,
                           const ChartPtr& over_restricted) {
  auto ext = zero_extension(m.over(), over_restricted);
  std::vector<Polynomial> imgs;
  for (const auto& c : vars_restricted->coordinates())
    imgs.push_back(substitute(m.image(m.vars()->index_of(c.name)), ext));
  return PolynomialMap(vars_restricted, over_restricted, std::move(imgs));
}

Atlas restrict_atlas(const Atlas& atlas, const Restriction& r) {
  Atlas out;
  out.kind = r.kind;
  out.cocycles = atlas.cocycles;
  for (const auto& ch : atlas.charts) {
    std::vector<CoordinateSymbol> kept;
    for (const auto& c : ch->coordinates())
      if (r.keep(c)) kept.push_back({c.name, c.parity, r.reweight(c)});
    out.charts.push_back(make_chart(ch->name(), std::move(kept)));
  }
  for (const auto& t : atlas.transitions) {
    const auto& u = out.charts[t.from];
    const auto& v = out.charts[t.to];
    out.transitions.push_back(
        {t.from, t.to, restrict_map(t.forward, v, u), restrict_map(t.inverse, u, v)});
  }
  return out;
}

Atlas restrict_to_weight(const Atlas& atlas, const Weight& alpha) {
  if (!atlas.kind.is_multivector()) throw std::invalid_argument("restrict_to_weight: not an n-vector atlas");
  if (alpha.size() != atlas.kind.vector_slots) throw std::invalid_argument("restrict_to_weight: weight length");
  if (alpha.is_zero()) throw std::invalid_argument("restrict_to_weight: alpha must be nonzero");
  return restrict_atlas(atlas, {[&](const CoordinateSymbol& c) { return c.weight.is_zero() || c.weight == alpha; },
                                [&](const CoordinateSymbol& c) { return Weight({c.weight == alpha ? 1 : 0}); },
                                AtlasKind::multivector(1)});
}

Atlas core_bundle(const Atlas& atlas, std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("core_bundle: slots must differ");
  if (i >= atlas.kind.vector_slots || j >= atlas.kind.vector_slots)
    throw std::out_of_range("core_bundle: slot out of range");
  const auto degree = atlas.kind.degree;
  return restrict_atlas(atlas, {[&](const CoordinateSymbol& c) { return c.weight[i] == c.weight[j]; },
                                [&](const CoordinateSymbol& c) {
                                  std::vector<int> w{c.weight[i]};
                                  if (degree) w.push_back(c.weight[c.weight.size() - 1]);
                                  return Weight(w);
                                },
                                AtlasKind{1, degree}});
}

ChartPtr permute_chart(const ChartPtr& chart, const Permutation& sigma) {
  auto coords = chart->coordinates();
  for (auto& c : coords) c.weight = c.weight.permuted(sigma);
  return make_chart(chart->name(), std::move(coords));
}

Atlas permute_slots(const Atlas& atlas, const Permutation& sigma) {
  if (sigma.size() != atlas.kind.vector_slots)
    throw std::invalid_argument("permute_slots: permutation size mismatch");
  Atlas out = atlas;
  for (auto& ch : out.charts) ch = permute_chart(ch, sigma);
  for (auto& t : out.transitions) {
    t.forward = t.forward.relabeled(out.charts[t.to], out.charts[t.from]);
    t.inverse = t.inverse.relabeled(out.charts[t.from], out.charts[t.to]);
  }
  return out;
}

Atlas retype_degree(const Atlas& atlas, int degree) {
  if (!atlas.kind.degree) throw std::invalid_argument("retype_degree: atlas has no N-weighted slot");
  if (degree < *atlas.kind.degree) throw std::invalid_argument("retype_degree: degree can only grow");
  Atlas out = atlas;
  out.kind.degree = degree;
  return out;
}

}  // namespace gsa

namespace gsa {

namespace {

// Gauss-Jordan inverse of a square rational matrix; empty optional when singular.
std::optional<std::vector<std::vector<Rational>>> invert_matrix(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace

PolynomialMap invert_graded(const PolynomialMap& m) {
  const auto& vars = m.vars();
  const auto& over = m.over();
  if (vars->size() != over->size()) throw std::invalid_argument("invert_graded: dimension mismatch");

  std::map<Weight, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
  for (std::size_t i = 0; i < vars->size(); ++i) groups[(*vars)[i].weight].first.push_back(i);
  for (std::size_t i = 0; i < over->size(); ++i) groups[(*over)[i].weight].second.push_back(i);
  std::vector<const decltype(groups)::value_type*> order;
  for (const auto& g : groups) order.push_back(&g);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* a, auto* b) { return a->first.total() < b->first.total(); });

  // Per weight: z = L y + N(y) with L constant. Solved by y <- L^{-1}(z - N(y)), which
  // stabilizes when the non-constant part of N is nilpotent (triangular changes).
  std::vector<Polynomial> inv(over->size(), Polynomial(vars));
  for (const auto* g : order) {
    const Weight& w = g->first;
    const auto& [rows, cols] = g->second;
    if (rows.size() != cols.size())
      throw std::invalid_argument("invert_graded: coordinate counts differ in weight " + w.to_string());
    const std::size_t k = rows.size();
    std::vector<std::vector<Rational>> lin(k, std::vector<Rational>(k, 0));
    std::vector<Polynomial> rest;
    for (std::size_t r = 0; r < k; ++r) {
      Polynomial rem(over);
      for (const auto& [f, c] : m.image(rows[r]).terms()) {
        auto col = f.size() == 1 ? std::find(cols.begin(), cols.end(), f[0]) : cols.end();
        if (col != cols.end())
          lin[r][col - cols.begin()] = c;
        else
          rem.add_term(f, c);
      }
      rest.push_back(std::move(rem));
    }
    auto li = invert_matrix(lin);
    if (!li) throw std::invalid_argument("invert_graded: singular linear part in weight " + w.to_string());
    for (int iter = 0;; ++iter) {
      if (iter > static_cast<int>(k) + 1) throw std::invalid_argument("invert_graded: no polynomial inverse in weight " + w.to_string());
      PolynomialMap known(over, vars, inv);
      std::vector<Polynomial> rhs;
      for (std::size_t r = 0; r < k; ++r)
        rhs.push_back(Polynomial::coordinate(vars, rows[r]) - substitute(rest[r], known));
      bool changed = false;
      for (std::size_t c = 0; c < k; ++c) {
        Polynomial y(vars);
        for (std::size_t r = 0; r < k; ++r)
          if ((*li)[c][r] != 0) y += rhs[r] * (*li)[c][r];
        if (y != inv[cols[c]]) changed = true;
        inv[cols[c]] = std::move(y);
      }
      if (!changed) break;
    }
  }
  PolynomialMap out(over, vars, std::move(inv));
  if (compose(m, out) != PolynomialMap::identity(vars))
    throw std::invalid_argument("invert_graded: map has no polynomial inverse");
  return out;
}

}  // namespace gsa
