#include "gsa/superalg.hpp"

#include <algorithm>
#include <sstream>

namespace gsa {

std::string_view to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

// ---------------------------------------------------------------------------
// Weight

int Weight::total() const {
  int t = 0;
  for (int e : entries_) t += e;
  return t;
}

Weight Weight::permuted(const Permutation& sigma) const {
  if (sigma.size() > entries_.size()) throw std::invalid_argument("permutation longer than weight");
  auto out = entries_;
  for (std::size_t k = 0; k < sigma.size(); ++k) out[k] = entries_[sigma(k)];
  return Weight(std::move(out));
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  auto out = a.entries_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries_[i];
  return Weight(std::move(out));
}

// ---------------------------------------------------------------------------
// Chart

Chart::Chart(std::string name, std::vector<CoordinateSymbol> coordinates)
    : name_(std::move(name)), coords_(std::move(coordinates)) {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!index_.emplace(coords_[i].name, i).second)
      throw std::invalid_argument("duplicate coordinate '" + coords_[i].name + "' in chart " + name_);
    if (coords_[i].weight.size() != coords_[0].weight.size())
      throw std::invalid_argument("inconsistent weight lengths in chart " + name_);
  }
}

std::optional<std::size_t> Chart::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Chart::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::out_of_range("no coordinate '" + std::string(name) + "' in chart " + name_);
  return *i;
}

ChartPtr make_chart(std::string name, std::vector<CoordinateSymbol> coordinates) {
  return std::make_shared<const Chart>(std::move(name), std::move(coordinates));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b, std::string_view what) {
  if (!same_chart(a, b))
    throw ChartMismatchError(std::string(what) + ": operands live on different charts (" +
                             (a ? a->name() : "?") + " vs " + (b ? b->name() : "?") + ")");
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(ChartPtr chart, const Rational& c) {
  Polynomial p(std::move(chart));
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::coordinate(ChartPtr chart, std::size_t index) {
  if (index >= chart->size()) throw std::out_of_range("coordinate index");
  Polynomial p(std::move(chart));
  p.add_term({static_cast<std::uint32_t>(index)}, 1);
  return p;
}

Polynomial Polynomial::coordinate(ChartPtr chart, std::string_view name) {
  auto i = chart->index_of(name);
  return coordinate(std::move(chart), i);
}

Polynomial Polynomial::monomial(ChartPtr chart, const Rational& c, Factors factors) {
  Polynomial p(chart);
  int s = sort_with_sign(factors, [&](std::uint32_t i) { return chart->odd(i); });
  if (s != 0) p.add_term(factors, c * s);
  return p;
}

void Polynomial::add_term(const Factors& canonical, const Rational& c) {
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(canonical, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::rebased(ChartPtr chart) const {
  if (chart->size() != chart_->size()) throw ChartMismatchError("rebase onto incompatible chart");
  Polynomial p(std::move(chart));
  p.terms_ = terms_;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [f, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_chart(chart_, o.chart_, "add");
  for (const auto& [f, c] : o.terms_) add_term(f, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_chart(chart_, o.chart_, "subtract");
  for (const auto& [f, c] : o.terms_) add_term(f, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& [f, v] : terms_) v *= k;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_chart(a.chart_, b.chart_, "multiply");
  const Chart& ch = *a.chart_;
  auto odd = [&](std::uint32_t i) { return ch.odd(i); };
  Polynomial out(a.chart_);
  Factors buf;
  for (const auto& [fa, ca] : a.terms_) {
    for (const auto& [fb, cb] : b.terms_) {
      buf.assign(fa.begin(), fa.end());
      buf.insert(buf.end(), fb.begin(), fb.end());
      int s = sort_with_sign(buf, odd);
      if (s != 0) out.add_term(buf, s * ca * cb);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_;
}

Polynomial normalize_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial partial(const Polynomial& p, std::size_t index) {
  const Chart& ch = *p.chart();
  if (index >= ch.size()) throw std::out_of_range("partial: coordinate index");
  const auto z = static_cast<std::uint32_t>(index);
  const bool z_odd = ch.odd(index);
  Polynomial out(p.chart());
  for (const auto& [f, c] : p.terms()) {
    auto first = std::find(f.begin(), f.end(), z);
    if (first == f.end()) continue;
    auto pos = static_cast<std::size_t>(first - f.begin());
    int sign = 1;
    if (z_odd) {
      for (std::size_t k = 0; k < pos; ++k)
        if (ch.odd(f[k])) sign = -sign;
    }
    auto mult = std::count(f.begin(), f.end(), z);
    Factors rest = f;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
    out.add_term(rest, c * sign * static_cast<long>(mult));
  }
  return out;
}

Weight term_weight(const Chart& chart, const Factors& f) {
  Weight w = Weight::zero(chart.weight_length());
  for (auto i : f) w = w + chart[i].weight;
  return w;
}

Parity term_parity(const Chart& chart, const Factors& f) {
  Parity p = Parity::Even;
  for (auto i : f) p = p + chart[i].parity;
  return p;
}

Grading weight_and_parity(const Polynomial& p) {
  Grading g;
  if (p.is_zero()) {
    g.zero = true;
    return g;
  }
  bool first = true;
  bool weight_ok = true, parity_ok = true;
  for (const auto& [f, c] : p.terms()) {
    auto w = term_weight(*p.chart(), f);
    auto par = term_parity(*p.chart(), f);
    if (first) {
      g.weight = w;
      g.parity = par;
      first = false;
      continue;
    }
    if (weight_ok && *g.weight != w) weight_ok = false;
    if (parity_ok && *g.parity != par) parity_ok = false;
  }
  if (!weight_ok) g.weight.reset();
  if (!parity_ok) g.parity.reset();
  return g;
}

// ---------------------------------------------------------------------------
// Derivation

Derivation::Derivation(ChartPtr chart) : chart_(std::move(chart)) {
  comps_.assign(chart_->size(), Polynomial(chart_));
}

Derivation::Derivation(ChartPtr chart, std::vector<Polynomial> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (comps_.size() != chart_->size()) throw std::invalid_argument("derivation: component count");
  for (const auto& c : comps_) require_same_chart(chart_, c.chart(), "derivation component");
}

void Derivation::set_component(std::size_t i, Polynomial p) {
  require_same_chart(chart_, p.chart(), "derivation component");
  comps_.at(i) = std::move(p);
}

bool Derivation::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Parity Derivation::parity() const {
  std::optional<Parity> par;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    auto g = weight_and_parity(comps_[i]);
    if (!g.parity) throw ParityError("derivation component of mixed parity");
    Parity p = *g.parity + (*chart_)[i].parity;
    if (par && *par != p) throw ParityError("derivation of mixed parity");
    par = p;
  }
  return par.value_or(Parity::Even);
}

Derivation& Derivation::operator+=(const Derivation& o) {
  require_same_chart(chart_, o.chart_, "derivation sum");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

Derivation& Derivation::operator*=(const Rational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

bool operator==(const Derivation& a, const Derivation& b) {
  return same_chart(a.chart_, b.chart_) && a.comps_ == b.comps_;
}

Polynomial apply_derivation(const Derivation& d, const Polynomial& p) {
  require_same_chart(d.chart(), p.chart(), "apply_derivation");
  Polynomial out(p.chart());
  for (std::size_t i = 0; i < d.components().size(); ++i) {
    if (d.component(i).is_zero()) continue;
    auto dp = partial(p, i);
    if (dp.is_zero()) continue;
    out += d.component(i) * dp;
  }
  return out;
}

Derivation bracket(const Derivation& d1, const Derivation& d2) {
  require_same_chart(d1.chart(), d2.chart(), "bracket");
  const bool both_odd = is_odd(d1.parity()) && is_odd(d2.parity());
  Derivation out(d1.chart());
  for (std::size_t i = 0; i < out.components().size(); ++i) {
    auto c = apply_derivation(d1, d2.component(i));
    auto r = apply_derivation(d2, d1.component(i));
    out.set_component(i, both_odd ? c + r : c - r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// PolynomialMap

PolynomialMap::PolynomialMap(ChartPtr vars, ChartPtr over, std::vector<Polynomial> images)
    : vars_(std::move(vars)), over_(std::move(over)), images_(std::move(images)) {
  if (images_.size() != vars_->size())
    throw std::invalid_argument("polynomial map: missing coordinate assignment (" +
                                std::to_string(images_.size()) + " of " +
                                std::to_string(vars_->size()) + ")");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    require_same_chart(over_, images_[i].chart(), "polynomial map image");
    auto g = weight_and_parity(images_[i]);
    if (!g.has_parity((*vars_)[i].parity))
      throw ParityError("polynomial map: image of '" + (*vars_)[i].name + "' violates parity");
  }
}

PolynomialMap PolynomialMap::identity(ChartPtr chart) {
  std::vector<Polynomial> imgs;
  for (std::size_t i = 0; i < chart->size(); ++i) imgs.push_back(Polynomial::coordinate(chart, i));
  return PolynomialMap(chart, chart, std::move(imgs));
}

PolynomialMap PolynomialMap::relabeled(ChartPtr vars, ChartPtr over) const {
  std::vector<Polynomial> imgs;
  for (const auto& p : images_) imgs.push_back(p.rebased(over));
  return PolynomialMap(std::move(vars), std::move(over), std::move(imgs));
}

bool operator==(const PolynomialMap& a, const PolynomialMap& b) {
  return same_chart(a.vars_, b.vars_) && same_chart(a.over_, b.over_) && a.images_ == b.images_;
}

Polynomial substitute(const Polynomial& p, const PolynomialMap& m) {
  require_same_chart(p.chart(), m.vars(), "substitute");
  Polynomial out(m.over());
  for (const auto& [f, c] : p.terms()) {
    Polynomial prod = Polynomial::constant(m.over(), c);
    for (auto i : f) {
      prod = prod * m.image(i);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

PolynomialMap compose(const PolynomialMap& f, const PolynomialMap& g) {
  require_same_chart(f.over(), g.vars(), "compose");
  std::vector<Polynomial> imgs;
  imgs.reserve(f.images().size());
  for (const auto& p : f.images()) imgs.push_back(substitute(p, g));
  return PolynomialMap(f.vars(), g.over(), std::move(imgs));
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string render_factors(const Chart& ch, const Factors& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    if (!out.empty()) out += '*';
    out += ch[f[i]].name;
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [f, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    if (f.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + '*';
    out += render_factors(*p.chart(), f);
  }
  return out;
}

}  // namespace gsa
