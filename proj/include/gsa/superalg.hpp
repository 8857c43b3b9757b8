#pragma once

// Exact supercommutative polynomial arithmetic over coordinate charts.
//
// A Polynomial lives on a Chart. Monomials are stored as factor-index lists sorted
// by the chart's declaration order; every Koszul sign is realized while sorting, and
// monomials containing a repeated odd factor vanish.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gsa/permutation.hpp"

namespace gsa {

using Rational = mpq_class;

struct ChartMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr bool is_odd(Parity p) { return p == Parity::Odd; }
constexpr Parity parity_of(int n) { return (n % 2) ? Parity::Odd : Parity::Even; }
std::string_view to_string(Parity p);

/// Multi-weight of a coordinate or homogeneous function.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<int> entries) : entries_(std::move(entries)) {}
  static Weight zero(std::size_t len) { return Weight(std::vector<int>(len, 0)); }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int total() const;
  bool is_zero() const { return total() == 0; }

  /// Right action: (w^sigma)(k) = w(sigma(k)) on the first sigma.size() entries.
  Weight permuted(const Permutation& sigma) const;

  std::string to_string() const;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

private:
  std::vector<int> entries_;
};

struct CoordinateSymbol {
  std::string name;
  Parity parity = Parity::Even;
  Weight weight;

  friend bool operator==(const CoordinateSymbol&, const CoordinateSymbol&) = default;
};

/// Ordered list of coordinates; the order is the canonical monomial order.
class Chart {
public:
  Chart(std::string name, std::vector<CoordinateSymbol> coordinates);

  const std::string& name() const { return name_; }
  std::size_t size() const { return coords_.size(); }
  const CoordinateSymbol& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<CoordinateSymbol>& coordinates() const { return coords_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  bool odd(std::size_t i) const { return is_odd(coords_[i].parity); }
  std::size_t weight_length() const { return coords_.empty() ? 0 : coords_[0].weight.size(); }

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.name_ == b.name_ && a.coords_ == b.coords_;
  }

private:
  std::string name_;
  std::vector<CoordinateSymbol> coords_;
  std::unordered_map<std::string, std::size_t> index_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::string name, std::vector<CoordinateSymbol> coordinates);
bool same_chart(const ChartPtr& a, const ChartPtr& b);
void require_same_chart(const ChartPtr& a, const ChartPtr& b, std::string_view what);

using Factors = std::vector<std::uint32_t>;

/// Sorts a factor sequence into ascending order, returning the accumulated Koszul
/// sign, or 0 if an odd factor repeats. `odd(i)` gives the parity used for signs.
template <class OddFn>
int sort_with_sign(Factors& seq, OddFn&& odd) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
      if (odd(seq[j - 1]) && odd(seq[j])) sign = -sign;
      std::swap(seq[j - 1], seq[j]);
    }
  }
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] == seq[i - 1] && odd(seq[i])) return 0;
  return sign;
}

class Polynomial {
public:
  using Terms = std::map<Factors, Rational>;

  explicit Polynomial(ChartPtr chart) : chart_(std::move(chart)) {}
  static Polynomial constant(ChartPtr chart, const Rational& c);
  static Polynomial coordinate(ChartPtr chart, std::size_t index);
  static Polynomial coordinate(ChartPtr chart, std::string_view name);
  /// Product c * f[0] * f[1] * ... in the given (unsorted) order, normalized.
  static Polynomial monomial(ChartPtr chart, const Rational& c, Factors factors);

  const ChartPtr& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c * (already canonical) factors.
  void add_term(const Factors& canonical, const Rational& c);

  /// Reinterprets the polynomial on another chart with identical coordinate layout.
  Polynomial rebased(ChartPtr chart) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
  ChartPtr chart_;
  Terms terms_;
};

Polynomial normalize_mul(const Polynomial& a, const Polynomial& b);

/// Left partial derivative with respect to coordinate `index`.
Polynomial partial(const Polynomial& p, std::size_t index);

/// Common weight/parity of all terms. The zero polynomial is homogeneous of every
/// weight and parity (`zero` is set and both optionals are empty).
struct Grading {
  bool zero = false;
  std::optional<Weight> weight;  // empty: inhomogeneous (or zero)
  std::optional<Parity> parity;  // empty: mixed (or zero)

  bool has_weight(const Weight& w) const { return zero || (weight && *weight == w); }
  bool has_parity(Parity p) const { return zero || (parity && *parity == p); }
};
Grading weight_and_parity(const Polynomial& p);
Weight term_weight(const Chart& chart, const Factors& f);
Parity term_parity(const Chart& chart, const Factors& f);

/// Vector field sum_A components[A] * d/dz^A (coefficients to the left).
class Derivation {
public:
  explicit Derivation(ChartPtr chart);
  Derivation(ChartPtr chart, std::vector<Polynomial> components);

  const ChartPtr& chart() const { return chart_; }
  const std::vector<Polynomial>& components() const { return comps_; }
  const Polynomial& component(std::size_t i) const { return comps_[i]; }
  void set_component(std::size_t i, Polynomial p);
  bool is_zero() const;
  /// Parity of the derivation; throws if components are of mixed parity.
  Parity parity() const;

  Derivation& operator+=(const Derivation& o);
  Derivation& operator*=(const Rational& c);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a += b * Rational(-1); }
  friend Derivation operator*(Derivation a, const Rational& c) { return a *= c; }
  friend bool operator==(const Derivation& a, const Derivation& b);

private:
  ChartPtr chart_;
  std::vector<Polynomial> comps_;
};

Polynomial apply_derivation(const Derivation& d, const Polynomial& p);
/// Graded commutator D1 D2 - (-1)^{|D1||D2|} D2 D1.
Derivation bracket(const Derivation& d1, const Derivation& d2);

/// Assignment of a polynomial over `over` to every coordinate of `vars`.
///
/// Read as a pullback: substituting the images into a polynomial on `vars`
/// produces a polynomial on `over`. Transition maps from chart U to chart V are
/// PolynomialMaps with vars = V and over = U.
class PolynomialMap {
public:
  PolynomialMap(ChartPtr vars, ChartPtr over, std::vector<Polynomial> images);
  static PolynomialMap identity(ChartPtr chart);

  const ChartPtr& vars() const { return vars_; }
  const ChartPtr& over() const { return over_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(std::size_t i) const { return images_[i]; }

  /// Same images with the chart labels replaced by structurally compatible charts.
  PolynomialMap relabeled(ChartPtr vars, ChartPtr over) const;

  friend bool operator==(const PolynomialMap& a, const PolynomialMap& b);

private:
  ChartPtr vars_;
  ChartPtr over_;
  std::vector<Polynomial> images_;
};

Polynomial substitute(const Polynomial& p, const PolynomialMap& m);
/// Pullback composition: compose(f, g) represents f o g (vars of f, over of g).
PolynomialMap compose(const PolynomialMap& f, const PolynomialMap& g);

/// Deterministic rendering: terms in canonical order, reduced fractions.
std::string to_string(const Polynomial& p);
std::string to_string(const Rational& q);

}  // namespace gsa
