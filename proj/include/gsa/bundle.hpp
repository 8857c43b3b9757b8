#pragma once

// Atlas-level model of N-weighted bundles and n-vector bundles.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsa/superalg.hpp"

namespace gsa {

/// Layout of coordinate weights shared by every chart of an atlas.
///
/// Weights have `vector_slots` leading entries in {0,1} (one per vector bundle
/// structure) followed, when `degree` is set, by one N-valued entry bounded by the
/// degree. Plain N-weighted bundles have no vector slots; n-vector bundles have no
/// trailing entry; iterated tangents of weighted bundles have both.
struct AtlasKind {
  std::size_t vector_slots = 0;
  std::optional<int> degree;

  static AtlasKind weighted(int degree) { return {0, degree}; }
  static AtlasKind multivector(std::size_t n) { return {n, std::nullopt}; }

  std::size_t weight_length() const { return vector_slots + (degree ? 1 : 0); }
  bool is_weighted() const { return vector_slots == 0 && degree.has_value(); }
  bool is_multivector() const { return !degree.has_value(); }
  std::string to_string() const;

  friend bool operator==(const AtlasKind&, const AtlasKind&) = default;
};

/// Transition from chart `from` (U) to chart `to` (V): forward has vars V over U,
/// inverse has vars U over V.
struct Transition {
  std::size_t from = 0;
  std::size_t to = 0;
  PolynomialMap forward;
  PolynomialMap inverse;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Triple overlap (u, v, w) on which g_wu = g_wv o g_vu is checked.
struct CocycleTriple {
  std::size_t u = 0, v = 0, w = 0;
  friend bool operator==(const CocycleTriple&, const CocycleTriple&) = default;
};

struct Atlas {
  AtlasKind kind;
  bool nmanifold = false;
  std::vector<ChartPtr> charts;
  std::vector<Transition> transitions;
  std::vector<CocycleTriple> cocycles;

  std::size_t chart_index(std::string_view name) const;
  const Transition* find_transition(std::size_t from, std::size_t to) const;

  friend bool operator==(const Atlas& a, const Atlas& b);
};

using AtlasPtr = std::shared_ptr<const Atlas>;

struct ValidationIssue {
  std::string check;
  std::string message;
};

class ValidationReport {
public:
  void fail(std::string check, std::string message) {
    issues_.push_back({std::move(check), std::move(message)});
  }
  void merge(const ValidationReport& other, const std::string& prefix = {});
  bool ok() const { return issues_.empty(); }
  explicit operator bool() const { return ok(); }
  const std::vector<ValidationIssue>& issues() const { return issues_; }
  bool has(std::string_view check) const;
  std::string to_string() const;

private:
  std::vector<ValidationIssue> issues_;
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const ValidationReport& r) : std::runtime_error(r.to_string()) {}
  using std::runtime_error::runtime_error;
};

ValidationReport validate_chart(const AtlasKind& kind, bool nmanifold, const Chart& chart);
ValidationReport validate_atlas(const Atlas& atlas);

/// Weight field on a chart: sum_A w_A z^A d/dz^A using weight entry `slot`, or the
/// sum of all entries when no slot is given.
Derivation weight_field(const ChartPtr& chart, std::optional<std::size_t> slot = std::nullopt);

/// Weight (Euler) field of every chart. Throws ValidationError if some transition
/// does not relate the fields or (with no slot) if the slot fields fail to commute.
std::vector<Derivation> weight_vector_field(const Atlas& atlas,
                                            std::optional<std::size_t> slot = std::nullopt);

/// Chart-to-chart component of a morphism: map has vars = target chart, over = source chart.
struct ChartMap {
  std::size_t source_chart = 0;
  std::size_t target_chart = 0;
  PolynomialMap map;
  friend bool operator==(const ChartMap&, const ChartMap&) = default;
};

struct BundleMorphism {
  AtlasPtr source;
  AtlasPtr target;
  std::vector<ChartMap> maps;

  const ChartMap* find(std::size_t source_chart, std::size_t target_chart) const;
  friend bool operator==(const BundleMorphism& a, const BundleMorphism& b);
};

BundleMorphism identity_morphism(const AtlasPtr& atlas);
/// g o f, pairing f's target charts with g's source charts.
BundleMorphism compose(const BundleMorphism& g, const BundleMorphism& f);

/// Dilation h_t: every coordinate scaled by t^w, with w the selected weight entry
/// (or the total weight when no slot is given).
BundleMorphism dilation(const AtlasPtr& atlas, const Rational& t,
                        std::optional<std::size_t> slot = std::nullopt);
PolynomialMap dilation_map(const ChartPtr& chart, const Rational& t,
                           std::optional<std::size_t> slot = std::nullopt);

ValidationReport check_morphism(const BundleMorphism& m);

/// Keeps the coordinates accepted by `keep`, assigns them new weights, and sets every
/// other coordinate to zero in all transition data.
struct Restriction {
  std::function<bool(const CoordinateSymbol&)> keep;
  std::function<Weight(const CoordinateSymbol&)> reweight;
  AtlasKind kind;
};
Atlas restrict_atlas(const Atlas& atlas, const Restriction& r);
/// Zero-extension map from the restricted chart: vars = full chart, over = restricted.
PolynomialMap zero_extension(const ChartPtr& full, const ChartPtr& restricted);
/// Restricts a map between full charts to maps between restricted charts.
PolynomialMap restrict_map(const PolynomialMap& m, const ChartPtr& vars_restricted,
                           const ChartPtr& over_restricted);

/// Vector bundle E[alpha] over the total base.
Atlas restrict_to_weight(const Atlas& atlas, const Weight& alpha);
/// (i,j)-core over M_ij (0-based vector slots). A trailing N-weight entry is kept.
Atlas core_bundle(const Atlas& atlas, std::size_t i, std::size_t j);

/// P^sigma: same charts and transition data, weights reindexed w -> w^sigma.
ChartPtr permute_chart(const ChartPtr& chart, const Permutation& sigma);
Atlas permute_slots(const Atlas& atlas, const Permutation& sigma);

/// Inverse of a weight-preserving map (vars N over O) whose component of each weight
/// is an invertible constant linear map modulo products of lower-weight coordinates.
/// Returns the map with vars O over N; throws std::invalid_argument otherwise.
PolynomialMap invert_graded(const PolynomialMap& m);

/// Re-declares an N-weighted atlas with a larger degree bound.
Atlas retype_degree(const Atlas& atlas, int degree);

}  // namespace gsa
