#pragma once

// Tangent functor on atlases, tangent lifts, iterated tangents and flips.
//
// Each application of T prepends one {0,1} weight slot. A coordinate x of the
// source chart becomes x[0] (original) and x[1] (dotted); an already indexed
// name base[t] becomes base[0,t] and base[1,t]. The tangent chart lists all
// originals, then all dotted coordinates in the same order.

#include "gsa/action.hpp"
#include "gsa/bundle.hpp"

namespace gsa {

std::string tangent_name(std::string_view name, int bit);
ChartPtr tangent_chart(const ChartPtr& chart);

/// p viewed on the tangent chart (originals keep their positions).
Polynomial lift_to_tangent(const Polynomial& p, const ChartPtr& tchart);
/// Total differential sum_b xdot^b * d f / d x^b on the tangent chart.
Polynomial total_differential(const Polynomial& p, const ChartPtr& tchart);

/// T of a map: f^a on the originals, df^a on the dotted coordinates.
PolynomialMap tangent_of_map(const PolynomialMap& m, const ChartPtr& tvars, const ChartPtr& tover);

Atlas tangent_of_atlas(const Atlas& a);
/// T of a morphism between the given tangent atlases.
BundleMorphism tangent_of_morphism(const BundleMorphism& m, const AtlasPtr& tsource,
                                   const AtlasPtr& ttarget);

/// d_T Y: components f^a on x^a and df^a on xdot^a.
Derivation tangent_lift(const Derivation& y, const ChartPtr& tchart);

/// T^(k) together with its intermediate levels (levels[0] is the source).
struct IteratedTangent {
  std::vector<AtlasPtr> levels;

  std::size_t k() const { return levels.size() - 1; }
  const AtlasPtr& atlas() const { return levels.back(); }
};

IteratedTangent iterated_tangent(const Atlas& a, std::size_t k);

/// Canonical flip of T^(2) N in adapted coordinates: swaps xdot and dx.
PolynomialMap canonical_flip(const ChartPtr& t2chart);

/// Adjacent flip exchanging 0-based slots i and i+1 of T^(k), per chart. It is the
/// canonical flip of T^(k-i) lifted i times by the tangent functor.
std::vector<PolynomialMap> adjacent_flip(const IteratedTangent& it, std::size_t i);

/// The S_k action generated by the adjacent flips (symmetric flavor).
ActionTable flip_action(const IteratedTangent& it);

}  // namespace gsa
