#pragma once

// Polarization of N-weighted atlases into symmetric n-vector atlases, the way back
// (diagonalization and the diag embedding) and desuperization.

#include "gsa/symmetry.hpp"
#include "gsa/tangent.hpp"

namespace gsa {

struct Polarization {
  AtlasPtr source;
  IteratedTangent tangent;
  AtlasPtr atlas;
  ActionTable action;
  /// Per chart and polarized coordinate: source coordinate index and its weight alpha.
  std::vector<std::vector<std::pair<std::size_t, Weight>>> origin;
};

/// E^(n) inside T^(n) E: keeps u_0 for base coordinates and z_alpha with |alpha| = w(z)
/// for the others, with the restricted flip action. Throws ValidationError on an
/// invalid source and std::invalid_argument on a wrong kind or degree.
Polarization polarize(const AtlasPtr& source, std::size_t n);

/// T^(n) f restricted to the polarizations. f must go p1.source -> p2.source.
BundleMorphism polarize_morphism(const BundleMorphism& f, const Polarization& p1, const Polarization& p2);

struct Diagonalization {
  AtlasPtr atlas;  ///< N-weighted, degree n
  NiceCoordinates nice;
  std::vector<PolynomialMap> project;  ///< vars = collapsed chart, over = nice chart
  std::vector<PolynomialMap> embed;    ///< vars = nice chart, over = collapsed chart
};

/// Fixed points of a symmetric action: in nice coordinates z_alpha = z_beta whenever
/// |alpha| = |beta|, one coordinate per class named after the lexicographically first
/// alpha (with its index suffix dropped when that stays unique).
Diagonalization diagonalize(const ActionTable& table);

/// z^(alpha) o diag = c z with c = |alpha| (Weight) or w(z)! (Factorial).
enum class DiagScale { Weight, Factorial };
BundleMorphism diag_embedding(const Polarization& p, DiagScale scale = DiagScale::Weight);

/// E -> diagonalize(polarization): diag followed by the nice change and the collapse.
BundleMorphism roundtrip_isomorphism(const Polarization& p, const Diagonalization& d,
                                     DiagScale scale = DiagScale::Factorial);

/// The N-weighted atlas with weight the sum of all entries (degree = vector slots
/// plus the trailing degree).
Atlas total_weighting(const Atlas& a);
/// check_morphism after replacing source and target by their total weightings.
ValidationReport check_weighted_morphism(const BundleMorphism& m);

/// Empty report iff every I^sigma fixes the image of m (m goes into table.atlas).
ValidationReport check_fixed(const BundleMorphism& m, const ActionTable& table);

/// Xi of the polarization: a skew n-vector atlas, purely even for N-manifolds.
ActionTable desuperize(const AtlasPtr& source, std::size_t n);
/// Pi of the polarized morphism.
BundleMorphism desuperize_morphism(const BundleMorphism& f, const Polarization& p1, const Polarization& p2);

}  // namespace gsa
