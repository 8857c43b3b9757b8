#pragma once

// Parity reversion of multiple vector bundles and the isomorphisms Phi^sigma.
//
// Slots are 0-based here. Pi^k flips the parity of every coordinate whose weight
// has a 1 in slot k. Transition data is rewritten monomial by monomial: the unique
// factor carrying slot k is brought to the front with the other fiber factors
// after it and base factors last (coefficients stay on the right), its parity is
// flipped, and the monomial is renormalized.

#include "gsa/bundle.hpp"

namespace gsa {

/// Koszul sign of reordering the 1-entries of alpha into alpha^sigma: -1 to the
/// number of pairs i < j with alpha(sigma(i)) = alpha(sigma(j)) = 1 and
/// sigma(i) > sigma(j). Satisfies sgn(a, s's) = sgn(a^s', s) sgn(a, s').
int koszul_sign(const Weight& alpha, const Permutation& sigma);

/// Name of the reversed coordinate: toggles a "_pi" tag placed before any index.
std::string reversed_name(std::string_view name);

ChartPtr reverse_chart(const ChartPtr& chart, std::size_t slot);
/// Pi^slot of one map; the result has vars = new_vars and over = new_over.
PolynomialMap reverse_map(const PolynomialMap& m, std::size_t slot, const ChartPtr& new_vars,
                          const ChartPtr& new_over);

Atlas reverse_parity(const Atlas& a, std::size_t slot);
BundleMorphism reverse_parity(const BundleMorphism& m, std::size_t slot, const AtlasPtr& source,
                              const AtlasPtr& target);

/// Pi^{order(1)} o ... o Pi^{order(n)} (order(n) applied first), followed by the
/// renaming z -> z_pi of every coordinate with a nonzero vector-slot weight. The identity order is
/// the total reversion Pi.
Atlas total_reversion(const Atlas& a, const Permutation& order);
Atlas total_reversion(const Atlas& a);
BundleMorphism total_reversion(const BundleMorphism& m, const Permutation& order);
BundleMorphism total_reversion(const BundleMorphism& m);

/// P^sigma on morphisms: same maps between the slot-permuted atlases.
BundleMorphism permute_morphism(const BundleMorphism& m, const Permutation& sigma);

/// Phi^sigma_E : Pi(E^sigma) -> (Pi E)^sigma, z -> sgn(w_z, sigma) z chartwise.
BundleMorphism phi_iso(const Atlas& a, const Permutation& sigma);

}  // namespace gsa
