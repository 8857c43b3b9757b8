#pragma once

// Symmetric and skew-symmetric S_n actions: validation, adapted (nice) coordinates
// and the functor Xi between the two flavors.

#include "gsa/action.hpp"

namespace gsa {

/// Checks that the table is an action of S_n by bundle isomorphisms E -> E^sigma:
/// every element present, identity and the group law, homogeneity and transition
/// compatibility of each I^sigma, and the flavor's condition on the (i,j)-cores
/// (identity for symmetric, -1 on the fibers for skew).
ValidationReport validate_action(const ActionTable& table);

/// Checks that every I^sigma permutes coordinates: the k-th coordinate of weight
/// alpha and a given parity pulls back to the k-th coordinate of weight alpha^sigma,
/// times sgn(alpha, sigma) for skew tables.
ValidationReport check_nice(const ActionTable& table);

struct NiceCoordinates {
  AtlasPtr atlas;
  ActionTable action;
  BundleMorphism to_nice;
  BundleMorphism from_nice;
};

/// Adapted coordinates of a symmetric action by averaging over stabilizers and orbits.
/// New coordinates keep the names, weights and parities of the old ones.
NiceCoordinates nice_coordinates(const ActionTable& table);

/// Xi: the total reversion Pi E with J^sigma = Phi^sigma o Pi(I^sigma). The flavor flips.
ActionTable xi_functor(const ActionTable& table);
/// Inverse of xi_functor: recovers E and I^sigma = Pi^{-1}((Phi^sigma)^{-1} o J^sigma).
ActionTable xi_inverse(const ActionTable& table);

/// f o I_1^sigma == I_2^sigma o f chartwise for every sigma.
ValidationReport check_intertwines(const BundleMorphism& f, const ActionTable& a1, const ActionTable& a2);

}  // namespace gsa
