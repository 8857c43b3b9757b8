#pragma once

// S_n actions on n-vector atlases.

#include <map>
#include <vector>

#include "gsa/bundle.hpp"

namespace gsa {

enum class Flavor { Symmetric, Skew };
std::string_view to_string(Flavor f);

/// Action of S_n by atlas automorphisms. For every sigma the table holds one map per
/// chart, with vars = over = that chart; as a bundle morphism it goes E -> E^sigma.
struct ActionTable {
  AtlasPtr atlas;
  Flavor flavor = Flavor::Symmetric;
  std::map<Permutation, std::vector<PolynomialMap>> maps;

  std::size_t degree() const { return atlas->kind.vector_slots; }
  const std::vector<PolynomialMap>& at(const Permutation& sigma) const;
};

/// I^sigma as a morphism E -> permute_slots(E, sigma).
BundleMorphism action_morphism(const ActionTable& table, const Permutation& sigma);

/// Chartwise composition a o b of two automorphism lists.
std::vector<PolynomialMap> compose_charts(const std::vector<PolynomialMap>& a,
                                          const std::vector<PolynomialMap>& b);

/// Extends the images of the adjacent transpositions s_0 ... s_{n-2} to all of S_n
/// along adjacent words: I^sigma = I^{s_w0} o I^{s_w1} o ...
ActionTable generate_action(const AtlasPtr& atlas, Flavor flavor,
                            const std::vector<std::vector<PolynomialMap>>& adjacent);

}  // namespace gsa
