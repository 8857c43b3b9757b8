#pragma once

// Seeded generators for random atlases, morphisms and polynomials.

#include <cstdint>
#include <random>

#include "gsa/bundle.hpp"

namespace gsa {

struct RandomAtlasOptions {
  AtlasKind kind = AtlasKind::weighted(2);
  bool nmanifold = false;
  std::size_t charts = 2;  // 2 or 3; three charts come with a declared cocycle
  std::size_t even_base = 1;
  std::size_t odd_base = 0;
  int max_per_weight = 2;  // fiber coordinates per weight (and parity when free)
  int max_terms = 2;       // nonlinear terms per transition component
  int max_factors = 3;
};

class AtlasGenerator {
public:
  explicit AtlasGenerator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  Rational coefficient(bool nonzero = true);
  std::mt19937_64& rng() { return rng_; }

  /// Random coordinate layout for the given kind.
  std::vector<CoordinateSymbol> layout(const RandomAtlasOptions& o);

  /// Invertible triangular map z^k -> c_k z^k + P_k(earlier coordinates), homogeneous
  /// and parity preserving. vars and over must share one coordinate layout; the
  /// inverse (vars = over, over = vars) is written to `inverse`.
  PolynomialMap triangular(const ChartPtr& vars, const ChartPtr& over, PolynomialMap* inverse,
                           int max_terms = 2, int max_factors = 3);

  Atlas atlas(const RandomAtlasOptions& o);

  /// Automorphism determined by a random triangular map on chart 0, transported to
  /// the other charts along the transitions out of chart 0.
  BundleMorphism automorphism(const AtlasPtr& a, int max_terms = 2);

  /// Same bundle in new coordinates: returns the recoordinatized atlas and the
  /// isomorphism from `a` to it.
  std::pair<AtlasPtr, BundleMorphism> recoordinatize(const AtlasPtr& a, int max_terms = 2);

  /// Random homogeneous polynomial of the given weight and parity on a chart.
  Polynomial homogeneous(const ChartPtr& chart, const Weight& w, Parity p, int max_terms = 3,
                         int max_factors = 3);

private:
  std::mt19937_64 rng_;
};

}  // namespace gsa
