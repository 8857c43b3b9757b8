#include "gsa/action.hpp"

namespace gsa {

std::string_view to_string(Flavor f) { return f == Flavor::Symmetric ? "symmetric" : "skew"; }

const std::vector<PolynomialMap>& ActionTable::at(const Permutation& sigma) const {
  auto it = maps.find(sigma);
  if (it == maps.end()) throw std::out_of_range("action table has no entry for " + sigma.to_string());
  return it->second;
}

BundleMorphism action_morphism(const ActionTable& table, const Permutation& sigma) {
  auto target = std::make_shared<const Atlas>(permute_slots(*table.atlas, sigma));
  BundleMorphism m{table.atlas, target, {}};
  const auto& charts = table.at(sigma);
  for (std::size_t c = 0; c < charts.size(); ++c)
    m.maps.push_back({c, c, charts[c].relabeled(target->charts[c], table.atlas->charts[c])});
  return m;
}

std::vector<PolynomialMap> compose_charts(const std::vector<PolynomialMap>& a,
                                          const std::vector<PolynomialMap>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose_charts: chart count mismatch");
  std::vector<PolynomialMap> out;
  for (std::size_t c = 0; c < a.size(); ++c) out.push_back(compose(a[c], b[c]));
  return out;
}

ActionTable generate_action(const AtlasPtr& atlas, Flavor flavor,
                            const std::vector<std::vector<PolynomialMap>>& adjacent) {
  const std::size_t n = atlas->kind.vector_slots;
  if (n >= 1 && adjacent.size() != n - 1)
    throw std::invalid_argument("generate_action: expected one generator per adjacent transposition");
  ActionTable t{atlas, flavor, {}};
  std::vector<PolynomialMap> id;
  for (const auto& ch : atlas->charts) id.push_back(PolynomialMap::identity(ch));
  for (const auto& sigma : Permutation::all(n)) {
    auto cur = id;
    auto word = sigma.adjacent_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = compose_charts(adjacent[*it], cur);
    t.maps.emplace(sigma, std::move(cur));
  }
  return t;
}

}  // namespace gsa
