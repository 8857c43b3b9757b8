#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gsa {

/// Element of the symmetric group S_n in one-line notation (0-based internally).
///
/// Composition follows function composition: (a * b)(k) = a(b(k)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(std::size_t n);
  /// Transposition of the 0-based positions i and j.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
  /// Parses 1-based one-line notation, e.g. {2, 1, 3}.
  static Permutation from_one_based(const std::vector<int>& one_line);
  /// All elements of S_n in lexicographic order of their one-line form.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return image_.size(); }
  int operator()(std::size_t k) const { return image_[k]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;

  /// Factorization into adjacent transpositions s_i = (i, i+1):
  /// *this == s_{w[0]} * s_{w[1]} * ... with the returned indices w.
  std::vector<std::size_t> adjacent_word() const;

  std::vector<int> one_based() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> image_;
};

}  // namespace gsa
