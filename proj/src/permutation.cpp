#include "gsa/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gsa {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  auto p = identity(n);
  std::swap(p.image_.at(i), p.image_.at(j));
  return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& one_line) {
  std::vector<int> img;
  img.reserve(one_line.size());
  for (int v : one_line) img.push_back(v - 1);
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<Permutation> out;
  auto img = identity(n).image_;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) inv[image_[k]] = static_cast<int>(k);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < image_.size(); ++k)
    if (image_[k] != static_cast<int>(k)) return false;
  return true;
}

int Permutation::sign() const {
  int s = 1;
  for (std::size_t i = 0; i < image_.size(); ++i)
    for (std::size_t j = i + 1; j < image_.size(); ++j)
      if (image_[i] > image_[j]) s = -s;
  return s;
}

std::vector<std::size_t> Permutation::adjacent_word() const {
  // sigma = sigma' * s_i whenever sigma has a descent at i; peel descents off the right.
  std::vector<std::size_t> reversed;
  auto cur = image_;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        reversed.push_back(i);
        again = true;
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  for (int v : image_) out.push_back(v + 1);
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < image_.size(); ++k) os << (k ? " " : "") << image_[k] + 1;
  os << ')';
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) img[k] = a(b(k));
  return Permutation(std::move(img));
}

}  // namespace gsa
