// Permutations on dense 0-based points, plus cycle-notation I/O.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gsym {

// A bijection on {0, ..., degree-1}, stored as an image table.
// Products follow the right-action convention: (p * q) maps x to q[p[x]],
// i.e. p is applied first.
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(int degree);

  // Takes the image table; throws std::invalid_argument unless it is a
  // bijection on {0, ..., images.size()-1}.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Least common multiple of the cycle lengths.
  std::uint64_t element_order() const;

  std::vector<int> moved_points() const;
  int smallest_moved_point() const;  // -1 for the identity

  bool operator==(const Permutation& other) const = default;

  std::string to_cycle_string() const;

private:
  std::vector<int> images_;
};

// Applies p first, then q. Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

// g^-1 * p * g, the relabeling of p along g.
Permutation conjugate(const Permutation& p, const Permutation& g);

// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
// Commas are accepted as separators. Every point must be < degree.
Permutation parse_cycles(std::string_view text, int degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace gsym
