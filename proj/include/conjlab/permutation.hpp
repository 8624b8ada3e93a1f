#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace conjlab {

using Point = std::uint32_t;

/// A bijection on the points 0..degree-1, stored as its image array.
///
/// Products compose left to right: (a * b)[i] == b[a[i]], so a group acts on
/// the right of its points and x^g means g^-1 * x * g.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation unless `images` is a bijection on 0..size-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds from disjoint cycles; points not mentioned are fixed.
  /// Throws InvalidPermutation on out-of-range or repeated points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::uint64_t order() const;

  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Disjoint-cycle notation, e.g. "(0 1 2)(3 4)"; the identity is "()".
  std::string to_cycle_string() const;

  /// Same support extended with fixed points up to `degree`.
  Permutation extended(std::size_t degree, std::size_t shift = 0) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Parses disjoint-cycle notation over 0-based points. Throws ParseError.
Permutation parse_cycles(std::size_t degree, const std::string& text);

}  // namespace conjlab
