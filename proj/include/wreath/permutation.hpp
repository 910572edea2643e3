#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

using Point = std::uint32_t;

/// Cycle type: length -> multiplicity. Fixed points are cycles of length 1.
struct CycleType {
  std::map<std::size_t, std::size_t> alpha;

  std::size_t degree() const;
  std::size_t cycles() const;
  std::size_t multiplicity(std::size_t length) const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// A bijection of {0, ..., degree-1} stored as its image sequence.
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Caller guarantees `images` is a bijection.
  static Permutation unchecked(std::vector<Point> images) noexcept;
  /// Disjoint cycles, 0-indexed points; unmentioned points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const noexcept { return images_[i]; }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Number of cycles, fixed points included.
  std::size_t sigma() const;
  CycleType cycle_type() const;
  std::size_t fixed_points() const noexcept;
  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

/// (a * b)(i) = a(b(i)): b acts first.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}
/// g * x * g^-1
Permutation conjugate(const Permutation& x, const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// 1-indexed cycle notation, e.g. "(1 2 3)(4 5)". Identity prints as "()".
std::string to_cycle_string(const Permutation& p);

/// Parses 1-indexed cycle notation. A degree of 0 infers the largest point
/// mentioned. Errors carry the 1-based column of the offending character.
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);

/// Largest point mentioned in a cycle string (1-indexed), 0 if none.
std::size_t max_point_in_cycles(std::string_view text);

}  // namespace wreath
