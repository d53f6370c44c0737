#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace haarforge {

using Point = std::uint32_t;

/// Bijection of {0, ..., degree-1} stored as an image array.
///
/// Composition convention, used throughout the library: compose(p, q)
/// applies p first, then q, so compose(p, q)[i] == q[p[i]].
class Permutation {
public:
  Permutation() = default;
  /// Validates that images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// The cycle (c0 c1 ... ck) on `degree` points.
  static Permutation cycle(std::size_t degree, std::span<const Point> points);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  Point apply(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;
  /// Lengths of all cycles, including fixed points, sorted ascending.
  std::vector<std::size_t> cycle_type() const;
  std::size_t fixed_point_count() const;
  Point lowest_moved_point() const;  // degree() when identity

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string to_cycle_string() const;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// Apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation power(const Permutation& p, long long k);
/// compose(compose(inverse(c), p), c): the image of p under relabelling by c.
Permutation conjugate(const Permutation& p, const Permutation& c);

}  // namespace haarforge
