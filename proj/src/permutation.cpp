#include "haarforge/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace haarforge {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation: image array is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::cycle(std::size_t degree, std::span<const Point> points) {
  auto img = identity(degree).images_;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= degree) throw std::invalid_argument("cycle: point out of range");
    img[points[i]] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv), Unchecked{});
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t count = 0;
  for (Point i = 0; i < images_.size(); ++i) count += images_[i] == i;
  return count;
}

Point Permutation::lowest_moved_point() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (j != i) out += ',';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()) + ")");
  std::vector<Point> img(p.degree());
  for (Point i = 0; i < img.size(); ++i) img[i] = q.images_[p.images_[i]];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? p.inverse() : p;
  if (k < 0) k = -k;
  Permutation result = Permutation::identity(p.degree());
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& c) {
  return compose(compose(c.inverse(), p), c);
}

}  // namespace haarforge
