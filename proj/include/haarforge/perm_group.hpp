#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "haarforge/permutation.hpp"

namespace haarforge {

using BigInt = boost::multiprecision::cpp_int;

/// One level of a stabilizer chain: the basic orbit of `point` under the
/// stabilizer of all earlier base points, with a transversal element
/// mapping `point` to each orbit point.
struct ChainLevel {
  Point point = 0;
  std::vector<Point> orbit;
  std::vector<int> transversal_index;  // per point, -1 outside the orbit
  std::vector<Permutation> transversal;

  bool in_orbit(Point x) const { return transversal_index[x] >= 0; }
  const Permutation& transversal_for(Point x) const { return transversal[transversal_index[x]]; }
};

struct StabilizerChain {
  std::vector<ChainLevel> levels;
  std::vector<Permutation> strong_generators;

  std::vector<Point> base() const;
  BigInt order() const;
  /// Strips p through levels [from, size). Returns the residue and the level
  /// where stripping stopped (levels.size() when it went all the way).
  std::pair<Permutation, std::size_t> strip(Permutation p, std::size_t from = 0) const;
};

/// Deterministic Schreier-Sims stabilizer chain. Base points are taken from
/// `base_prefix` first, then greedily as lowest moved points.
StabilizerChain schreier_sims(std::size_t degree, std::span<const Permutation> generators,
                              std::span<const Point> base_prefix = {});

/// Finitely generated permutation group. The stabilizer chain is built on
/// first use; copies share it, and concurrent first use is serialized.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const;

  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& p) const;
  /// Orbit partition, each orbit sorted, orbits ordered by least point.
  std::vector<std::vector<Point>> orbits() const;
  std::vector<Point> orbit(Point x) const;

  /// Every element, by closure; throws past `cap` elements.
  std::vector<Permutation> enumerate_elements(std::size_t cap = 10000) const;

private:
  struct Lazy;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> base_prefix_;
  std::shared_ptr<Lazy> lazy_;
};

BigInt group_order(const PermGroup& g);
std::vector<std::vector<Point>> orbits(const PermGroup& g);
bool membership(const PermGroup& g, const Permutation& p);
/// True iff G is transitive on `points` with |G| = |points|. Throws if the
/// point set is not G-invariant.
bool is_regular_on(const PermGroup& g, std::span<const Point> points);

/// Brute-force closure of the generators (oracle only, hard cap 10^4).
std::vector<Permutation> brute_force_closure(const PermGroup& g);

}  // namespace haarforge
