#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "haarforge/classify.hpp"
#include "haarforge/constructions.hpp"
#include "haarforge/permutation.hpp"

namespace haarforge {

// Symmetries of the double generalized Petersen graphs D(n, r), in the
// vertex layout of DgpLabeling.

struct StandardAutomorphisms {
  Permutation alpha;  // u_i -> u_{i+1} etc.
  Permutation beta;   // u <-> z, v <-> w
  Permutation gamma;  // i -> -i
};

/// Throws std::invalid_argument for parameters that do not give a simple
/// D(n, r), and std::logic_error if a map fails to preserve the edge set.
StandardAutomorphisms standard_automorphisms(long long n, long long r);

class DeltaError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct DeltaAutomorphism {
  long long n = 0;
  long long r = 0;             // as given, reduced mod n
  long long normalized_r = 0;  // 0 < r' < m, r' odd
  long long m = 0;
  /// Automorphism of D(n, r) itself.
  Permutation delta;
  /// The isomorphism D(n, r) -> D(n, normalized_r) (identity when none was
  /// needed) and delta for the normalized parameters.
  Permutation normalizing_map;
  Permutation normalized_delta;
};

/// Requires n even and r^2 = -1 (mod n/2). Throws DeltaError otherwise.
DeltaAutomorphism delta_automorphism(long long n, long long r);

struct HaarWitnessReport {
  long long n = 0;
  long long r = 0;
  long long m = 0;
  bool preserves_edges = false;
  bool preserves_parts = false;
  /// +1 if delta^-1 alpha^2 delta = alpha^{2r}, -1 if it is alpha^{-2r},
  /// 0 if neither.
  int conjugation_sign = 0;
  BigInt group_order = 0;
  bool regular_on_part0 = false;
  bool regular_on_part1 = false;
  bool matches_semidirect = false;  // order and element-order profile
  std::vector<Permutation> generators;  // alpha^2, delta

  bool passed() const {
    return preserves_edges && preserves_parts && conjugation_sign != 0 &&
           group_order == 2 * n && regular_on_part0 && regular_on_part1 && matches_semidirect;
  }
};

HaarWitnessReport verify_haar_witness(long long n, long long r);

enum class DnrBranch { odd_or_nonresidue, square_residue, negative_residue, dodecahedral_exception };

std::string to_string(DnrBranch b);

struct DnrPrediction {
  long long n = 0;
  long long r = 0;
  std::optional<long long> m;
  bool vertex_transitive = false;
  bool cayley = false;
  bool haar = false;
  DnrBranch branch = DnrBranch::odd_or_nonresidue;
};

/// The classification of D(n, r) by vertex-transitivity, Cayley and Haar
/// properties. When m = 2, r^2 = 1 = -1 (mod m); the square-residue branch
/// is taken.
DnrPrediction predict_dnr(long long n, long long r);

struct DnrCheck {
  long long n = 0;
  long long r = 0;
  DnrPrediction predicted;
  bool vertex_transitive = false;
  bool cayley = false;
  bool haar = false;
  bool arc_transitive = false;
  std::size_t orbit_count = 0;
  BigInt aut_order = 0;

  bool matches() const {
    return vertex_transitive == predicted.vertex_transitive && cayley == predicted.cayley &&
           haar == predicted.haar;
  }
};

/// Classifies D(n, r) for the given parameters, using the standard
/// automorphisms and (where it applies) delta as seeds for the searches.
DnrCheck check_dnr(long long n, long long r);

/// All 3 <= n <= max_n, 0 < r < n with 2r != n, sorted by (n, r). Work is
/// spread over `workers` threads (0 means hardware concurrency).
std::vector<DnrCheck> verify_theorems(long long max_n, unsigned workers = 0);

}  // namespace haarforge
