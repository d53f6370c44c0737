#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace haarforge {

using Element = std::uint32_t;

/// Thrown when a multiplication table fails one of the group axioms.
class GroupAxiomError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Finite group stored as a full multiplication table. Element 0 is always
/// the identity; table(a, b) is the product a*b.
class FiniteGroup {
public:
  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  const std::string& name() const { return name_; }

  std::vector<std::vector<Element>> table() const;
  Element power(Element a, long long k) const;
  std::size_t element_order(Element a) const;

  friend FiniteGroup validate_table(const std::vector<std::vector<Element>>& table,
                                    std::string name);

private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::string name_;
};

/// Sorted duplicate-free set of element indices of some group.
class ElementSubset {
public:
  ElementSubset() = default;
  ElementSubset(const FiniteGroup& group, std::vector<Element> members);

  const std::vector<Element>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Element x) const;
  /// True when the set equals its image under inversion.
  bool inverse_closed(const FiniteGroup& group) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

private:
  std::vector<Element> members_;
};

/// Checks closure, identity (must be index 0), associativity and inverses.
/// On failure throws GroupAxiomError naming the axiom and the witnesses.
FiniteGroup validate_table(const std::vector<std::vector<Element>>& table,
                           std::string name = "G");

FiniteGroup cyclic(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup generalized_dihedral(const FiniteGroup& a);
/// Z_m x| Z_k where the generator of Z_k acts on Z_m as t -> r*t.
FiniteGroup semidirect_cyclic(std::size_t m, std::size_t k, long long r);

bool is_abelian(const FiniteGroup& g);

/// Sorted multiset of element orders; a cheap isomorphism invariant.
std::vector<std::size_t> element_order_profile(const FiniteGroup& g);

/// Greedy generating set: repeatedly adds the smallest element outside the
/// subgroup generated so far.
std::vector<Element> generating_set(const FiniteGroup& g);

/// All automorphisms of g, each as an image array. Every returned map is
/// checked to be a bijective homomorphism.
std::vector<std::vector<Element>> group_automorphisms(const FiniteGroup& g);

// Catalog files: name line, order line, then the table row by row.
class CatalogError : public std::runtime_error {
public:
  CatalogError(const std::string& file, std::size_t line, const std::string& what);
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

private:
  std::string file_;
  std::size_t line_;
};

FiniteGroup parse_group(std::istream& in, const std::string& source = "<stream>");
FiniteGroup read_group_file(const std::filesystem::path& path);
void write_group(std::ostream& out, const FiniteGroup& g);
/// Loads every *.txt file under dir (sorted by filename).
std::vector<FiniteGroup> load_catalog(const std::filesystem::path& dir);

}  // namespace haarforge
