#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "qdouble/report.hpp"

namespace qdouble {

/// An element of a FiniteGroup, addressed by its index in the group's element
/// list. Index 0 is always the identity.
struct GroupElement {
  int index = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite group given by its multiplication table.
class FiniteGroup {
 public:
  /// Takes an n*n row-major table. Validates shape and index range and locates
  /// the identity, but does not check the group axioms (see verify_group).
  /// Throws if index 0 is not a two-sided identity or some element has no
  /// inverse.
  FiniteGroup(std::string label, int size, std::vector<int> mul_table);

  int size() const noexcept { return size_; }
  const std::string& label() const noexcept { return label_; }
  GroupElement identity() const noexcept { return {0}; }

  GroupElement mul(GroupElement a, GroupElement b) const;
  GroupElement inv(GroupElement a) const;
  /// x^{-1} s x
  GroupElement conj(GroupElement x, GroupElement s) const;

  // Unchecked index forms used in inner loops.
  int mul(int a, int b) const noexcept { return table_[static_cast<std::size_t>(a * size_ + b)]; }
  int inv(int a) const noexcept { return inv_[static_cast<std::size_t>(a)]; }
  int conj(int x, int s) const noexcept { return mul(mul(inv(x), s), x); }

  bool is_abelian() const;
  int element_order(int a) const;
  const std::vector<int>& table() const noexcept { return table_; }

 private:
  std::string label_;
  int size_;
  std::vector<int> table_;
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Catalog constructors. Element 0 is the identity.
GroupPtr cyclic_group(int n);          // residues mod n, index = residue
GroupPtr dihedral_group(int n);        // symmetries of the n-gon, order 2n
GroupPtr symmetric_group(int n);       // n <= 4
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);  // index = i*|b| + j

/// Parses `zn:4`, `s:3`, `d:4`, `prod(zn:2,zn:2)`, `trivial`.
GroupPtr make_group(const std::string& descriptor);

/// Associativity, two-sided identity, two-sided inverses and the Latin square
/// property. Failures carry a witness tuple.
Report verify_group(const FiniteGroup& g);

/// verify_group on a raw table that may not even define a group. Used for
/// corrupted-table checks where the FiniteGroup constructor would refuse.
Report verify_group_table(int size, const std::vector<int>& table);

/// The replayable clauses behind verify_group_table.
ClauseList group_clauses(int size, std::vector<int> table);

}  // namespace qdouble
