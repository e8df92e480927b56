#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsrg/perm.hpp"

namespace qsrg {

// Finite group given by its full multiplication table.  Elements are the
// indices 0..n-1; the identity need not be index 0.  Construction always
// goes through validate_table, so an instance is a checked group.
class FiniteGroup {
 public:
  // Checks that `table` is a Latin square with a two-sided identity,
  // associative, and with two-sided inverses.  Throws std::invalid_argument
  // with a NotLatinSquare / NoIdentity / NotAssociative / NoInverse message
  // naming the offending cells.
  static FiniteGroup validate_table(const std::vector<std::vector<int>>& table,
                                    std::string label = "");

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }

  int element_order(int a) const;
  bool is_abelian() const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Row-major copy of the table, for serialization.
  std::vector<std::vector<int>> table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;
  int n_ = 0;
  int e_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<int> inv_;
  std::string label_;
};

// Subgroup of a specific parent group, stored as a sorted member list.
// Construction validates closure, identity and inverses against the parent.
// Operations that take (group, subgroup) pairs check the orders agree, which
// catches most cross-group mixups.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const { return mask_[g] != 0; }
  int parent_order() const { return parent_order_; }

  std::string describe() const;  // "{0,3}"

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_order_ == b.parent_order_ && a.members_ == b.members_;
  }

 private:
  std::vector<int> members_;
  std::vector<char> mask_;
  int parent_order_ = 0;
};

// Group automorphism: a permutation of element indices that respects the
// multiplication table.  The constructor re-checks this.
struct GroupAut {
  GroupAut(const FiniteGroup& group, Perm mapping);
  Perm mapping;
};

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

// Closure of `generators` under multiplication.
Subgroup subgroup_generate(const FiniteGroup& g, const std::vector<int>& generators);

// Every subgroup, sorted by (order, members).  Join-closure of the cyclic
// subgroups; refuses groups above `order_bound`.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_bound = 16);

enum class CosetSide { left, right };

// Coset partition of G by H, blocks sorted internally and ordered by their
// minimal element.
std::vector<std::vector<int>> cosets(const FiniteGroup& g, const Subgroup& h,
                                     CosetSide side);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

// First pair (g1, g2) outside H with Hg1 == Hg2 but g1H != g2H, scanning in
// ascending order; empty when H is normal (and only then).
std::optional<std::pair<int, int>> witness_coset_asymmetry(const FiniteGroup& g,
                                                           const Subgroup& h);

Subgroup commutator_subgroup(const FiniteGroup& g);

// Quotient group G/H for normal H.  Element 0 is the block H; the remaining
// blocks are ordered by their minimal element.  Throws NotNormal otherwise.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& h);

bool is_elementary_abelian(const FiniteGroup& g);

// Greedy generating set: repeatedly adjoin the smallest element outside the
// closure so far.  Empty for the trivial group.
std::vector<int> minimal_generating_set(const FiniteGroup& g);

// Full automorphism group, sorted by image vector.  Searches images of a
// minimal generating set, restricted to elements of matching order, and
// validates each candidate as a homomorphism.
std::vector<GroupAut> automorphism_group(const FiniteGroup& g, int order_bound = 16);

// Automorphisms fixing H setwise.
std::vector<GroupAut> aut_stabilizing_subgroup(const FiniteGroup& g, const Subgroup& h,
                                               int order_bound = 16);

}  // namespace qsrg
