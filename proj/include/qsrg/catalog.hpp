#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsrg/group.hpp"

namespace qsrg {

// Families of small groups with pinned element orderings, so that element
// indices in reports and tests are stable across runs and versions.

// Z_n with elements 0..n-1 as residues; table[i][j] = (i + j) mod n.
FiniteGroup cyclic_group(int n);

// Dihedral group of the given (even) order 2m.  Element i + j*m encodes
// r^i s^j for 0 <= i < m, j in {0,1}, using s r = r^-1 s.
FiniteGroup dihedral_group(int order);

// S_n for n <= 4.  Elements are the one-line permutations of {1..n} in
// lexicographic order, so index 0 is the identity.  Product applies the
// right factor first.
FiniteGroup symmetric_group(int n);

// The eight quaternions ordered 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group();

// One-line form of the symmetric-group element with the given index, and back.
std::vector<int> symmetric_one_line(int n, int index);
int symmetric_element_index(int n, const std::vector<int>& one_line);

// Text format: optional '#' comment lines, a line "order <n>", an optional
// line "label <text>", then n rows of n indices.
FiniteGroup read_group_table(std::istream& in);
FiniteGroup read_group_table_file(const std::string& path);
void write_group_table(const FiniteGroup& g, std::ostream& out);

struct GroupSpec {
  enum class Family { cyclic, dihedral, symmetric, quaternion, product, file };
  Family family = Family::cyclic;
  int param = 0;
  std::string path;
  std::vector<GroupSpec> factors;
};

// Grammar: "cyclic:N", "dihedral:N", "symmetric:N", "quaternion",
// "product(<spec>,<spec>)", "file:<path>".
GroupSpec parse_group_spec(const std::string& text);
FiniteGroup realize_group(const GroupSpec& spec);

// Subgroup generators: a comma-separated list of element indices, or for the
// symmetric family also cycles like "(12)" or "(123)(4)".
std::vector<int> parse_subgroup_generators(const std::string& text,
                                           const GroupSpec& spec,
                                           const FiniteGroup& g);

// Catalog used by sweeps: cyclic, dihedral (order >= 6), symmetric (orders 6
// and 24), quaternion, and two-factor products Z_a x Z_b with a <= b, in a
// fixed order.  Isomorphic constructions with different labels both appear.
std::vector<FiniteGroup> catalog_groups_of_order(int order);

}  // namespace qsrg
