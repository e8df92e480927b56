#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "qsrg/catalog.hpp"
#include "qsrg/errors.hpp"
#include "qsrg/group.hpp"

using qsrg::catalog_groups_of_order;
using qsrg::cyclic_group;
using qsrg::dihedral_group;
using qsrg::FiniteGroup;
using qsrg::GroupSpec;
using qsrg::parse_error;
using qsrg::parse_group_spec;
using qsrg::parse_subgroup_generators;
using qsrg::quaternion_group;
using qsrg::read_group_table;
using qsrg::realize_group;
using qsrg::symmetric_element_index;
using qsrg::symmetric_group;
using qsrg::symmetric_one_line;
using qsrg::write_group_table;

TEST_CASE("cyclic groups add residues") {
  FiniteGroup z6 = cyclic_group(6);
  CHECK(z6.order() == 6);
  CHECK(z6.label() == "Z6");
  CHECK(z6.identity() == 0);
  CHECK(z6.mul(2, 5) == 1);
  CHECK(z6.inv(2) == 4);
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.element_order(2) == 3);
  CHECK(cyclic_group(1).order() == 1);
  CHECK_THROWS_AS(cyclic_group(0), parse_error);
}

TEST_CASE("dihedral groups satisfy the defining relations") {
  FiniteGroup d4 = dihedral_group(8);
  CHECK(d4.order() == 8);
  CHECK(d4.label() == "D4");
  const int r = 1;         // rotation by one step
  const int s = 4;         // first reflection: index rot + flip*4
  CHECK(d4.element_order(r) == 4);
  CHECK(d4.element_order(s) == 2);
  // s r s = r^-1
  CHECK(d4.mul(d4.mul(s, r), s) == d4.inv(r));
  CHECK(!d4.is_abelian());

  // Every reflection squares to the identity.
  for (int k = 0; k < 4; ++k) CHECK(d4.element_order(4 + k) == 2);

  CHECK(dihedral_group(2).order() == 2);
  CHECK_THROWS_AS(dihedral_group(7), parse_error);
  CHECK_THROWS_AS(dihedral_group(0), parse_error);
}

TEST_CASE("symmetric groups use lexicographic one-line indexing") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.order() == 6);
  CHECK(s3.label() == "S3");
  CHECK(s3.identity() == 0);

  CHECK(symmetric_one_line(3, 0) == std::vector<int>{1, 2, 3});
  CHECK(symmetric_one_line(3, 5) == std::vector<int>{3, 2, 1});
  for (int i = 0; i < 6; ++i) CHECK(symmetric_element_index(3, symmetric_one_line(3, i)) == i);

  // Index 2 is (12), index 5 is (13); applying (13) first then (12) gives
  // (132), whose one-line form 312 has index 4.
  CHECK(s3.mul(2, 5) == 4);
  CHECK(s3.mul(5, 2) == 3);
  CHECK(!s3.is_abelian());

  FiniteGroup s4 = symmetric_group(4);
  CHECK(s4.order() == 24);
  int by_order[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 24; ++i) ++by_order[s4.element_order(i)];
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 9);
  CHECK(by_order[3] == 8);
  CHECK(by_order[4] == 6);

  CHECK_THROWS_AS(symmetric_group(5), parse_error);
}

TEST_CASE("quaternion multiplication follows the ijk relations") {
  FiniteGroup q8 = quaternion_group();
  CHECK(q8.order() == 8);
  CHECK(q8.label() == "Q8");
  const int minus_one = 1, i = 2, j = 4, k = 6;
  CHECK(q8.mul(i, i) == minus_one);
  CHECK(q8.mul(j, j) == minus_one);
  CHECK(q8.mul(k, k) == minus_one);
  CHECK(q8.mul(i, j) == k);
  CHECK(q8.mul(j, k) == i);
  CHECK(q8.mul(k, i) == j);
  CHECK(q8.mul(j, i) == k + 1);  // -k
  CHECK(q8.mul(k, j) == i + 1);  // -i
  CHECK(q8.mul(i, k) == j + 1);  // -j
  CHECK(q8.element_order(minus_one) == 2);
  CHECK(q8.element_order(i) == 4);
  CHECK(q8.inv(i) == i + 1);
}

TEST_CASE("group tables round-trip through the text format") {
  FiniteGroup q8 = quaternion_group();
  std::ostringstream out;
  write_group_table(q8, out);
  std::istringstream in(out.str());
  FiniteGroup back = read_group_table(in);
  CHECK(back == q8);
  CHECK(back.label() == "Q8");
}

TEST_CASE("table reader skips comments and validates the result") {
  std::istringstream good("# a comment\norder 2\n\nlabel two\n0 1\n1 0\n");
  FiniteGroup g = read_group_table(good);
  CHECK(g.order() == 2);
  CHECK(g.label() == "two");

  std::istringstream bad_header("size 2\n0 1\n1 0\n");
  CHECK_THROWS_WITH_AS(read_group_table(bad_header), doctest::Contains("header"),
                       parse_error);

  std::istringstream truncated("order 3\n0 1 2\n1 2 0\n");
  CHECK_THROWS_AS(read_group_table(truncated), parse_error);

  std::istringstream not_numeric("order 2\n0 x\n1 0\n");
  CHECK_THROWS_WITH_AS(read_group_table(not_numeric), doctest::Contains("non-numeric"),
                       parse_error);

  std::istringstream ragged("order 2\n0 1 1\n1 0\n");
  CHECK_THROWS_AS(read_group_table(ragged), parse_error);

  // Structural violations surface as parse errors with the validation text.
  std::istringstream not_latin("order 2\n0 0\n1 1\n");
  CHECK_THROWS_WITH_AS(read_group_table(not_latin), doctest::Contains("NotLatinSquare"),
                       parse_error);
}

TEST_CASE("group specs cover the catalog families") {
  CHECK(realize_group(parse_group_spec("cyclic:6")).label() == "Z6");
  CHECK(realize_group(parse_group_spec("dihedral:8")).order() == 8);
  CHECK(realize_group(parse_group_spec("symmetric:4")).order() == 24);
  CHECK(realize_group(parse_group_spec("quaternion")).label() == "Q8");
  CHECK(realize_group(parse_group_spec("quaternion:8")).order() == 8);

  FiniteGroup p = realize_group(parse_group_spec("product(cyclic:2,cyclic:3)"));
  CHECK(p.order() == 6);
  CHECK(p.label() == "Z2xZ3");

  FiniteGroup nested =
      realize_group(parse_group_spec("product(product(cyclic:2,cyclic:2),cyclic:2)"));
  CHECK(nested.order() == 8);
  CHECK(nested.is_abelian());
}

TEST_CASE("group spec errors are parse errors") {
  CHECK_THROWS_WITH_AS(parse_group_spec("nosuch:5"), doctest::Contains("UnknownFamily"),
                       parse_error);
  CHECK_THROWS_AS(parse_group_spec("cyclic:x"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("cyclic:"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("quaternion:4"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("product(cyclic:2)"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("product(cyclic:2,cyclic:3"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("file:"), parse_error);
  CHECK_THROWS_AS(realize_group(parse_group_spec("file:/no/such/table")), parse_error);
}

TEST_CASE("subgroup generator lists accept indices and cycles") {
  GroupSpec z6_spec = parse_group_spec("cyclic:6");
  FiniteGroup z6 = realize_group(z6_spec);
  CHECK(parse_subgroup_generators("3", z6_spec, z6) == std::vector<int>{3});
  CHECK(parse_subgroup_generators("0, 2", z6_spec, z6) == std::vector<int>{0, 2});
  CHECK(parse_subgroup_generators("1 5", z6_spec, z6) == std::vector<int>{1, 5});

  GroupSpec s3_spec = parse_group_spec("symmetric:3");
  FiniteGroup s3 = realize_group(s3_spec);
  CHECK(parse_subgroup_generators("(12)", s3_spec, s3) == std::vector<int>{2});
  CHECK(parse_subgroup_generators("(123)", s3_spec, s3) == std::vector<int>{3});

  GroupSpec s4_spec = parse_group_spec("symmetric:4");
  FiniteGroup s4 = realize_group(s4_spec);
  CHECK(parse_subgroup_generators("(123)(4)", s4_spec, s4) == std::vector<int>{8});
  CHECK(parse_subgroup_generators("(12)(34)", s4_spec, s4) == std::vector<int>{7});
  CHECK(parse_subgroup_generators("(12), (34)", s4_spec, s4) == std::vector<int>{6, 1});

  CHECK_THROWS_WITH_AS(parse_subgroup_generators("(12)", z6_spec, z6),
                       doctest::Contains("symmetric"), parse_error);
  CHECK_THROWS_WITH_AS(parse_subgroup_generators("7", z6_spec, z6),
                       doctest::Contains("outside"), parse_error);
  CHECK_THROWS_AS(parse_subgroup_generators("", z6_spec, z6), parse_error);
  CHECK_THROWS_AS(parse_subgroup_generators("(12", s3_spec, s3), parse_error);
  CHECK_THROWS_AS(parse_subgroup_generators("(11)", s3_spec, s3), parse_error);
  CHECK_THROWS_AS(parse_subgroup_generators("(14)", s3_spec, s3), parse_error);
}

TEST_CASE("the sweep catalog lists constructions in a fixed order") {
  auto labels = [](int order) {
    std::vector<std::string> out;
    for (const FiniteGroup& g : catalog_groups_of_order(order)) out.push_back(g.label());
    return out;
  };
  CHECK(labels(5) == std::vector<std::string>{"Z5"});
  CHECK(labels(6) == std::vector<std::string>{"Z6", "D3", "S3", "Z2xZ3"});
  CHECK(labels(7) == std::vector<std::string>{"Z7"});
  CHECK(labels(8) == std::vector<std::string>{"Z8", "D4", "Q8", "Z2xZ4"});
  CHECK(labels(9) == std::vector<std::string>{"Z9", "Z3xZ3"});
  CHECK(labels(12) == std::vector<std::string>{"Z12", "D6", "Z2xZ6", "Z3xZ4"});
  CHECK(labels(24).front() == "Z24");

  for (int order = 5; order <= 16; ++order)
    for (const FiniteGroup& g : catalog_groups_of_order(order)) CHECK(g.order() == order);
}
