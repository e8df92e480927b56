#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qsrg/perm.hpp"

using qsrg::compose;
using qsrg::orbit_of;
using qsrg::Perm;

TEST_CASE("default and explicit identity permutations") {
  CHECK(Perm().degree() == 0);
  CHECK(Perm().is_identity());

  Perm id(4);
  CHECK(id.degree() == 4);
  CHECK(id.is_identity());
  for (int i = 0; i < 4; ++i) CHECK(id(i) == i);
}

TEST_CASE("from_images validates bijectivity") {
  CHECK(Perm::from_images({2, 0, 1}).degree() == 3);
  CHECK_THROWS_WITH_AS(Perm::from_images({0, 0, 1}),
                       doctest::Contains("NotAPermutation"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Perm::from_images({0, 3, 1}),
                       doctest::Contains("NotAPermutation"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Perm::from_images({0, -1, 1}),
                       doctest::Contains("NotAPermutation"), std::invalid_argument);
}

TEST_CASE("compose applies the right factor first") {
  // a = (0 1), b = (1 2); apply b then a: 0 -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0.
  Perm a = Perm::from_images({1, 0, 2});
  Perm b = Perm::from_images({0, 2, 1});
  CHECK(compose(a, b) == Perm::from_images({1, 2, 0}));
  CHECK(compose(b, a) == Perm::from_images({2, 0, 1}));

  Perm c = Perm::from_images({3, 0, 2, 1});
  CHECK(compose(c, c.inverse()).is_identity());
  CHECK(compose(c.inverse(), c).is_identity());
}

TEST_CASE("compose rejects mixed degrees") {
  CHECK_THROWS_WITH_AS(compose(Perm(2), Perm(3)), doctest::Contains("DegreeMismatch"),
                       std::invalid_argument);
}

TEST_CASE("order is the lcm of cycle lengths") {
  CHECK(Perm(5).order() == 1);
  CHECK(Perm::from_images({1, 2, 0, 4, 3}).order() == 6);  // 3-cycle and 2-cycle
  CHECK(Perm::from_images({1, 0}).order() == 2);
  CHECK(Perm::from_images({1, 2, 3, 4, 5, 6, 0}).order() == 7);
}

TEST_CASE("cycle strings name moved points only") {
  CHECK(Perm(3).to_cycle_string() == "id");
  CHECK(Perm::from_images({1, 2, 0, 4, 3}).to_cycle_string() == "(0 1 2)(3 4)");
  CHECK(Perm::from_images({0, 1, 3, 2}).to_cycle_string() == "(2 3)");
}

TEST_CASE("orbit_of walks the generated group") {
  // (0 1 2) and (3 4) act on 5 points.
  std::vector<Perm> gens{Perm::from_images({1, 2, 0, 3, 4}),
                         Perm::from_images({0, 1, 2, 4, 3})};
  CHECK(orbit_of(gens, 0) == std::vector<int>{0, 1, 2});
  CHECK(orbit_of(gens, 4) == std::vector<int>{3, 4});
  CHECK(orbit_of({}, 7) == std::vector<int>{7});

  // A single long cycle reaches everything from any seed.
  std::vector<Perm> cycle{Perm::from_images({1, 2, 3, 0})};
  CHECK(orbit_of(cycle, 2) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("orbit_of rejects out-of-range seeds") {
  std::vector<Perm> gens{Perm(3)};
  CHECK_THROWS_WITH_AS(orbit_of(gens, 3), doctest::Contains("IndexOutOfRange"),
                       std::out_of_range);
}
