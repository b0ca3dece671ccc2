#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liederiv/abelian.hpp"

using namespace liederiv;

TEST_CASE("canonical primary form") {
  FgAbGroup g = FgAbGroup::cyclic(12);
  CHECK(g.str() == "Z/4+Z/3");
  CHECK(FgAbGroup::cyclic(1).is_zero());
  CHECK(FgAbGroup::from_orders(1, {6}).str() == "Z+Z/2+Z/3");
  CHECK(parse_group("Z/4+Z/3") == g);
  CHECK(parse_group("(Z/2)^3").torsion_blocks() == 3);
}

TEST_CASE("tensor and tor") {
  FgAbGroup z4 = FgAbGroup::cyclic(4), z6 = FgAbGroup::cyclic(6);
  CHECK(tensor(z4, z6) == FgAbGroup::cyclic(2));
  CHECK(tor(z4, z6) == FgAbGroup::cyclic(2));
  CHECK(tor(FgAbGroup::free_of_rank(2), z6).is_zero());
  FgAbGroup mix = FgAbGroup::from_orders(1, {12});
  CHECK(p_part(mix, 3) == FgAbGroup::cyclic(3));
  CHECK(mod_p(mix, 3) == FgAbGroup::from_orders(0, {3, 3}));
  CHECK_THROWS(p_part(mix, 4));
}

TEST_CASE("tensor bilinearity on random small groups") {
  std::vector<FgAbGroup> gs = {FgAbGroup::cyclic(2), FgAbGroup::cyclic(9),
                               FgAbGroup::free_of_rank(1), FgAbGroup::from_orders(1, {4, 3})};
  for (auto& a : gs)
    for (auto& b : gs) {
      CHECK(tensor(a, b) == tensor(b, a));
      CHECK(tor(a, b) == tor(b, a));
      for (auto& c : gs) {
        CHECK(tensor(direct_sum(a, b), c) == direct_sum(tensor(a, c), tensor(b, c)));
        CHECK(tor(direct_sum(a, b), c) == direct_sum(tor(a, c), tor(b, c)));
      }
    }
}

TEST_CASE("graded groups") {
  GradedAbGroup g;
  g.add(2, FgAbGroup::cyclic(4));
  g.add(5, FgAbGroup::free_of_rank(1));
  CHECK(g.shifted(3).at(5) == FgAbGroup::cyclic(4));
  CHECK(g.p_primary(2).at(5).is_zero());
  GradedAbGroup m = mod_p_homotopy(g, 2);
  CHECK(m.at(2) == FgAbGroup::cyclic(2));
  CHECK(m.at(3) == FgAbGroup::cyclic(2));  // Tor of the Z/4
  CHECK(m.at(5) == FgAbGroup::cyclic(2));
  CHECK(m.at(6).is_zero());
}
