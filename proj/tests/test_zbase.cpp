#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liederiv/zbase.hpp"

using namespace liederiv;

namespace {

FgAbGroup zp(long long p, long long copies = 1) {
  FgAbGroup g;
  g.add_block(p, 1, copies);
  return g;
}

}  // namespace

TEST_CASE("lie_z closed forms") {
  GradedAbGroup g = lie_z(8, 2);
  for (int d : {6, 8, 9}) CHECK(g.at(d) == zp(2, 2));
  for (int d : {5, 7, 10, 11, 12, 13, 15}) CHECK(g.at(d) == zp(2));
  CHECK(g.at(14).is_zero());

  GradedAbGroup h = lie_z(9, 2);
  for (int d : {8, 9, 12, 13, 17}) CHECK(h.at(d) == zp(3));
  CHECK(h.components().size() == 5);

  CHECK(lie_z(6, 4).is_zero());
  CHECK(lie_z(6, 2).is_zero());
  CHECK(lie_z(10, 2).is_zero());
  CHECK(lie_z(12, 6).is_zero());
  CHECK(lie_z(1, 3).at(3) == FgAbGroup::free_of_rank(1));
  CHECK(lie_z(5, 0).is_zero());
}

TEST_CASE("superlie_z closed forms") {
  GradedAbGroup g = superlie_z(9, 2);
  for (int d : {4, 5, 9}) CHECK(g.at(d) == zp(3));
  CHECK(g.components().size() == 3);

  GradedAbGroup lit = superlie_z_literal(9, 2);
  CHECK(lit != g);  // printed theorem places them 8 higher
  for (int d : {12, 13, 17}) CHECK(lit.at(d) == zp(3));

  CHECK(superlie_z(3, 2).at(3) == zp(3));
  CHECK(superlie_z(3, 2).components().size() == 1);
  CHECK(superlie_z(2, 0).at(0) == FgAbGroup::free_of_rank(1));
  CHECK(superlie_z(5, 0).is_zero());
  CHECK(superlie_z(6, 1).is_zero());   // not a prime power, odd dimension
  CHECK(superlie_z(12, 2).is_zero());  // 0 mod 4 with an odd factor
}

TEST_CASE("two-power coincidence") {
  for (long long m : {4LL, 8LL, 16LL})
    for (int n = 0; n <= 5; ++n) CHECK(superlie_z(m, n) == lie_z(m, n));
}

TEST_CASE("odd suspension (even to odd dimension)") {
  for (long long r : {3LL, 5LL, 7LL, 9LL})
    for (int n = 0; n <= 6; n += 2) CHECK(lie_z(r, n + 1) == lie_z(r, n).shifted(1));
}

TEST_CASE("decalage across zbase") {
  for (long long p : {2LL, 3LL, 5LL})
    for (int n = 0; n <= 5; ++n)
      CHECK(superlie_z(p, n).shifted((int)p) == lie_z(p, n + 1));
}

TEST_CASE("prime-power values are elementary p-torsion") {
  // (m = 2 at odd dimensions carries the single Z class of Lambda^2)
  for (long long m : {3LL, 4LL, 8LL, 9LL, 25LL})
    for (int n = 1; n <= 6; ++n) {
      auto [p, k] = prime_power_of(m);
      GradedAbGroup v = lie_z(m, n);
      for (auto& [d, g] : v.components()) {
        CHECK(g.free_rank() == 0);
        for (auto& [pp, c] : g.torsion()) {
          CHECK(pp.p == p);
          CHECK(pp.e == 1);
        }
      }
    }
  for (int n = 2; n <= 6; n += 2) {
    GradedAbGroup v = lie_z(2, n);
    for (auto& [d, g] : v.components()) CHECK(g.free_rank() == 0);
  }
}
