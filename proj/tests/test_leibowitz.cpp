#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liederiv/glrs.hpp"
#include "liederiv/leibowitz.hpp"
#include "liederiv/tables.hpp"

using namespace liederiv;

TEST_CASE("rank formulas") {
  CHECK(rank_L(3, 1, DglsShape::unshifted) == 1);
  CHECK(rank_L(4, 2, DglsShape::unshifted) == 2);
  CHECK(rank_L(2, 0, DglsShape::unshifted) == 0);
  CHECK(rank_L(2, 2, DglsShape::unshifted) == 1);  // Gamma_2(B)
  CHECK(rank_L(6, 2, DglsShape::unshifted) == 3);
  CHECK(rank_L(6, 5, DglsShape::shifted) == 1);
  // alternating identity
  for (long long r = 2; r <= 7; ++r)
    for (auto shape : {DglsShape::unshifted, DglsShape::shifted})
      for (long long k = 0; k <= r; ++k)
        CHECK(rank_B(r, k, shape) + rank_B(r, k - 1, shape) == rank_L(r, k, shape));
  // rationally acyclic: alternating rank sum vanishes
  for (long long r = 2; r <= 7; ++r)
    for (auto shape : {DglsShape::unshifted, DglsShape::shifted}) {
      long long chi = 0;
      for (long long k = 0; k <= r; ++k)
        chi += (k % 2 ? -1 : 1) * rank_L(r, k, shape);
      CHECK(chi == 0);
    }
}

TEST_CASE("rank_B matches the boundary ranks of the explicit complexes") {
  for (long long r = 2; r <= 6; ++r)
    for (int low = 0; low <= 1; ++low) {
      ChainComplex c = two_term_dgls(1, low).component(r);
      DglsShape shape = low ? DglsShape::shifted : DglsShape::unshifted;
      for (long long k = 0; k <= r; ++k) {
        const IntMatrix& d = c.differential((int)(low * r + k) + 1);
        long long rk = d.cols() ? d.cols() - kernel_basis(d).cols() : 0;
        CHECK(rk == rank_B(r, k, shape));
      }
    }
}

TEST_CASE("dgls homology examples") {
  auto dk = oracle_dk_provider();
  GradedAbGroup h1 = dgls_homology({2, 0, 3, 1}, *dk);
  CHECK(h1.at(1) == FgAbGroup::cyclic(3));
  CHECK(h1.components().size() == 1);
  GradedAbGroup h2 = dgls_homology({4, 0, 2, 1}, *dk);
  CHECK(h2.at(2) == FgAbGroup::cyclic(4));
  CHECK(h2.at(1) == FgAbGroup::cyclic(2));
  GradedAbGroup h3 = dgls_homology({3, 1, 3, 1}, *dk);
  CHECK(h3.at(4) == FgAbGroup::cyclic(9));
  CHECK(h3.components().size() == 1);
}

TEST_CASE("Prop 4.5 assembly equals direct SNF homology") {
  auto dk = oracle_dk_provider();
  for (long long r = 2; r <= 7; ++r)
    for (int low = 0; low <= 1; ++low)
      for (long long p : {2LL, 3LL, 5LL})
        for (int f : {1, 2}) {
          long long q = 1;
          for (int i = 0; i < f; ++i) q *= p;
          GradedAbGroup direct =
              two_term_dgls(q, low).component(r).all_homology().p_primary(p);
          GradedAbGroup assembled = dgls_homology({r, low, p, f}, *dk);
          CHECK(direct == assembled);
        }
}

TEST_CASE("periodicity in the dimension") {
  auto dk = oracle_dk_provider();
  for (long long r : {2LL, 3LL, 4LL})
    for (int n = 0; n <= 3; ++n) {
      GradedAbGroup a = dgls_homology({r, n + 2, 3, 1}, *dk);
      GradedAbGroup b = dgls_homology({r, n, 3, 1}, *dk).shifted((int)(2 * r));
      CHECK(a == b);
    }
}

TEST_CASE("providers") {
  auto dk = oracle_dk_provider();
  // unshifted primes are acyclic at f = 0
  for (long long r : {2LL, 3LL, 5LL, 7LL})
    CHECK(dk->f0_homology(r, DglsShape::unshifted).is_zero());
  // shifted primes are not: the super jump
  CHECK(dk->f0_homology(3, DglsShape::shifted).at(4) == FgAbGroup::cyclic(3));
  CHECK_THROWS_AS(dk->f0_homology(8, DglsShape::unshifted), UnsupportedDegreeError);

  auto pz = prime_zero_dk_provider();
  CHECK(pz->f0_homology(5, DglsShape::unshifted).is_zero());
  CHECK_THROWS_AS(pz->f0_homology(6, DglsShape::unshifted), UnsupportedDegreeError);
  CHECK_THROWS_AS(pz->f0_homology(3, DglsShape::shifted), UnsupportedDegreeError);

  auto seeded = seeded_dk_provider(data_file("dk_seed.txt"));
  for (long long r = 2; r <= 7; ++r)
    for (auto shape : {DglsShape::unshifted, DglsShape::shifted})
      CHECK(seeded->f0_homology(r, shape) == dk->f0_homology(r, shape));
  CHECK_THROWS_AS(seeded->f0_homology(9, DglsShape::unshifted), UnsupportedDegreeError);
}
