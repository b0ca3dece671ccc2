#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liederiv/curtis.hpp"

using namespace liederiv;

TEST_CASE("concrete page for the mod-2 Moore space") {
  Engine eng(oracle_dk_provider(), 8);
  E1Page page = e1_page(eng, FgAbGroup::cyclic(2), 2, {1, 2, 4, 8, 16}, 7);
  CHECK(page.cells.at({2, 2}).group == FgAbGroup::cyclic(4));
  CHECK(page.cells.at({4, 6}).group == FgAbGroup::cyclic(4));
  CHECK(page.cells.at({8, 7}).group.p_rank(2) == 4);
  CHECK(page.cells.at({16, 7}).group.p_rank(2) == 7);
  CHECK(!page.cells.count({1, 2}));
  // column r = 1 concentrated at q = n-1
  CHECK(page.cells.count({1, 1}));
  // failed cells are reported, not fabricated
  Engine small(oracle_dk_provider(), 40);
  E1Page bad = e1_page(small, FgAbGroup::cyclic(2), 2, {8}, 7);
  REQUIRE(bad.cells.count({8, 1}));
  CHECK(bad.cells.at({8, 1}).failed);
  CHECK(!bad.cells.at({8, 1}).failure.empty());
}

TEST_CASE("symbolic page for M(A,3)") {
  Engine eng;
  E1Page page = e1_page(eng, std::nullopt, 3, {2, 3, 5, 6}, 10);
  CHECK(page.symbolic);
  CHECK(page.cells.at({2, 4}).expr == parse_expr("L^2(A)[0]"));
  CHECK(page.cells.at({5, 9}).expr == parse_expr("Id⊗Z/5(A)[0]"));
  CHECK(page.cells.at({6, 9}).expr == parse_expr("L^3⊗Z/2(A)[0]"));
  // 3-localized page keeps only 3-torsion
  E1Page local = e1_page(eng, std::nullopt, 3, {3, 6, 9}, 10, 3);
  CHECK(local.cells.at({3, 5}).expr == parse_expr("Id⊗Z/3(A)[0]"));
  CHECK(!local.cells.count({3, 6}));  // the free top drops
  for (auto& [rq, cell] : local.cells) {
    for (auto& [t, c] : cell.expr.terms()) {
      Atom a = canonical_atom(t.atom);
      long long p = a.mod != AtomMod::none ? a.mod_p : a.prime;
      CHECK(p == 3);
    }
  }
  // N^{3;3}(A) sits at (r,q) = (9,9)
  CHECK(local.cells.at({9, 9}).expr == parse_expr("N^{3;3}(A)[0]"));
}

TEST_CASE("p-localized concrete pages carry only p-torsion") {
  Engine eng(oracle_dk_provider(), 8);
  E1Page page = e1_page(eng, FgAbGroup::cyclic(6), 2, {2, 3, 4, 6}, 7, 3);
  for (auto& [rq, cell] : page.cells) {
    CHECK(cell.group.free_rank() == 0);
    for (auto& [pp, c] : cell.group.torsion()) CHECK(pp.p == 3);
  }
}

TEST_CASE("moore 3-torsion cells") {
  Engine eng;
  CHECK(moore_p_torsion_cell(eng, 3, 3, 7) == parse_expr("N^{3;3}(A)[0]"));
  CHECK(moore_p_torsion_cell(eng, 3, 3, 3) == parse_expr("Id⊗Z/3(A)[0]"));
  CHECK(moore_p_torsion_cell(eng, 3, 4, 6) ==
        parse_expr("Id⊗Z/3(A)[0] ⊕ Ls^2⊗Z/3(A)[0]"));
  CHECK(moore_p_torsion_cell(eng, 3, 3, 4).is_zero());
}

TEST_CASE("bifunctor page") {
  BifunctorPage page = bifunctor_e1(4, 4);
  auto has = [&](long long r, int q, const std::string& s) {
    auto it = page.cells.find({r, q});
    if (it == page.cells.end()) return false;
    for (auto& e : it->second.entries)
      if (e == s) return true;
    return false;
  };
  CHECK(has(1, 1, "Hom(A,B)"));
  CHECK(has(2, 2, "Hom(A,Gamma_2(B))"));
  CHECK(has(2, 1, "Ext(A,Gamma_2(B))"));
  CHECK(has(2, 3, "Hom(A,L_1Gamma_2(B))"));
  CHECK(has(3, 3, "Hom(A,Ls^3(B))"));
  CHECK(has(3, 2, "Ext(A,Ls^3(B))"));
  CHECK(has(3, 4, "Hom(A,L_1Ls^3(B))"));
  CHECK(has(4, 4, "Hom(A,L_4L^4(B,1))"));
  CHECK(has(4, 3, "Ext(A,L_4L^4(B,1))"));
  CHECK(page.barratt ==
        "0 -> Ext(A,Gamma_2(B)) -> [M(A,2),M(B,2)] -> Hom(A,B) -> 0");
}
