#pragma once
// Curtis lower-central-series spectral sequence E^1 pages for Moore spaces,
// and the bifunctor variant with Hom/Ext entries. E^1 only: the paper gives
// no differentials, and none are computed here.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liederiv/engine.hpp"

namespace liederiv {

struct E1Cell {
  // exactly one of the two is meaningful, depending on the page kind
  FgAbGroup group;
  FunctorExprGraded expr;
  bool failed = false;       // engine could not compute this cell
  std::string failure;       // the missing datum
};

struct E1Page {
  std::string space;
  bool symbolic = false;
  std::optional<long long> localized_at;
  std::map<std::pair<long long, int>, E1Cell> cells;  // (r, q)
};

// E^1_{r,q} = L_q L^r(A, n-1) for the Moore space M(A, n). Concrete when
// `a` is given; symbolic over a free letter otherwise.
E1Page e1_page(const Engine& eng, const std::optional<FgAbGroup>& a, int n,
               const std::vector<long long>& r_list, int q_max,
               std::optional<long long> p = std::nullopt);

// p-torsion of pi_{n+k} M(A,n) for free A, read off the E^1 page: the sum of
// the p-primary parts of L_{n+k-1} L^r(A, n-1) over all r (no differentials
// survive in the displayed range).
FunctorExprGraded moore_p_torsion_cell(const Engine& eng, long long p, int n, int k);

struct BifunctorCell {
  std::vector<std::string> entries;  // "Hom(A, ...)" / "Ext(A, ...)" strings
};

struct BifunctorPage {
  std::map<std::pair<long long, int>, BifunctorCell> cells;  // (r, q)
  std::string barratt;  // the Barratt short exact sequence summary
};

// E^1 of [Sigma^{q+1} M(A,1), M(B,2)]: cell (r,q) holds
// Hom(A, L_q L^r(B,1)) (+) Ext(A, L_{q+1} L^r(B,1)), with the small-r
// identifications (Gamma_2, L_s^3, ...) applied to the inner names.
BifunctorPage bifunctor_e1(long long r_max, int q_max);

}  // namespace liederiv
