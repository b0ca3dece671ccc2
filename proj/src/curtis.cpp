#include "liederiv/curtis.hpp"

#include <limits>
#include <sstream>

namespace liederiv {

namespace {

DObject dobject_of(const FgAbGroup& a) {
  DObject x;
  for (long long i = 0; i < a.free_rank(); ++i) x.push_back({0, 0});
  for (auto& [pp, c] : a.torsion()) {
    long long q = 1;
    for (int i = 0; i < pp.e; ++i) q *= pp.p;
    for (long long i = 0; i < c; ++i) x.push_back({q, 0});
  }
  return canonical_dobject(x);
}

}  // namespace

E1Page e1_page(const Engine& eng, const std::optional<FgAbGroup>& a, int n,
               const std::vector<long long>& r_list, int q_max,
               std::optional<long long> p) {
  if (n < 2) throw std::invalid_argument("n >= 2");
  E1Page page;
  page.symbolic = !a.has_value();
  page.localized_at = p;
  page.space = page.symbolic ? "M(A," + std::to_string(n) + ")"
                             : "M(" + a->str() + "," + std::to_string(n) + ")";
  for (long long r : r_list) {
    if (page.symbolic) {
      FunctorExprGraded vals = eng.symbolic_derived_free(false, r, {1}, n - 1);
      for (auto& [t, c] : vals.terms()) {
        if (t.shift > q_max) continue;
        if (p) {
          Atom ca = canonical_atom(t.atom);
          long long q = ca.mod != AtomMod::none ? ca.mod_p : ca.prime;
          bool is_torsion_atom = ca.mod != AtomMod::none || ca.kind == AtomKind::SpecialN ||
                                 ca.kind == AtomKind::SpecialNs;
          if (is_torsion_atom && q != *p) continue;
          if (!is_torsion_atom && *p > 0) continue;  // free tops drop under localization
        }
        ExprTerm cell = t;
        cell.shift = 0;
        page.cells[{r, t.shift}].expr.add(cell, c);
      }
    } else {
      DObject x = dobject_of(*a);
      try {
        GradedAbGroup g = eng.derive_lie(r, x, n - 1);
        if (p) g = g.p_primary(*p);
        for (auto& [q, comp] : g.components())
          if (q <= q_max) page.cells[{r, q}].group = comp;
      } catch (const UnsupportedDegreeError& e) {
        for (int q = 0; q <= q_max; ++q) {
          auto& cell = page.cells[{r, q}];
          cell.failed = true;
          cell.failure = e.what();
        }
      }
    }
  }
  return page;
}

namespace {

// smallest degree any p-branch of Theta_r(-, n-1) can reach; the i-th branch
// sits at base (n-1) r / p^i and its shortest word has d = i (p = 2) resp.
// (2p-3) i (odd p)
long long theta_min_degree(long long r, long long p, int n) {
  long long best = -1;
  long long pi = 1, rr = r;
  int v = 0;
  while (rr % p == 0) { rr /= p; ++v; }
  for (int i = 1; i <= v; ++i) {
    pi *= p;
    long long deg = (long long)(n - 1) * r / pi + (p == 2 ? i : (2 * p - 3) * i);
    if (best < 0 || deg < best) best = deg;
  }
  return best < 0 ? std::numeric_limits<long long>::max() : best;
}

}  // namespace

FunctorExprGraded moore_p_torsion_cell(const Engine& eng, long long p, int n, int k) {
  FunctorExprGraded out;
  int q = n + k - 1;
  // p-torsion comes from Theta_r with p | r; writing r = s p^v, any branch
  // needs (n-1) s <= q and (2p-3) v <= q, which bounds the sweep.
  long long v_cap = q / (p == 2 ? 1 : 2 * p - 3) + 1;
  long long r_cap = (long long)(q + 2);
  for (long long i = 0; i < v_cap; ++i) r_cap *= p;
  for (long long r = p; r <= r_cap; r += p) {
    if (theta_min_degree(r, p, n) > q) continue;
    FunctorExprGraded vals = eng.symbolic_derived_free(false, r, {1}, n - 1);
    for (auto& [t, c] : vals.terms()) {
      if (t.shift != q) continue;
      Atom ca = canonical_atom(t.atom);
      long long tp = ca.mod != AtomMod::none ? ca.mod_p : ca.prime;
      bool is_torsion_atom = ca.mod != AtomMod::none || ca.kind == AtomKind::SpecialN ||
                             ca.kind == AtomKind::SpecialNs;
      if (!is_torsion_atom || tp != p) continue;
      ExprTerm cell = t;
      cell.shift = 0;
      out.add(cell, c);
    }
  }
  return out;
}

namespace {

// printable name of L_q L^r(B, 1) for general B, with small-r rewrites;
// for r in {2,3} the value is L_j of a quadratic/cubic functor of B and
// vanishes beyond j = 1 (two-term resolution).
std::string inner_name(long long r, int q) {
  if (q < (int)r) return "";
  if (r == 1) return q == 1 ? "B" : "";
  int j = q - (int)r;
  if (r == 2 || r == 3) {
    std::string base = r == 2 ? "Gamma_2(B)" : "Ls^3(B)";
    if (j == 0) return base;
    if (j == 1) return "L_1" + base;
    return "";
  }
  return "L_" + std::to_string(q) + "L^" + std::to_string(r) + "(B,1)";
}

}  // namespace

BifunctorPage bifunctor_e1(long long r_max, int q_max) {
  BifunctorPage page;
  for (long long r = 1; r <= r_max; ++r)
    for (int q = 1; q <= q_max; ++q) {
      BifunctorCell cell;
      std::string hom = inner_name(r, q);
      std::string ext = inner_name(r, q + 1);
      if (!hom.empty()) cell.entries.push_back("Hom(A," + hom + ")");
      if (!ext.empty()) cell.entries.push_back("Ext(A," + ext + ")");
      if (!cell.entries.empty()) page.cells[{r, q}] = cell;
    }
  page.barratt = "0 -> Ext(A,Gamma_2(B)) -> [M(A,2),M(B,2)] -> Hom(A,B) -> 0";
  return page;
}

}  // namespace liederiv
