#pragma once
// The main calculus: derived Lie / super-Lie functors of objects of the
// derived category (formal sums of shifted cyclic pieces), E-complexes,
// Theta graded groups, special-functor dimensions, symbolic formulas and
// filtration spectral-sequence pages.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "liederiv/abelian.hpp"
#include "liederiv/expr.hpp"
#include "liederiv/leibowitz.hpp"

namespace liederiv {

// One summand Z[shift] (q = 0) or Z/q[shift] with q a prime power.
struct DSummand {
  long long q = 0;
  int shift = 0;
  friend auto operator<=>(const DSummand&, const DSummand&) = default;
};
using DObject = std::vector<DSummand>;

DObject canonical_dobject(DObject x);
// Parse "Z/4 + Z[1] + Z/12[2]": composite torsion splits into prime powers.
DObject parse_dobject(const std::string& s);
std::string dobject_str(const DObject& x);
// Derived tensor product (Kuenneth for shifted cyclics).
DObject dobject_tensor(const DObject& a, const DObject& b);

struct EComplex {
  FunctorExprGraded symbolic;  // over one formal letter A
  bool unvalidated = false;    // set for the tilde variant
};

class Engine {
public:
  explicit Engine(std::shared_ptr<DkProvider> dk = oracle_dk_provider(),
                  int max_degree = 64);

  int max_degree() const { return max_degree_; }
  const DkProvider& dk() const { return *dk_; }
  std::shared_ptr<DkProvider> dk_ptr() const { return dk_; }

  // pi_* L L^m(X[n]) resp. L L_s^m(X[n]), exact up to max_degree.
  GradedAbGroup derive_lie(long long m, const DObject& x, int n = 0) const;
  GradedAbGroup derive_superlie(long long m, const DObject& x, int n = 0) const;

  // Cross-effect decomposition of L^m resp. L_s^m over `letters` formal
  // arguments, as a symbolic sum (shift 0).
  FunctorExprGraded cross_effect_expand(bool superlie, long long m, int letters) const;

  // Theta_m(A, n): the below-top part of the derived functor, symbolically.
  FunctorExprGraded theta(long long m, int n) const;
  // F_p-dims of Theta per degree for A = Z^rank.
  std::map<int, long long> theta_dims(long long m, int n, long long rank, long long p) const;
  // dim_{F_p} N^{d;p}(Z^rank) (super_: Ns).
  long long special_n_dim(long long d, long long p, long long rank, bool super_ = false) const;

  // E^m(-, n) (plain) and the tilde variant, over a formal letter.
  EComplex e_complex(long long m, int n, bool tilde = false) const;
  // Homotopy of E^m(X, n); throws UnsupportedDegreeError if an N-atom cannot
  // be evaluated on this input.
  GradedAbGroup e_complex_homotopy(long long m, const DObject& x, int n,
                                   bool tilde = false) const;

  // S1 closed forms (free A).
  FunctorExprGraded intro_prime_formula(long long p, int dim) const;
  FunctorExprGraded squarefree_formula(long long m, int dim2n) const;
  // Specialize a general formula to a free argument: derived-level >= 1 atoms
  // and Tor of torsion-free atoms vanish.
  static FunctorExprGraded specialize_free(const FunctorExprGraded& e);

  // Symbolic L_j L^d(D, nu) for a free tensor-word argument (all j at once,
  // term shift = j). superlie: values of L L_s^d instead.
  FunctorExprGraded symbolic_derived_free(bool superlie, long long d,
                                          const std::vector<long long>& arg, int nu) const;

  // E^1 page of the filtration spectral sequence for L^m((B->A)[n]) (or the
  // super analog): cell (i, q) -> expression in letters A, B.
  std::map<std::pair<int, int>, FunctorExprGraded> filtration_e1(bool superlie, long long m,
                                                                 int n) const;

  // decalage: derive_lie(p, X, l+1) == derive_superlie(p, X, l) shifted by p.
  bool decalage_check(long long p, const DObject& x, int l = 0) const;

  // degrees where tilde-E^m(Z, n) disagrees with derive_superlie(m, Z, n)
  std::vector<int> tilde_mismatch_degrees(long long m, int n) const;

private:
  GradedAbGroup derive(bool superlie, long long m, const DObject& x) const;
  GradedAbGroup derive_uncached(bool superlie, long long m, const DObject& x) const;
  GradedAbGroup n_atom_homotopy(const Atom& a, const DObject& x) const;

  std::shared_ptr<DkProvider> dk_;
  int max_degree_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<bool, long long, DObject>, GradedAbGroup> memo_;
};

}  // namespace liederiv
