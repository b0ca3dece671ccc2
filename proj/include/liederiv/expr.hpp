#pragma once
// Symbolic graded expressions in the functor atoms, used for tables over
// formal free arguments. Canonical normal form makes equality decidable.

#include <map>
#include <string>
#include <vector>

#include "liederiv/abelian.hpp"

namespace liederiv {

enum class AtomKind : uint8_t { Id, Lie, SuperLie, SP, SpecialN, SpecialNs };
enum class AtomMod : uint8_t { none, tensor_p, tor_p };

struct Atom {
  AtomKind kind = AtomKind::Id;
  long long degree = 1;   // functor degree (1 for Id)
  long long prime = 0;    // for SpecialN / SpecialNs
  AtomMod mod = AtomMod::none;
  long long mod_p = 0;
  int derived_level = 0;  // j in L_j(atom); 0 = the functor itself
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct ExprTerm {
  int shift = 0;
  Atom atom;
  std::vector<long long> arg;  // letter multiset: arg[i] copies of letter i
  friend auto operator<=>(const ExprTerm&, const ExprTerm&) = default;
};

class FunctorExprGraded {
public:
  FunctorExprGraded() = default;
  void add(const ExprTerm& t, long long mult = 1);
  void add(const FunctorExprGraded& other, long long mult = 1);
  const std::map<ExprTerm, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FunctorExprGraded shifted(int s) const;
  FunctorExprGraded at_degree(int shift) const;  // terms with that shift only
  friend bool operator==(const FunctorExprGraded&, const FunctorExprGraded&) = default;
  std::string str() const;  // canonical rendering, terms joined by " (+) "
private:
  std::map<ExprTerm, long long> terms_;
};

// Canonicalization: L^1 = Ls^1 = SP^1 = Id; N^{1;p} = Ns^{1;p} = Id (x) Z/p;
// N^{2;2} = Ns^{2;2} = Ls^2 (x) Z/2; N^{d;p} = L^d (x) Z/p and
// Ns^{d;p} = Ls^d (x) Z/p whenever p does not divide d.
Atom canonical_atom(Atom a);

std::string render_term(const ExprTerm& t);
ExprTerm parse_term(const std::string& s);
FunctorExprGraded parse_expr(const std::string& s);  // "t (+) t (+) ..." or "0"

// Evaluate an expression at free abelian letters of the given ranks: the
// resulting graded group (atoms must be concrete: no Hom/Ext).
GradedAbGroup evaluate_free(const FunctorExprGraded& e, const std::vector<long long>& ranks);
// F_p-dimension of one atom applied to a free group of the given rank.
long long atom_dim_free(const Atom& a, long long rank);

}  // namespace liederiv
