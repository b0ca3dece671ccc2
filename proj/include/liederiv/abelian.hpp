#pragma once
// Finitely generated abelian groups in primary canonical form, and graded
// variants. All values are immutable after construction; operations are pure.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace liederiv {

using Int = mpz_class;

// One torsion block Z/p^e.
struct PrimePower {
  long long p = 0;
  int e = 0;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// free_rank copies of Z plus torsion blocks with multiplicities, keyed by
// (prime, exponent). Canonical: no zero multiplicities, e >= 1, p prime.
class FgAbGroup {
public:
  FgAbGroup() = default;
  static FgAbGroup free_of_rank(long long r);
  static FgAbGroup cyclic(const Int& order);           // splits into primary parts
  static FgAbGroup cyclic(long long order) { return cyclic(Int((long)order)); }
  static FgAbGroup from_orders(long long free_rank, const std::vector<Int>& orders);

  long long free_rank() const { return free_rank_; }
  const std::map<PrimePower, long long>& torsion() const { return torsion_; }

  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  long long torsion_blocks() const;
  // dim_{F_p}(G (x) Z/p)
  long long mod_p_dim(long long p) const;
  // number of Z/p^e blocks (any e), i.e. dim of p-torsion mod p
  long long p_rank(long long p) const;

  void add_block(long long p, int e, long long count = 1);
  void add_free(long long r) { free_rank_ += r; }

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
  friend auto operator<=>(const FgAbGroup&, const FgAbGroup&) = default;

  std::string str() const;

private:
  long long free_rank_ = 0;
  std::map<PrimePower, long long> torsion_;
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup direct_sum(const std::vector<FgAbGroup>& gs);
FgAbGroup scale(const FgAbGroup& g, long long n);
FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup p_part(const FgAbGroup& g, long long p);   // p-primary torsion only
FgAbGroup mod_p(const FgAbGroup& g, long long p);    // G (x) Z/p
bool is_prime(long long p);

// Graded abelian group: degree -> component; absent degrees are zero.
class GradedAbGroup {
public:
  GradedAbGroup() = default;
  const std::map<int, FgAbGroup>& components() const { return comps_; }
  FgAbGroup at(int degree) const;
  bool is_zero() const { return comps_.empty(); }

  void add(int degree, const FgAbGroup& g);
  GradedAbGroup shifted(int s) const;
  GradedAbGroup p_primary(long long p) const;
  GradedAbGroup truncated(int max_degree) const;   // keep degrees <= max_degree

  friend bool operator==(const GradedAbGroup&, const GradedAbGroup&) = default;

  std::string str() const;

private:
  std::map<int, FgAbGroup> comps_;
};

GradedAbGroup direct_sum(const GradedAbGroup& a, const GradedAbGroup& b);
GradedAbGroup scale(const GradedAbGroup& g, long long n);
// pi_*(X (x)^L Z/p) from pi_*(X): universal coefficients.
GradedAbGroup mod_p_homotopy(const GradedAbGroup& g, long long p);

// Parse "Z/4+Z/2", "Z^2+Z/9", "0" (the str() format).
FgAbGroup parse_group(const std::string& s);

}  // namespace liederiv
