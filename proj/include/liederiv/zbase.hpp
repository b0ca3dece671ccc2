#pragma once
// Derived Lie and super-Lie functors of Z in all dimensions (closed forms).

#include "liederiv/abelian.hpp"

namespace liederiv {

// pi_* L L^m(Z[n]). Memoized; safe for concurrent use.
GradedAbGroup lie_z(long long m, int n);
// pi_* L L_s^m(Z[n]) with the corrected super degree offset -(p^k - 1).
GradedAbGroup superlie_z(long long m, int n);
// The literal Theorem degree placement (no offset), for comparison.
GradedAbGroup superlie_z_literal(long long m, int n);

// (p, k) if m = p^k with k >= 1, else nothing.
std::pair<long long, int> prime_power_of(long long m);  // {0,0} if not

}  // namespace liederiv
