#pragma once
// Brute-force ground truth: explicit DGLS chain complexes, Koszul and dual
// de Rham complexes, special-functor kernels, and truncated Dold-Kan
// simplicial models, all reduced to integer homology.

#include <vector>

#include "liederiv/chain.hpp"
#include "liederiv/glrs.hpp"

namespace liederiv {

// Two-term complex of free abelian groups, B -f-> A with B one degree above A.
struct TwoTermMap {
  long long rank_b = 1, rank_a = 1;
  IntMatrix f;  // rank_a x rank_b
  static TwoTermMap multiplication(long long k);  // Z -k-> Z
};

// L^m(C) resp. L^m(C[1]) for C = (B -> A) placed in degrees (1,0), via the
// free-DGLS construction (complete, labeled basis, d o d verified).
ChainComplex build_dgls(long long m, const TwoTermMap& c, bool shifted);

// The same complexes assembled from the printed differential formulas
// (delta, delta_1, delta_2, delta'); m <= 4 unshifted, m <= 3 shifted,
// rank-1 inputs for m in {3,4}.
ChainComplex build_dgls_paper(long long m, const TwoTermMap& c, bool shifted);

// Truncated complex representing L L^p of coker(f) for injective f:
// degrees 0..p-1 of L^p(P -> Q) with the top term dropped.
ChainComplex build_prime_truncated(long long p, const TwoTermMap& pq);

// dim_{F_p} of N^{d;p}(Z^r) (shifted kernel) resp. Ns^{d;p}(Z^r); d <= 4.
long long special_n_kernel(long long d, long long p, long long r, bool super_ = false);

// Koszul complex 0 -> Lambda^n -> ... -> SP^n -> 0 for A = Z^r (degrees n..0,
// degree i holds Lambda^i (x) SP^{n-i}).
ChainComplex koszul_complex(int n, long long r);
// Dual de Rham complex C^n(Z^r): degree i holds Lambda^i (x) Gamma_{n-i}.
ChainComplex dual_de_rham(int n, long long r);
// dim V_{p,k}(Z^r) = rank of the kernel in the Koszul complex.
long long v_functor_dim(int p, int k, long long r);

enum class QuadraticFunctor { lambda2, gamma2, sp2, tensor2 };

// pi_i (i <= cap) of F applied to the Dold-Kan model of the two-term complex
// (L -f-> M) placed at dimension n (M in degree n).
GradedAbGroup simplicial_derived(QuadraticFunctor f, const TwoTermMap& res, int n, int cap);

// Ranks of the free GLRS on one generator of degree 1, per degree 1..maxdeg.
std::vector<long long> free_glrs_rank1_table(int maxdeg);

}  // namespace liederiv
