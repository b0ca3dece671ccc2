#pragma once
// Integer chain complexes with labeled bases and SNF homology.

#include <string>
#include <vector>

#include "liederiv/abelian.hpp"
#include "liederiv/matrix.hpp"

namespace liederiv {

class ChainComplex {
public:
  // modules[i] has rank ranks[i] in degree bottom+i; differentials[i] is
  // d_{bottom+i}: C_{bottom+i} -> C_{bottom+i-1} (differentials[0] unused/empty).
  ChainComplex(int bottom, std::vector<long long> ranks,
               std::vector<IntMatrix> differentials,
               std::vector<std::vector<std::string>> labels = {});

  int bottom_degree() const { return bottom_; }
  int top_degree() const { return bottom_ + (int)ranks_.size() - 1; }
  long long rank(int degree) const;
  const IntMatrix& differential(int degree) const;  // d_degree
  const std::vector<std::string>& labels(int degree) const;

  FgAbGroup homology(int degree) const;
  GradedAbGroup all_homology() const;

private:
  int bottom_;
  std::vector<long long> ranks_;
  std::vector<IntMatrix> diffs_;
  std::vector<std::vector<std::string>> labels_;
};

// The cone of the identity map of c (contractible); for property tests.
ChainComplex identity_cone(const ChainComplex& c);

}  // namespace liederiv
