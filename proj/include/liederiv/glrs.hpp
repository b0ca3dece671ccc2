#pragma once
// Free differential graded Lie ring with squares on a finite set of graded
// generators, realized inside the tensor algebra. Weight components come out
// as explicit integer chain complexes in the Lyndon-bracket + square basis.

#include <map>
#include <string>
#include <vector>

#include "liederiv/chain.hpp"

namespace liederiv {

class FreeDgls {
public:
  // degrees[i]: homological degree of generator i (>= 0).
  // d[i][j]: coefficient of generator j in the differential of generator i.
  FreeDgls(std::vector<int> degrees, std::vector<std::vector<long long>> d,
           std::vector<std::string> names = {});

  int generators() const { return (int)degs_.size(); }
  int degree_of_word(const std::vector<uint8_t>& w) const;

  // The weight-m component as a chain complex with basis labels.
  ChainComplex component(long long m) const;

  // Basis counts of the weight-m component per degree (no differentials).
  std::vector<long long> component_ranks(long long m) const;

private:
  std::vector<int> degs_;
  std::vector<std::vector<long long>> dmat_;
  std::vector<std::string> names_;
};

// The chain complex (Z -k-> Z)[low]: generators b in degree low+1, a in
// degree low, db = k a.
FreeDgls two_term_dgls(long long k, int low);

}  // namespace liederiv
