#pragma once
// Closed-form homology of the universal DGLS complexes L^r(n+1,n;p^f):
// chain ranks, boundary ranks and the (Z/p^{f+1})^{d_k} (+) (Z/p^f)^{M_k-d_k}
// assembly, with a pluggable source for the f=0 homology (the d_k data).

#include <memory>
#include <stdexcept>
#include <string>

#include "liederiv/abelian.hpp"

namespace liederiv {

enum class DglsShape { unshifted /* (1,0) */, shifted /* (2,1) */ };

struct UnsupportedDegreeError : std::runtime_error {
  explicit UnsupportedDegreeError(const std::string& what) : std::runtime_error(what) {}
};

// Rank of the weight-r chain group. For unshifted, k is the homological
// degree (0 <= k <= r); for shifted, the degree is k + r.
long long rank_L(long long r, long long k, DglsShape shape);
// Rank of the boundary subgroup B_k (same indexing); 0 outside the range.
long long rank_B(long long r, long long k, DglsShape shape);

// Source of H_*(L^r(shape; 1)), the degree data behind d_k = p-rank H_k.
class DkProvider {
public:
  virtual ~DkProvider() = default;
  // Homology of the multiplication-by-1 complex, indexed by absolute degree
  // (0..r for unshifted, r..2r for shifted). Throws UnsupportedDegreeError
  // when the datum is unavailable.
  virtual GradedAbGroup f0_homology(long long r, DglsShape shape) const = 0;
  virtual std::string source_name() const = 0;
};

// Computes f0 homology from the free-DGLS complexes; supports r <= max_r.
std::shared_ptr<DkProvider> oracle_dk_provider(long long max_r = 7);
// Zeros in every degree for the unshifted shape of a prime r; anything else
// is unsupported. Matches Prop (primepro)'s guarantee only.
std::shared_ptr<DkProvider> prime_zero_dk_provider();
// Reads the structured seed file (see data/dk_seed.txt for the format).
std::shared_ptr<DkProvider> seeded_dk_provider(const std::string& path);

struct DglsHomQuery {
  long long r = 2;
  int n = 0;       // dimension: complex (n+1, n; p^f)
  long long p = 2;
  int f = 1;
};

// H_* L^r(n+1, n; p^f) by Prop 4.5 + the Prop 4.7 periodicity shift.
GradedAbGroup dgls_homology(const DglsHomQuery& q, const DkProvider& dk);

}  // namespace liederiv
