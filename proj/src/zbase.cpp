#include "liederiv/zbase.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "liederiv/words.hpp"

namespace liederiv {

std::pair<long long, int> prime_power_of(long long m) {
  if (m < 2) return {0, 0};
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      int k = 0;
      while (m % d == 0) { m /= d; ++k; }
      return m == 1 ? std::pair<long long, int>{d, k} : std::pair<long long, int>{0, 0};
    }
  }
  return {m, 1};
}

namespace {

std::mutex cache_mu;
std::map<std::tuple<int, long long, int>, GradedAbGroup> cache;  // variant,m,n

GradedAbGroup cached(int variant, long long m, int n, GradedAbGroup (*fn)(long long, int)) {
  {
    std::lock_guard lk(cache_mu);
    auto it = cache.find({variant, m, n});
    if (it != cache.end()) return it->second;
  }
  GradedAbGroup g = fn(m, n);
  std::lock_guard lk(cache_mu);
  cache.try_emplace({variant, m, n}, g);
  return g;
}

GradedAbGroup lie_z_impl(long long m, int n) {
  GradedAbGroup out;
  if (m == 1) {
    out.add(n, FgAbGroup::free_of_rank(1));
    return out;
  }
  if (n == 0) return out;  // L^m(Z) = 0 for m >= 2
  if (n % 2 == 0) {
    auto [p, k] = prime_power_of(m);
    if (p == 0) return out;  // not a prime power: vanishes in even dimensions
    FgAbGroup zp;
    zp.add_block(p, 1);
    for (auto& w : enumerate_w(p, n, k)) out.add(n + w.d(), zp);
    return out;
  }
  // odd dimension
  if (m % 2 == 1) return lie_z(m, n - 1).shifted(1);
  // even m: suspension summand plus the composition summand at doubled base
  return direct_sum(lie_z(m, n - 1).shifted(1), lie_z(m / 2, 2 * n));
}

GradedAbGroup superlie_z_offset(long long m, int n, bool literal) {
  GradedAbGroup out;
  if (m == 1) {
    out.add(n, FgAbGroup::free_of_rank(1));
    return out;
  }
  if (n == 0) {
    if (m == 2) out.add(0, FgAbGroup::free_of_rank(1));  // Gamma_2(Z) = Z
    return out;
  }
  auto [p, k] = prime_power_of(m);
  if (p == 2) {
    if (m == 2) return lie_z(2, n + 1).shifted(-2);  // decalage
    return lie_z(m, n);                              // 2-power coincidence
  }
  if (p != 0) {
    // odd prime power: tilde-indexed basis at even dimensions, desuspension at odd
    int base = n % 2 == 0 ? n : n + 1;
    int off = n % 2 == 0 ? 0 : -1;
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    FgAbGroup zp;
    zp.add_block(p, 1);
    for (auto& w : tilde_subset(enumerate_w(p, base, k), k)) {
      int deg = base + w.d() + off;
      if (!literal) deg -= (int)(pk - 1);
      out.add(deg, zp);
    }
    return out;
  }
  // not a prime power
  if (n % 2 == 1) return out;  // vanishes in odd dimensions
  if (m % 4 == 2)
    return direct_sum(superlie_z(m / 2, 2 * n), superlie_z(m, n - 1).shifted(1));
  return out;  // m = 0 mod 4 with an odd factor: vanishes
}

GradedAbGroup superlie_z_impl(long long m, int n) { return superlie_z_offset(m, n, false); }
GradedAbGroup superlie_z_literal_impl(long long m, int n) { return superlie_z_offset(m, n, true); }

}  // namespace

GradedAbGroup lie_z(long long m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("lie_z args");
  return cached(0, m, n, lie_z_impl);
}

GradedAbGroup superlie_z(long long m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("superlie_z args");
  return cached(1, m, n, superlie_z_impl);
}

GradedAbGroup superlie_z_literal(long long m, int n) {
  return cached(2, m, n, superlie_z_literal_impl);
}

}  // namespace liederiv
