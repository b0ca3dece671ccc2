#include "liederiv/leibowitz.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "liederiv/glrs.hpp"
#include "liederiv/witt.hpp"

namespace liederiv {

long long rank_L(long long r, long long k, DglsShape shape) {
  if (k < 0 || k > r) return 0;
  if (shape == DglsShape::unshifted) {
    // degree k holds products with k copies of the degree-1 generator
    long long base = moebius_multicount({r - k, k}).get_si();
    if (r % 2 == 0 && k % 4 == 2) base += moebius_multicount({(r - k) / 2, k / 2}).get_si();
    return base;
  }
  long long base = moebius_multicount({k, r - k}).get_si();
  if (r % 2 == 0 && k % 2 == 0 && (r - k) % 4 == 2)
    base += moebius_multicount({k / 2, (r - k) / 2}).get_si();
  return base;
}

long long rank_B(long long r, long long k, DglsShape shape) {
  if (k < 0 || k > r) return 0;
  long long b = 0;
  for (long long j = 0; j <= k; ++j) b = rank_L(r, j, shape) - b;
  return b;
}

namespace {

class OracleDk : public DkProvider {
public:
  explicit OracleDk(long long max_r) : max_r_(max_r) {}
  GradedAbGroup f0_homology(long long r, DglsShape shape) const override {
    if (r < 2 || r > max_r_)
      throw UnsupportedDegreeError("d_k unavailable: r=" + std::to_string(r) +
                                   " exceeds the computed range (<= " +
                                   std::to_string(max_r_) + ")");
    std::lock_guard lk(mu_);
    auto key = std::make_pair(r, shape == DglsShape::shifted);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    FreeDgls L = two_term_dgls(1, shape == DglsShape::shifted ? 1 : 0);
    GradedAbGroup h = L.component(r).all_homology();
    cache_.emplace(key, h);
    return h;
  }
  std::string source_name() const override { return "oracle"; }

private:
  long long max_r_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<long long, bool>, GradedAbGroup> cache_;
};

class PrimeZeroDk : public DkProvider {
public:
  GradedAbGroup f0_homology(long long r, DglsShape shape) const override {
    if (shape != DglsShape::unshifted || prime_power_check(r) != 1)
      throw UnsupportedDegreeError(
          "prime_zero provider only covers unshifted prime weights (r=" +
          std::to_string(r) + ")");
    return {};
  }
  std::string source_name() const override { return "prime_zero"; }

private:
  static int prime_power_check(long long r) {
    for (long long d = 2; d * d <= r; ++d)
      if (r % d == 0) return 0;
    return r >= 2 ? 1 : 0;
  }
};

class SeededDk : public DkProvider {
public:
  explicit SeededDk(const std::string& path) : path_(path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open seed file: " + path);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream is(line);
      long long r;
      std::string shape, grp;
      int degree;
      if (!(is >> r >> shape >> degree >> grp)) continue;
      DglsShape s = shape == "shifted" ? DglsShape::shifted : DglsShape::unshifted;
      if (grp != "none") data_[{r, s == DglsShape::shifted}].add(degree, parse_group(grp));
      seen_.insert({r, s == DglsShape::shifted});
    }
  }
  GradedAbGroup f0_homology(long long r, DglsShape shape) const override {
    auto key = std::make_pair(r, shape == DglsShape::shifted);
    if (!seen_.count(key))
      throw UnsupportedDegreeError("seed file " + path_ + " has no entry for r=" +
                                   std::to_string(r));
    auto it = data_.find(key);
    return it == data_.end() ? GradedAbGroup{} : it->second;
  }
  std::string source_name() const override { return "seeded:" + path_; }

private:
  std::string path_;
  std::map<std::pair<long long, bool>, GradedAbGroup> data_;
  std::set<std::pair<long long, bool>> seen_;
};

}  // namespace

std::shared_ptr<DkProvider> oracle_dk_provider(long long max_r) {
  return std::make_shared<OracleDk>(max_r);
}
std::shared_ptr<DkProvider> prime_zero_dk_provider() {
  return std::make_shared<PrimeZeroDk>();
}
std::shared_ptr<DkProvider> seeded_dk_provider(const std::string& path) {
  return std::make_shared<SeededDk>(path);
}

GradedAbGroup dgls_homology(const DglsHomQuery& q, const DkProvider& dk) {
  if (!is_prime(q.p)) throw std::invalid_argument("not a prime");
  if (q.f < 0) throw std::invalid_argument("f < 0");
  DglsShape shape = q.n % 2 == 0 ? DglsShape::unshifted : DglsShape::shifted;
  long long place = q.n % 2 == 0 ? q.r * q.n : q.r * (q.n - 1);
  GradedAbGroup f0 = dk.f0_homology(q.r, shape);
  long long lo = shape == DglsShape::unshifted ? 0 : q.r;
  GradedAbGroup out;
  for (long long k = 0; k <= q.r; ++k) {
    long long M = rank_B(q.r, k, shape);
    if (M == 0) continue;
    long long d = f0.at((int)(lo + k)).p_rank(q.p);
    FgAbGroup g;
    if (q.f == 0) {
      g.add_block(q.p, 1, d);
    } else {
      g.add_block(q.p, q.f + 1, d);
      g.add_block(q.p, q.f, M - d);
    }
    out.add((int)(lo + k + place), g);
  }
  return out;
}

}  // namespace liederiv
