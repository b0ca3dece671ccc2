#include "liederiv/witt.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liederiv {

int moebius(long long n) {
  if (n == 1) return 1;
  int r = 1;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

Int moebius_count(long long r, long long m) {
  if (r < 1 || m < 1) throw std::invalid_argument("moebius_count args");
  Int acc = 0;
  for (long long d : divisors(m)) {
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)r, (unsigned long)(m / d));
    acc += moebius(d) * pw;
  }
  return acc / Int((long)m);
}

Int moebius_multicount(const std::vector<long long>& ms) {
  long long total = std::accumulate(ms.begin(), ms.end(), 0LL);
  if (total == 0) throw std::invalid_argument("all weights zero");
  long long g = 0;
  for (long long m : ms) g = std::gcd(g, m);
  Int acc = 0;
  for (long long d : divisors(g)) {
    Int t;
    mpz_fac_ui(t.get_mpz_t(), (unsigned long)(total / d));
    for (long long m : ms) {
      Int f;
      mpz_fac_ui(f.get_mpz_t(), (unsigned long)(m / d));
      t /= f;
    }
    acc += moebius(d) * t;
  }
  return acc / Int((long)total);
}

std::string BasicProduct::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << "⊗";
    os << names.at(letters[i]);
  }
  return os.str();
}

long long BasicProduct::count_of(int letter) const {
  return std::count(letters.begin(), letters.end(), letter);
}

std::vector<BasicProduct> lyndon_words(int s, int len) {
  // Duval's algorithm, filtered to exact length
  std::vector<BasicProduct> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (w.back() < s) {
      size_t m = w.size();
      if ((int)m == len) out.push_back({w});
      while ((int)w.size() < len) w.push_back(w[w.size() - m]);
      while (!w.empty() && w.back() == s - 1) w.pop_back();
    } else {
      w.pop_back();
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BasicProduct> enumerate_basic(const std::vector<long long>& weights) {
  long long total = std::accumulate(weights.begin(), weights.end(), 0LL);
  std::vector<BasicProduct> out;
  for (auto& w : lyndon_words((int)weights.size(), (int)total)) {
    bool ok = true;
    for (size_t i = 0; i < weights.size(); ++i)
      if (w.count_of((int)i) != weights[i]) { ok = false; break; }
    if (ok) out.push_back(w);
  }
  return out;
}

std::pair<std::vector<BasicProduct>, std::vector<BasicProduct>> parity_split(
    const std::vector<BasicProduct>& set, int letter) {
  std::pair<std::vector<BasicProduct>, std::vector<BasicProduct>> out;
  for (auto& b : set)
    (b.count_of(letter) % 2 == 0 ? out.first : out.second).push_back(b);
  return out;
}

}  // namespace liederiv
