#include "liederiv/words.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace liederiv {

int Word::index_sum() const {
  int s = 0;
  for (auto& e : entries) s += e.index;
  return s;
}

int Word::o() const {
  int n = 0;
  if (p == 2) {
    for (auto& e : entries) n += e.index % 2;
  } else {
    for (auto& e : entries) n += e.marker == Marker::lambda;
  }
  return n;
}

int Word::d() const {
  if (p == 2) return index_sum();
  return (int)(2 * p - 2) * index_sum() - o();
}

std::string Word::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ",";
    if (p != 2) os << (entries[i].marker == Marker::lambda ? "l" : "m");
    os << entries[i].index;
  }
  os << ")";
  return os.str();
}

namespace {

void rec2(int bound, int left, bool need_odd_last, Word& cur, std::vector<Word>& out) {
  if (left == 0) {
    if (!cur.entries.empty() && (!need_odd_last || cur.entries.back().index % 2 == 1))
      out.push_back(cur);
    return;
  }
  for (int i = 1; i <= bound; ++i) {
    cur.entries.push_back({Marker::lambda, i});
    rec2(2 * i, left - 1, need_odd_last, cur, out);
    cur.entries.pop_back();
  }
}

void recp(long long p, int bound, int left, bool need_lambda_last, Word& cur,
          std::vector<Word>& out) {
  if (left == 0) {
    if (!cur.entries.empty() &&
        (!need_lambda_last || cur.entries.back().marker == Marker::lambda))
      out.push_back(cur);
    return;
  }
  for (int i = 1; i <= bound; ++i) {
    cur.entries.push_back({Marker::lambda, i});
    recp(p, (int)(p * i - 1), left - 1, need_lambda_last, cur, out);
    cur.entries.back().marker = Marker::mu;
    recp(p, (int)(p * i), left - 1, need_lambda_last, cur, out);
    cur.entries.pop_back();
  }
}

std::vector<Word> enumerate(long long p, int base, int k, bool terminal) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime");
  if (base < 0 || base % 2 != 0) throw std::invalid_argument("base must be even");
  if (k < 1) throw std::invalid_argument("length must be >= 1");
  std::vector<Word> out;
  Word cur;
  cur.p = p;
  if (p == 2) rec2(base, k, terminal, cur, out);
  else recp(p, base / 2, k, terminal, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Word> enumerate_w(long long p, int base, int k) {
  return enumerate(p, base, k, true);
}

std::vector<Word> enumerate_v(long long p, int base, int k) {
  return enumerate(p, base, k, false);
}

bool filtration_level(const Word& w, int base, int j) {
  if (j > w.length()) throw std::invalid_argument("level exceeds word length");
  if (j <= 1) return true;
  int n = base / 2;
  long long step = 1;
  for (int t = 0; t < j - 1; ++t) {
    if (w.p == 2) {
      if (w.entries[t].index != base * step) return false;
      step *= 2;
    } else {
      if (w.entries[t].marker != Marker::mu || w.entries[t].index != n * step) return false;
      step *= w.p;
    }
  }
  return true;
}

std::vector<Word> tilde_subset(const std::vector<Word>& ws, int k) {
  std::vector<Word> out;
  for (auto& w : ws) {
    if (w.length() != k) throw std::invalid_argument("length mismatch in tilde");
    long long last = w.entries.back().index;
    bool keep;
    if (w.p == 2) {
      long long u = 1;
      for (int i = 0; i < k - 1; ++i) u *= 2;
      keep = last >= u;
    } else {
      long long u = 1;
      for (int i = 0; i < k - 1; ++i) u *= w.p;
      keep = last > (u - 1) / 2;
    }
    if (keep) out.push_back(w);
  }
  return out;
}

std::vector<Word> overline_set(long long p, int base, int k) {
  if (base <= 0) return {};
  if (base % 2 == 1) {
    if (base == 1) return {};
    return enumerate_w(p, base - 1, k);
  }
  auto ws = enumerate_w(p, base, k);
  if (k == 1) return ws;  // level-2 condition is unsatisfiable at length 1
  std::vector<Word> out;
  for (auto& w : ws)
    if (!filtration_level(w, base, 2)) out.push_back(w);
  return out;
}

Int brute_count(int d, int m, int n) {
  if (n < 0) return 0;
  // memo over (bound, left) with bound clamped to left
  std::map<std::pair<int, int>, Int> memo;
  struct Rec {
    int d;
    std::map<std::pair<int, int>, Int>& memo;
    Int cnt(int bound, int left) {
      if (left == 0) return 1;
      bound = std::min(bound, left);
      auto key = std::make_pair(bound, left);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      Int tot = 0;
      for (int i = 1; i <= bound; ++i) tot += cnt(d * i, left - i);
      memo[key] = tot;
      return tot;
    }
  } rec{d, memo};
  Int r = rec.cnt(m, n);
  if (n == 0) r -= 1;  // exclude the empty sequence
  return r;
}

namespace {

using Series = std::vector<Int>;  // index = degree, length nmax+1

Series mul(const Series& a, const Series& b, int nmax) {
  Series out(nmax + 1, Int(0));
  for (int i = 0; i <= nmax; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= nmax; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series geometric(long long e, int nmax) {  // 1/(1-q^e)
  Series out(nmax + 1, Int(0));
  for (long long i = 0; i <= nmax; i += e) out[i] = 1;
  return out;
}

Series inverse(const Series& a, int nmax) {  // requires a[0] = 1
  Series out(nmax + 1, Int(0));
  out[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    Int s = 0;
    for (int k = 1; k <= n; ++k) s += a[k] * out[n - k];
    out[n] = -s;
  }
  return out;
}

}  // namespace

std::vector<Int> tangora_gf(int d, int m, int nmax) {
  if (d < 2 || m < 1 || nmax < 1) throw std::invalid_argument("tangora_gf args");
  // e(k) = (d^{k+1}-1)/(d-1); a and b are alternating sums of the partial
  // products S_k = prod_{j<=k} q^{e(j)}/(1-q^{e(j)}), with a carrying the
  // extra first-entry factor (1 - q^{m e(k)}).
  auto e = [&](int k) {
    long long v = 0, pw = 1;
    for (int i = 0; i <= k; ++i) { v += pw; pw *= d; }
    return v;
  };
  Series a(nmax + 1, Int(0)), b(nmax + 1, Int(0));
  Series S(nmax + 1, Int(0));
  S[0] = 1;
  long long esum = 0;
  for (int k = 0;; ++k) {
    long long ek = e(k);
    esum += ek;
    if (esum > nmax) break;
    Series f(nmax + 1, Int(0));
    if (ek <= nmax) f[ek] = 1;
    S = mul(S, mul(f, geometric(ek, nmax), nmax), nmax);
    int sgn = (k % 2 == 0) ? 1 : -1;
    for (int i = 0; i <= nmax; ++i) b[i] += sgn * S[i];
    Series head(nmax + 1, Int(0));
    head[0] = 1;
    if (m * ek <= nmax) head[m * ek] -= 1;
    Series t = mul(S, head, nmax);
    for (int i = 0; i <= nmax; ++i) a[i] += sgn * t[i];
  }
  Series oneminus(nmax + 1, Int(0));
  oneminus[0] = 1;
  for (int i = 1; i <= nmax; ++i) oneminus[i] = -b[i];
  Series h = mul(a, inverse(oneminus, nmax), nmax);
  return std::vector<Int>(h.begin() + 1, h.end());
}

}  // namespace liederiv
