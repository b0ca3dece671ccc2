#pragma once
// Allowable word sets W^{(p)}_{2n,k}, their filtrations and statistics, and
// the bounded-ratio composition generating function.

#include <string>
#include <vector>

#include "liederiv/abelian.hpp"

namespace liederiv {

// p = 2: entries only. Odd p: each entry carries a lambda/mu marker.
enum class Marker : uint8_t { lambda = 0, mu = 1 };

struct WordEntry {
  Marker marker = Marker::lambda;  // ignored for p = 2
  int index = 0;
  friend auto operator<=>(const WordEntry&, const WordEntry&) = default;
};

struct Word {
  long long p = 2;
  std::vector<WordEntry> entries;
  friend auto operator<=>(const Word&, const Word&) = default;

  int length() const { return (int)entries.size(); }
  int index_sum() const;
  // d(w): sum of entries for p=2; (2p-2)*sum - o for odd p
  int d() const;
  // o(w): odd entries for p=2; lambda markers for odd p
  int o() const;
  std::string str() const;
};

// W^{(p)}_{base,k}; base must be even and >= 0, k >= 1. Lexicographic order.
std::vector<Word> enumerate_w(long long p, int base, int k);
// Same recursion without the terminal condition (last entry odd / last marker
// lambda). Interpretation of the paper's V-sets.
std::vector<Word> enumerate_v(long long p, int base, int k);

// w in W^{(p)}_{base,.}(j)? Level 1 is everything; level j pins the first j-1
// entries to the mu/doubling prefix.
bool filtration_level(const Word& w, int base, int j);

// Keep words with i_k >= 2^{k-1} (p=2) resp. i_k > (p^{k-1}-1)/2 (odd p).
std::vector<Word> tilde_subset(const std::vector<Word>& ws, int k);
// overline W^{(p)}_{base,k}: level1 \ level2 for even base (level2 empty at
// k=1), W_{base-1,k} for odd base.
std::vector<Word> overline_set(long long p, int base, int k);

// H_n, 1 <= n <= nmax: number of sequences of positive integers with first
// entry <= m, each next entry <= d * previous, and total sum n.
std::vector<Int> tangora_gf(int d, int m, int nmax);
Int brute_count(int d, int m, int n);

}  // namespace liederiv
