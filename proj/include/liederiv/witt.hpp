#pragma once
// Basic tensor products (cross-effect index sets) and their Moebius counts.

#include <string>
#include <vector>

#include "liederiv/abelian.hpp"

namespace liederiv {

int moebius(long long n);
std::vector<long long> divisors(long long n);

// M_r(m) = (1/m) sum_{d|m} mu(d) r^{m/d}: number of basic products of weight m
// over r letters (= aperiodic necklaces = Lyndon words).
Int moebius_count(long long r, long long m);

// M(m_1,...,m_r) = (1/m) sum_{d | all m_i} mu(d) (m/d)! / prod (m_i/d)!.
Int moebius_multicount(const std::vector<long long>& ms);

// A basic tensor product over a finite alphabet, stored as its canonical
// aperiodic-necklace representative (Lyndon word over letter indices).
struct BasicProduct {
  std::vector<int> letters;
  friend auto operator<=>(const BasicProduct&, const BasicProduct&) = default;
  std::string str(const std::vector<std::string>& names) const;
  long long count_of(int letter) const;
};

// All Lyndon words over s letters of exact length len.
std::vector<BasicProduct> lyndon_words(int s, int len);
// Basic products with the given letter multiplicities (weights[i] copies of
// letter i). Cardinality equals moebius_multicount(weights).
std::vector<BasicProduct> enumerate_basic(const std::vector<long long>& weights);
// Partition by parity of occurrences of the chosen letter: (even, odd).
std::pair<std::vector<BasicProduct>, std::vector<BasicProduct>> parity_split(
    const std::vector<BasicProduct>& set, int letter);

}  // namespace liederiv
