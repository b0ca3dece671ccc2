#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liederiv/witt.hpp"

using namespace liederiv;

TEST_CASE("moebius counts") {
  CHECK(moebius_count(2, 2) == 1);
  CHECK(moebius_count(2, 3) == 2);
  CHECK(moebius_count(2, 4) == 3);
  CHECK(moebius_count(2, 6) == 9);
  CHECK(moebius_count(1, 5) == 0);
  CHECK(moebius_count(1, 1) == 1);
}

TEST_CASE("multicounts") {
  CHECK(moebius_multicount({1, 3}) == 1);
  CHECK(moebius_multicount({2, 2}) == 1);
  CHECK(moebius_multicount({1, 0}) == 1);
  CHECK(moebius_multicount({4, 0}) == 0);
  CHECK(moebius_multicount({3, 2}) == 2);
  // compositions of M_2(m)
  for (long long m = 2; m <= 8; ++m) {
    Int total = 0;
    for (long long a = 0; a <= m; ++a) total += moebius_multicount({a, m - a});
    CHECK(total == moebius_count(2, m));
  }
}

TEST_CASE("witt identity") {
  for (long long r = 1; r <= 4; ++r)
    for (long long m = 1; m <= 12; ++m) {
      Int sum = 0;
      for (long long d : divisors(m)) sum += Int((long)d) * moebius_count(r, d);
      Int pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)r, (unsigned long)m);
      CHECK(sum == pw);
    }
}

TEST_CASE("basic product enumeration matches the counts") {
  for (int letters = 2; letters <= 3; ++letters)
    for (int weight = 2; weight <= 8; ++weight) {
      long long total = 0;
      // all contents
      std::vector<long long> content(letters, 0);
      content[0] = weight;
      while (true) {
        auto basics = enumerate_basic(content);
        CHECK((long long)basics.size() == moebius_multicount(content).get_si());
        total += (long long)basics.size();
        int i = 0;
        while (i < letters - 1 && content[i] == 0) ++i;
        if (i == letters - 1) break;
        long long v = content[i];
        content[i] = 0;
        content[0] = v - 1;
        content[i + 1] += 1;
      }
      CHECK(total == moebius_count(letters, weight).get_si());
    }
}

TEST_CASE("weight-two products and parity split") {
  auto j2 = enumerate_basic({1, 1});
  REQUIRE(j2.size() == 1);
  CHECK(j2[0].str({"A", "B"}) == "A⊗B");
  CHECK(enumerate_basic({1, 2}).size() == 1);

  // J_3 split by occurrences of the first letter
  std::vector<BasicProduct> j3;
  for (auto& b : enumerate_basic({2, 1})) j3.push_back(b);
  for (auto& b : enumerate_basic({1, 2})) j3.push_back(b);
  auto [even, odd] = parity_split(j3, 0);
  CHECK(even.size() == 1);  // one A in {1,2}? no: A-count 1 is odd; 2 is even
  CHECK(odd.size() == 1);
}
